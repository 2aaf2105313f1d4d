#ifndef CRYSTAL_TABLEAUX_HPP
#define CRYSTAL_TABLEAUX_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crystal/core.hpp"

// Columns, admissible columns and their splits, tabloids, the column
// precedence relation, and tableaux.

namespace crystal {

// A column, stored top to bottom.
struct Column {
    Word cells;

    bool operator==(const Column&) const = default;
    int height() const { return static_cast<int>(cells.size()); }
};

// An admissible column together with its two splits.  For types A and G2
// the splits equal the column itself.
struct AdmissibleColumn {
    Column column;
    Column l_split;
    Column r_split;

    bool operator==(const AdmissibleColumn&) const = default;
    int height() const { return column.height(); }
};

// A sequence of admissible columns stored in reading order: the rightmost
// column of the planar form comes first.  May be empty.
struct Tabloid {
    std::vector<AdmissibleColumn> columns;

    bool operator==(const Tabloid&) const = default;
};

// Column heights leftmost to rightmost; for type D, `bar` marks the
// variant whose full-height rows end with n-bar instead of n.
struct Shape {
    std::vector<int> heights;
    bool bar = false;

    bool operator==(const Shape&) const = default;
};

// Structural (per-type) column check only; nullopt if w is not a column.
std::optional<Column> parse_column_word(const CrystalType& type, const Word& w);

// Number of symbols x in the column with x <= z or z-bar <= x.
int n_count(const CrystalType& type, const Column& beta, Letter z);

// Number of arrows between a and b in the G2 crystal basis chain.
int g2_dist(Letter a, Letter b);

// The splitting (l, r) = (ell(beta), r(beta)); nullopt when the column
// cannot be split.  For types A and G2 returns (beta, beta).
std::optional<std::pair<Column, Column>> split(const CrystalType& type,
                                               const Column& beta);

bool is_admissible(const CrystalType& type, const Column& beta);

std::optional<AdmissibleColumn> make_admissible(const CrystalType& type,
                                                const Column& beta);

// The precedence relation: does b2 precede b1 (b2 may stand directly to
// the left of b1 in a tableau)?
bool precedes(const CrystalType& type, const AdmissibleColumn& b2,
              const AdmissibleColumn& b1);

// Extra type D tableau condition on an adjacent pair (b2 left, b1 right),
// decided at the highest-weight end of the pair's crystal component.
// Always true for other types.  Results are cached per column pair.
bool dn_pair_ok(const CrystalType& type, const AdmissibleColumn& b2,
                const AdmissibleColumn& b1);

bool is_tableau(const CrystalType& type, const Tabloid& t);

// Is w the reading of some tableau?  Tries every factorization of w
// into admissible columns with weakly increasing heights in reading
// order (column heights decrease left to right in the planar form).
bool is_tableau_reading(const CrystalType& type, const Word& w);

Word reading(const Tabloid& t);

// The tabloid of height-1 columns whose reading is w.
Tabloid letters_as_tabloid(const CrystalType& type, const Word& w);

Shape shape_of(const Tabloid& t);

// The row-filled highest-weight tableau of the given shape.
Tabloid highest_weight_tableau(const CrystalType& type, const Shape& shape);

// The shape of the tableau congruent to a highest-weight word, recovered
// from congruence invariants (content for classical types, weight for G2).
// nullopt if the invariants do not describe a valid shape (which cannot
// happen for genuine highest-weight words).
std::optional<Shape> shape_for_highest(const CrystalType& type, const Word& w);

// All structural columns (not necessarily admissible) of a given height,
// in lexicographic order of the type's order_key.
std::vector<Column> enumerate_columns(const CrystalType& type, int height);

// All admissible columns, ordered by height then lexicographically.
std::vector<AdmissibleColumn> enumerate_admissible_columns(const CrystalType& type);

// Text form "[t1 t2 ... tk]"; tabloids as space-separated bracketed
// columns in reading order.
std::string format_column(const Column& c);
std::optional<Column> parse_column_text(const CrystalType& type, const std::string& text);
std::string format_tabloid(const Tabloid& t);

}  // namespace crystal

#endif  // CRYSTAL_TABLEAUX_HPP
