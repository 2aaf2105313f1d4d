#ifndef CRYSTAL_PLACTIC_NF_HPP
#define CRYSTAL_PLACTIC_NF_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "crystal/tableaux.hpp"

// The finite complete rewriting system over the column-generator
// alphabet Sigma: two-column normal forms, the rule table, the
// noetherian measure, and the rewriting engine.

namespace crystal {

// The generator c_sigma for an admissible column sigma.
struct ColumnSymbol {
    AdmissibleColumn column;

    bool operator==(const ColumnSymbol&) const = default;
    int height() const { return column.height(); }
};

// A word over Sigma.  The symbol order is reading order: symbols[0] is
// the rightmost column of the planar form, and heights weakly increase
// along the word in any tableau.
struct SigmaWord {
    std::vector<ColumnSymbol> symbols;

    bool operator==(const SigmaWord&) const = default;
    std::size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }
};

// A rule c_sigma c_tau -> rhs.  rhs has 0 to 2 symbols for the
// classical types and 0 to 3 for G2, and always spells a tableau.
struct RewriteRule {
    ColumnSymbol lhs_first;   // c_sigma
    ColumnSymbol lhs_second;  // c_tau
    std::vector<ColumnSymbol> rhs;
};

// The complete rewriting system (Sigma, T).  Immutable once built.
class RuleTable {
public:
    RuleTable(CrystalType type, std::vector<AdmissibleColumn> sigma,
              std::map<std::pair<Word, Word>, RewriteRule> rules);

    const CrystalType& type() const { return type_; }
    const std::vector<AdmissibleColumn>& sigma() const { return sigma_; }
    const std::map<std::pair<Word, Word>, RewriteRule>& rules() const {
        return rules_;
    }

    // The rule for c_sigma c_tau, or nullptr if the pair is irreducible.
    const RewriteRule* find(const AdmissibleColumn& sigma,
                            const AdmissibleColumn& tau) const;

    // Position of the column in the Sigma enumeration order; this is the
    // fixed total order used to break ties in the noetherian order.
    int symbol_index(const Column& c) const;

private:
    CrystalType type_;
    std::vector<AdmissibleColumn> sigma_;
    std::map<std::pair<Word, Word>, RewriteRule> rules_;
    std::map<Word, int> index_;
};

// Does c_sigma c_tau spell a tableau (tau may stand directly to the
// left of sigma)?  Pairs that do not are exactly the reducible ones.
bool is_tableau_pair(const CrystalType& type, const AdmissibleColumn& sigma,
                     const AdmissibleColumn& tau);

// The tableau P(alpha beta) of a highest-weight two-column reading,
// recovered from the shape determined by the congruence invariants.
// Precondition: reading(alpha) + reading(beta) is of highest weight.
Tabloid two_column_highest_nf(const CrystalType& type,
                              const AdmissibleColumn& alpha,
                              const AdmissibleColumn& beta);

// The tableau P(sigma tau) for any pair: raise to highest weight,
// take the normal form there, and replay the recorded operators.
Tabloid two_column_nf(const CrystalType& type, const AdmissibleColumn& sigma,
                      const AdmissibleColumn& tau);

// Builds the full rule table: one rule per reducible ordered pair.
// Throws std::logic_error with diagnostics if a computed rule violates
// the rule-shape invariants.
RuleTable build_rule_table(const CrystalType& type);

// A shared, lazily built table per type (thread-safe).
const RuleTable& rule_table_for(const CrystalType& type);

// The noetherian measure: sum of the subscript lengths.
int measure_L(const SigmaWord& w);

// The strict well-founded order used to prove termination: compare by
// L, then by word length, then lexicographically by symbol index.
bool noeth_less(const RuleTable& table, const SigmaWord& u,
                const SigmaWord& v);

enum class RewriteStrategy { Leftmost, Rightmost, Random };

// Rewrites w to its unique irreducible form.  Asserts that every step
// strictly decreases the noetherian order and that the step count stays
// within the termination guard.  `rng` is only used by Random.
SigmaWord rewrite_nf(const RuleTable& table, SigmaWord w,
                     RewriteStrategy strategy = RewriteStrategy::Leftmost,
                     std::mt19937* rng = nullptr);

// Encodes the letters of w as height-1 column symbols.
SigmaWord letters_to_sigma(const CrystalType& type, const Word& w);

Word reading(const SigmaWord& w);

Tabloid to_tabloid(const SigmaWord& w);
SigmaWord to_sigma_word(const Tabloid& t);

// End-to-end normal form: encode, rewrite, read.
Word nf_word(const RuleTable& table, const Word& w);
Word nf_word(const CrystalType& type, const Word& w);

std::string format_sigma_word(const SigmaWord& w);

}  // namespace crystal

#endif  // CRYSTAL_PLACTIC_NF_HPP
