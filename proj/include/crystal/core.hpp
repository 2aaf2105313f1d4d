#ifndef CRYSTAL_CORE_HPP
#define CRYSTAL_CORE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Core crystal-basis machinery: typed alphabets, Kashiwara operators on
// letters and words, weights, and highest-weight computations.
//
// Letters are encoded as plain integers: k > 0 is the unbarred letter k,
// -k is the barred letter k-bar, and 0 is the special letter 0 (present in
// types B and G2 only).  Words are vectors of letters.

namespace crystal {

enum class Family : std::uint8_t { A, B, C, D, G2 };

struct CrystalType {
    Family family = Family::A;
    int rank = 1;  // G2 always has rank 2

    bool operator==(const CrystalType&) const = default;
};

using Letter = int;
using Word = std::vector<Letter>;
using Weight = std::vector<long long>;
using OperatorSequence = std::vector<int>;

enum class Cmp : std::uint8_t { Less, Equal, Greater, Incomparable };

// Parse a type spec string: "A:n", "B:n", "C:n", "D:n" (n >= 1; D needs
// n >= 2), or "G2".
std::optional<CrystalType> parse_type(const std::string& spec);
std::string to_string(const CrystalType& type);

// The barred partner of a letter (0 is self-barred).
constexpr Letter bar(Letter x) { return -x; }

// All letters of the alphabet, listed in increasing order.  For type D,
// where n and n-bar are incomparable, n is listed before n-bar.
std::vector<Letter> alphabet(const CrystalType& type);

bool has_letter(const CrystalType& type, Letter x);

// Number of operator labels: n-1 for A_n, n for B_n/C_n/D_n, 2 for G2.
int num_labels(const CrystalType& type);

// Dimension of the weight lattice used by weight(): n for the classical
// types, 2 for G2.
int weight_dim(const CrystalType& type);

// Position of a letter in a linear extension of the alphabet order
// (the extension used everywhere a total order is needed, e.g. for
// lexicographic enumeration).  For type D, n comes just before n-bar.
int order_key(const CrystalType& type, Letter x);

// Compare two letters in the alphabet order.  Only type D can return
// Incomparable (for the pair {n, n-bar}).
Cmp letter_compare(const CrystalType& type, Letter x, Letter y);

// Single edge of the crystal basis: f_i on one letter, and its inverse.
std::optional<Letter> basis_edge_f(const CrystalType& type, int i, Letter x);
std::optional<Letter> basis_edge_e(const CrystalType& type, int i, Letter x);

// How many times e_i (resp. f_i) can be applied to a single letter.
int eps_letter(const CrystalType& type, int i, Letter x);
int phi_letter(const CrystalType& type, int i, Letter x);

// Result of the bracketing map rho_i on a word: the reduced word -^p +^q,
// plus the positions of the letters that e_i / f_i would act on (-1 when
// the operator is undefined).
struct RhoResult {
    int minus_count = 0;
    int plus_count = 0;
    int e_pos = -1;
    int f_pos = -1;
};

RhoResult rho(const CrystalType& type, int i, const Word& w);

// Kashiwara operators on words; nullopt when undefined.
std::optional<Word> op_e(const CrystalType& type, int i, const Word& w);
std::optional<Word> op_f(const CrystalType& type, int i, const Word& w);

// Weight of a letter / word in Z^{weight_dim}.
Weight letter_weight(const CrystalType& type, Letter x);
Weight weight(const CrystalType& type, const Word& w);

// Content of a word: component a-1 counts occurrences of a minus
// occurrences of a-bar, for a = 1..max letter (3 for G2).  This is a
// congruence invariant for the classical types (for G2 use weight()).
std::vector<long long> content(const CrystalType& type, const Word& w);

bool is_highest_weight(const CrystalType& type, const Word& w);

// Repeatedly apply e_i, always choosing the smallest applicable label,
// until the word is of highest weight.  Returns the highest-weight word
// and the sequence of labels applied, in application order.
struct RaiseResult {
    Word highest;
    OperatorSequence labels;
};

RaiseResult raise_to_highest(const CrystalType& type, const Word& w);

// Apply a sequence of e (resp. f) operators left to right; nullopt if any
// step is undefined.
std::optional<Word> apply_e_sequence(const CrystalType& type, const Word& w,
                                     const OperatorSequence& labels);
std::optional<Word> apply_f_sequence(const CrystalType& type, const Word& w,
                                     const OperatorSequence& labels);

// Text encoding: letter k as "k", k-bar as "-k", zero as "0"; words are
// whitespace-separated letter tokens.
std::optional<Letter> parse_letter(const CrystalType& type, const std::string& tok);
std::string format_letter(Letter x);
std::optional<Word> parse_word(const CrystalType& type, const std::string& text);
std::string format_word(const Word& w);

}  // namespace crystal

#endif  // CRYSTAL_CORE_HPP
