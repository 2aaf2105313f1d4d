#ifndef CRYSTAL_PRESENTATIONS_HPP
#define CRYSTAL_PRESENTATIONS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "crystal/core.hpp"

// Defining relations of the plactic monoids and a breadth-first
// congruence-closure oracle used to certify normal forms at small scale.

namespace crystal {

// An unordered relation (lhs, rhs): the congruence identifies the two words.
struct Relation {
    Word lhs;
    Word rhs;

    bool operator==(const Relation&) const = default;
};

struct Presentation {
    CrystalType type;
    std::vector<Relation> relations;
};

// The auxiliary partial map on two-letter G2 words and its inverse;
// nullopt outside the domain.
std::optional<Word> theta(const Word& ab);
std::optional<Word> theta_inverse(const Word& ab);

// Materializes the relation sets for the given type.  Every relation is
// checked to be weight-preserving on construction.
Presentation build_presentation(const CrystalType& type);

// All words obtained from w by replacing one occurrence of one side of
// one relation by the other side.  Sorted, without duplicates, and
// without w itself unless reachable by a genuine replacement.
std::vector<Word> one_step_neighbors(const Presentation& p, const Word& w);

struct OracleLimits {
    std::size_t max_class_size = 1'000'000;
    // Maximum explored word length; -1 means |input| + 2.
    int max_length = -1;
};

// The congruence class of w explored breadth-first within the limits,
// sorted.  Throws std::runtime_error if a limit is exceeded.
std::vector<Word> oracle_class(const Presentation& p, const Word& w,
                               const OracleLimits& limits = {});

// The unique tableau reading in the congruence class of w.  Throws
// std::runtime_error if a limit is exceeded or if the explored class
// does not contain exactly one tableau reading.
Word oracle_nf(const Presentation& p, const Word& w,
               const OracleLimits& limits = {});

}  // namespace crystal

#endif  // CRYSTAL_PRESENTATIONS_HPP
