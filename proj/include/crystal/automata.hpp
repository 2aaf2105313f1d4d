#ifndef CRYSTAL_AUTOMATA_HPP
#define CRYSTAL_AUTOMATA_HPP

#include <map>
#include <random>
#include <vector>

#include "crystal/plactic_nf.hpp"

// The normal-form language automaton, streaming left/right multiplication
// passes and their materialized transducers, the quadratic word problem,
// and the length-difference bounds.

namespace crystal {

// Deterministic acceptor of the irreducible Sigma-words: one state per
// generator plus a start state, all accepting; a transition from c_sigma
// on c_tau exists iff the pair spells a tableau.
struct NfDfa {
    CrystalType type;
    std::vector<AdmissibleColumn> sigma;
    // allowed[i][j]: c_{sigma[j]} may follow c_{sigma[i]}.
    std::vector<std::vector<char>> allowed;

    int num_states() const { return static_cast<int>(sigma.size()) + 1; }
    bool accepts(const SigmaWord& w) const;
};

NfDfa nf_dfa(const CrystalType& type);

// nf(u * c_x) for irreducible u, computed by a single right-to-left
// streaming pass with a carry of at most two symbols (window of at most
// three).  Throws std::logic_error if the pass emits an unstable symbol.
SigmaWord right_mul(const RuleTable& table, const SigmaWord& u, Letter x);

// nf(c_x * u) for irreducible u, by the mirrored left-to-right pass.
SigmaWord left_mul(const RuleTable& table, Letter x, const SigmaWord& u);

// Fold right_mul over the letters of w: the quadratic-time word problem.
SigmaWord incremental_nf(const RuleTable& table, const Word& w);
SigmaWord incremental_nf(const CrystalType& type, const Word& w);

// Monoid equality of words (same position in isomorphic components).
bool equal(const CrystalType& type, const Word& u, const Word& v);
bool same_position(const CrystalType& type, const Word& u, const Word& v);

// Do u and v lie in isomorphic components of the crystal graph?
bool components_isomorphic(const CrystalType& type, const Word& u,
                           const Word& v);

enum class Side { Left, Right };

// A materialized streaming pass: states are the reachable carry windows
// (sequences of at most two column symbols), inputs are generators, and
// outputs are the emitted generators.  Feeding c_x then the symbols of u
// (reversed for the right side) and flushing the final state reproduces
// right_mul / left_mul.
struct Transducer {
    Side side;
    CrystalType type;
    std::vector<std::vector<Word>> states;  // state 0 is the empty carry
    struct Transition {
        int next;
        std::vector<Word> output;
    };
    std::map<std::pair<int, Word>, Transition> delta;

    int state_of(const std::vector<Word>& window) const;
};

// Builds the transducer by closure over reachable carry windows; throws
// if a window ever exceeds two symbols between steps.
Transducer materialize_transducer(const RuleTable& table, Side side);

// Replays the transducer on (u, x); used to cross-check the passes.
SigmaWord run_transducer(const Transducer& td, const RuleTable& table,
                         const SigmaWord& u, Letter x);

// Maximum of | |nf(u c_x)| - |u| | (and the left-hand analogue) over
// `samples` random irreducible words and all letters: multiplying by a
// generator changes the number of columns by at most 1 for the classical
// types and at most 2 for G2.
int length_bound_report(const RuleTable& table, int samples,
                        std::mt19937& rng);

// Uniformly-ish random irreducible Sigma-word with at most max_len
// symbols (random walk over the tableau-pair graph).
SigmaWord random_irreducible(const RuleTable& table, int max_len,
                             std::mt19937& rng);

}  // namespace crystal

#endif  // CRYSTAL_AUTOMATA_HPP
