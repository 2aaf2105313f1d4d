#include "crystal/presentations.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

#include "crystal/tableaux.hpp"

namespace crystal {

namespace {

bool lt(const CrystalType& type, Letter a, Letter b) {
    return letter_compare(type, a, b) == Cmp::Less;
}

bool le(const CrystalType& type, Letter a, Letter b) {
    const Cmp c = letter_compare(type, a, b);
    return c == Cmp::Less || c == Cmp::Equal;
}

const std::vector<std::pair<Word, Word>>& theta_table() {
    static const std::vector<std::pair<Word, Word>> table = {
        {{2, 1}, {1, 2}},   {{3, 1}, {1, 3}},   {{0, 1}, {2, 3}},
        {{-3, 1}, {2, 0}},  {{-3, 2}, {2, -3}}, {{-2, 1}, {3, 0}},
        {{-2, 2}, {3, -3}}, {{-1, 1}, {0, 0}},  {{-1, 2}, {0, -3}},
        {{-2, 3}, {3, -2}}, {{-1, 3}, {0, -2}}, {{-1, 0}, {-3, -2}},
        {{-1, -3}, {-3, -1}}, {{-1, -2}, {-2, -1}},
    };
    return table;
}

class RelationSet {
public:
    explicit RelationSet(const CrystalType& type) : type_(type) {}

    void add(Word lhs, Word rhs) {
        if (weight(type_, lhs) != weight(type_, rhs))
            throw std::logic_error("relation is not weight-preserving: " +
                                   format_word(lhs) + " = " + format_word(rhs));
        auto key = std::minmax(lhs, rhs);
        if (seen_.insert(key).second)
            relations_.push_back({std::move(lhs), std::move(rhs)});
    }

    std::vector<Relation> take() { return std::move(relations_); }

private:
    CrystalType type_;
    std::set<std::pair<Word, Word>> seen_;
    std::vector<Relation> relations_;
};

// Knuth-type relations R1 and R2, shared by the classical types (the
// A_n sets are the restrictions of the B_n ones to the A_n alphabet).
void add_knuth(const CrystalType& type, RelationSet& out) {
    const auto alpha = alphabet(type);
    // In type D the incomparable pair {n, n-bar} behaves like the
    // equality case of the Knuth chains: (yzx, yxz) needs x < y <= z
    // and (xzy, zxy) needs x <= y < z, with n "equal" to n-bar.
    // Without these instances the congruence misses crystal-congruent
    // words such as 2 1 2bar ~ 2 2bar 1 in D_2.
    auto dpair = [&](Letter a, Letter b) {
        return type.family == Family::D && a == -b &&
               (a == type.rank || b == type.rank);
    };
    for (Letter x : alpha)
        for (Letter y : alpha)
            for (Letter z : alpha) {
                if (x == bar(z)) continue;
                const bool xy = lt(type, x, y);
                const bool yz = lt(type, y, z);
                if (xy && (yz || dpair(y, z))) out.add({y, z, x}, {y, x, z});
                if ((xy || dpair(x, y)) && yz) out.add({x, z, y}, {z, x, y});
            }
    for (Letter x : alpha)
        for (Letter y : alpha) {
            if (!lt(type, x, y) || x == bar(y)) continue;
            if (x != 0) out.add({x, y, x}, {x, x, y});
            if (y != 0) out.add({x, y, y}, {y, x, y});
        }
}

// Contraction/expansion relations R3 shared by types B, C and D, minus
// the relation involving 0 for C and D.
void add_r3(const CrystalType& type, RelationSet& out) {
    const int n = type.rank;
    const auto alpha = alphabet(type);
    for (Letter x = 2; x <= n; ++x)
        for (Letter y : alpha) {
            if (!(le(type, x, y) && le(type, y, bar(x)))) continue;
            out.add({y, bar(x - 1), x - 1}, {y, x, bar(x)});
            out.add({x, bar(x), y}, {bar(x - 1), x - 1, y});
        }
    if (type.family == Family::B) out.add({0, -n, n}, {-n, n, 0});
}

void add_r4_b(const CrystalType& type, RelationSet& out) {
    for (Letter x = 1; x <= type.rank; ++x) {
        out.add({0, 0, x}, {0, x, 0});
        out.add({0, bar(x), 0}, {bar(x), 0, 0});
    }
}

void add_r4_d(const CrystalType& type, RelationSet& out) {
    const Letter n = type.rank;
    out.add({n, -n, -n}, {bar(n - 1), n - 1, -n});
    out.add({-n, n, n}, {bar(n - 1), n - 1, n});
    out.add({-n, bar(n - 1), n - 1}, {-n, -n, n});
    out.add({n, bar(n - 1), n - 1}, {n, n, -n});
}

// Erase one occurrence of each letter of `pair` from w so that the
// remainder is still a column word.
Word erase_pair(const CrystalType& type, const Word& w, Letter a, Letter b) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != a) continue;
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (j == i || w[j] != b) continue;
            Word rest;
            for (std::size_t k = 0; k < w.size(); ++k)
                if (k != i && k != j) rest.push_back(w[k]);
            if (rest.empty() || parse_column_word(type, rest)) return rest;
        }
    }
    throw std::logic_error("cannot erase pair from column word " +
                           format_word(w));
}

// Column-contraction relations R5: minimal non-admissible column words
// (every strict factor admissible) contract by erasing a bad pair or a 0.
void add_r5(const CrystalType& type, RelationSet& out) {
    const int n = type.rank;
    for (int h = 2; h <= n + 1; ++h)
        for (const Column& c : enumerate_columns(type, h)) {
            if (is_admissible(type, c)) continue;
            const Word& w = c.cells;
            Word head(w.begin(), w.end() - 1), tail(w.begin() + 1, w.end());
            if (!is_admissible(type, Column{head}) ||
                !is_admissible(type, Column{tail}))
                continue;
            Letter z = 0;
            for (Letter cand = 1; cand <= n; ++cand) {
                const bool pair = std::count(w.begin(), w.end(), cand) > 0 &&
                                  std::count(w.begin(), w.end(), -cand) > 0;
                if (pair && n_count(type, c, cand) > cand) {
                    z = cand;
                    break;
                }
            }
            Word reduced;
            if (z > 0) {
                reduced = erase_pair(type, w, z, -z);
            } else {
                if (std::count(w.begin(), w.end(), 0) == 0)
                    throw std::logic_error(
                        "non-admissible column without bad pair or 0: " +
                        format_word(w));
                bool dropped = false;
                for (Letter x : w) {
                    if (!dropped && x == 0)
                        dropped = true;
                    else
                        reduced.push_back(x);
                }
            }
            out.add(w, reduced);
        }
}

void add_g2(const CrystalType& type, RelationSet& out) {
    // R1 and R2.
    out.add({1, 0}, {1});
    out.add({1, -3}, {2});
    out.add({1, -2}, {3});
    out.add({2, -2}, {0});
    out.add({2, -1}, {-3});
    out.add({3, -1}, {-2});
    out.add({0, -1}, {-1});
    out.add({1, -1}, {});
    // R3 and R4 are built from the Theta table.
    const auto alpha = alphabet(type);
    for (const auto& [dom, im] : theta_table())
        for (Letter c : alpha) {
            const Letter a = im[0], b = im[1];
            const Word bc{b, c};
            if (auto t = theta(bc)) {
                // For the one triple -3 -1 -2 the Theta form -3 -2 -1
                // leaves the crystal component (it is congruent to
                // -1 -1, not to -3 -1 -2); the Theta-inverse form
                // -1 -3 -2 is the congruent tableau reading.
                if (Word{a, b, c} == Word{-3, -1, -2})
                    out.add({a, b, c}, {-1, -3, -2});
                else
                    out.add({a, b, c}, {a, (*t)[0], (*t)[1]});
            } else if (le(type, c, b) && !(b == 0 && c == 0)) {
                const Word ab = theta_inverse(im).value();
                out.add({a, b, c}, {ab[0], ab[1], c});
            }
            if (theta_inverse(bc)) {
                if (a == 1 && b == 2 && c == 3)
                    out.add({1, 2, 3}, {1, 1, 0});
                else {
                    const Word ab = theta_inverse(im).value();
                    out.add({a, b, c}, {ab[0], ab[1], c});
                }
            }
        }
}

}  // namespace

std::optional<Word> theta(const Word& ab) {
    for (const auto& [dom, im] : theta_table())
        if (dom == ab) return im;
    return std::nullopt;
}

std::optional<Word> theta_inverse(const Word& ab) {
    for (const auto& [dom, im] : theta_table())
        if (im == ab) return dom;
    return std::nullopt;
}

Presentation build_presentation(const CrystalType& type) {
    RelationSet out(type);
    switch (type.family) {
        case Family::A:
            add_knuth(type, out);
            break;
        case Family::B:
            add_knuth(type, out);
            add_r3(type, out);
            add_r4_b(type, out);
            add_r5(type, out);
            break;
        case Family::C:
            add_knuth(type, out);
            add_r3(type, out);
            add_r5(type, out);
            break;
        case Family::D:
            add_knuth(type, out);
            add_r3(type, out);
            add_r4_d(type, out);
            add_r5(type, out);
            break;
        case Family::G2:
            add_g2(type, out);
            break;
    }
    return Presentation{type, out.take()};
}

namespace {

void replacements(const Word& w, const Word& from, const Word& to,
                  std::set<Word>& out) {
    if (from.size() > w.size()) return;
    for (std::size_t i = 0; i + from.size() <= w.size(); ++i) {
        if (!std::equal(from.begin(), from.end(), w.begin() + i)) continue;
        Word next(w.begin(), w.begin() + i);
        next.insert(next.end(), to.begin(), to.end());
        next.insert(next.end(), w.begin() + i + from.size(), w.end());
        out.insert(std::move(next));
    }
}

}  // namespace

std::vector<Word> one_step_neighbors(const Presentation& p, const Word& w) {
    std::set<Word> out;
    for (const Relation& rel : p.relations) {
        replacements(w, rel.lhs, rel.rhs, out);
        replacements(w, rel.rhs, rel.lhs, out);
    }
    out.erase(w);
    return {out.begin(), out.end()};
}

std::vector<Word> oracle_class(const Presentation& p, const Word& w,
                               const OracleLimits& limits) {
    const std::size_t max_length =
        limits.max_length < 0 ? w.size() + 2
                              : static_cast<std::size_t>(limits.max_length);
    std::set<Word> seen{w};
    std::queue<Word> frontier;
    frontier.push(w);
    while (!frontier.empty()) {
        const Word cur = std::move(frontier.front());
        frontier.pop();
        for (Word& next : one_step_neighbors(p, cur)) {
            if (next.size() > max_length) continue;
            if (!seen.insert(next).second) continue;
            if (seen.size() > limits.max_class_size)
                throw std::runtime_error(
                    "oracle: congruence class size limit exceeded for " +
                    format_word(w));
            frontier.push(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

Word oracle_nf(const Presentation& p, const Word& w,
               const OracleLimits& limits) {
    std::vector<Word> tableaux;
    for (const Word& u : oracle_class(p, w, limits))
        if (is_tableau_reading(p.type, u)) tableaux.push_back(u);
    if (tableaux.size() != 1)
        throw std::runtime_error(
            "oracle: class of " + format_word(w) + " contains " +
            std::to_string(tableaux.size()) + " tableau readings");
    return tableaux.front();
}

}  // namespace crystal
