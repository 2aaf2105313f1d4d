#include "crystal/automata.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace crystal {

namespace {

ColumnSymbol letter_symbol(const CrystalType& type, Letter x) {
    const auto adm = make_admissible(type, Column{{x}});
    if (!adm)
        throw std::invalid_argument("letter is not a column: " +
                                    format_letter(x));
    return {*adm};
}

void assert_irreducible(const RuleTable& table, const SigmaWord& w,
                        const char* who) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (table.find(w.symbols[i].column, w.symbols[i + 1].column))
            throw std::logic_error(std::string(who) +
                                   ": word is not irreducible at position " +
                                   std::to_string(i) + ": " +
                                   format_sigma_word(w));
}

// One streaming step: reduce the window and split it into the part that
// keeps moving (at most two symbols, at the end facing the unread input)
// and the symbols that are emitted for good.
struct StepResult {
    std::vector<ColumnSymbol> carry;
    std::vector<ColumnSymbol> emitted;  // in final word order
};

StepResult split_reduced(const SigmaWord& red, Side side) {
    StepResult out;
    if (red.size() <= 2) {
        out.carry = red.symbols;
        return out;
    }
    if (side == Side::Right) {
        // The carry moves towards symbol index 0: keep the two leftmost
        // symbols, everything to their right is settled.
        out.carry.assign(red.symbols.begin(), red.symbols.begin() + 2);
        out.emitted.assign(red.symbols.begin() + 2, red.symbols.end());
    } else {
        out.carry.assign(red.symbols.end() - 2, red.symbols.end());
        out.emitted.assign(red.symbols.begin(), red.symbols.end() - 2);
    }
    return out;
}

}  // namespace

bool NfDfa::accepts(const SigmaWord& w) const {
    int prev = -1;  // start state
    for (const auto& s : w.symbols) {
        int idx = -1;
        for (std::size_t i = 0; i < sigma.size(); ++i)
            if (sigma[i].column.cells == s.column.column.cells) {
                idx = static_cast<int>(i);
                break;
            }
        if (idx < 0) return false;  // not a generator at all
        if (prev >= 0 && !allowed[prev][idx]) return false;
        prev = idx;
    }
    return true;
}

NfDfa nf_dfa(const CrystalType& type) {
    const RuleTable& table = rule_table_for(type);
    NfDfa dfa;
    dfa.type = type;
    dfa.sigma = table.sigma();
    const std::size_t n = dfa.sigma.size();
    dfa.allowed.assign(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            dfa.allowed[i][j] =
                is_tableau_pair(type, dfa.sigma[i], dfa.sigma[j]) ? 1 : 0;
    return dfa;
}

SigmaWord right_mul(const RuleTable& table, const SigmaWord& u, Letter x) {
    assert_irreducible(table, u, "right_mul");
    std::vector<ColumnSymbol> carry{letter_symbol(table.type(), x)};
    std::vector<ColumnSymbol> tail;  // settled symbols, final order
    SigmaWord result;
    std::size_t prefix_end = 0;  // u.symbols[0 .. prefix_end) copied verbatim
    for (std::size_t i = u.size(); i-- > 0;) {
        SigmaWord window;
        window.symbols.push_back(u.symbols[i]);
        window.symbols.insert(window.symbols.end(), carry.begin(),
                              carry.end());
        if (window.size() > 3)
            throw std::logic_error("right_mul: window exceeds three symbols");
        const SigmaWord red = rewrite_nf(table, window);
        if (red == window) {
            // Nothing fired: the untouched prefix of u stays as it is and
            // the carry will only keep commuting past it unchanged.
            prefix_end = i + 1;
            break;
        }
        StepResult step = split_reduced(red, Side::Right);
        tail.insert(tail.begin(), step.emitted.begin(), step.emitted.end());
        carry = std::move(step.carry);
        if (carry.size() > 2)
            throw std::logic_error("right_mul: carry exceeds two symbols");
    }
    result.symbols.assign(u.symbols.begin(), u.symbols.begin() + prefix_end);
    result.symbols.insert(result.symbols.end(), carry.begin(), carry.end());
    result.symbols.insert(result.symbols.end(), tail.begin(), tail.end());
    assert_irreducible(table, result, "right_mul (output)");
    return result;
}

SigmaWord left_mul(const RuleTable& table, Letter x, const SigmaWord& u) {
    assert_irreducible(table, u, "left_mul");
    std::vector<ColumnSymbol> carry{letter_symbol(table.type(), x)};
    std::vector<ColumnSymbol> head;  // settled symbols, final order
    SigmaWord result;
    std::size_t suffix_begin = u.size();  // u.symbols[suffix_begin ..) kept
    for (std::size_t i = 0; i < u.size(); ++i) {
        SigmaWord window;
        window.symbols = carry;
        window.symbols.push_back(u.symbols[i]);
        if (window.size() > 3)
            throw std::logic_error("left_mul: window exceeds three symbols");
        const SigmaWord red = rewrite_nf(table, window);
        if (red == window) {
            suffix_begin = i;
            break;
        }
        StepResult step = split_reduced(red, Side::Left);
        head.insert(head.end(), step.emitted.begin(), step.emitted.end());
        carry = std::move(step.carry);
        if (carry.size() > 2)
            throw std::logic_error("left_mul: carry exceeds two symbols");
    }
    result.symbols = head;
    result.symbols.insert(result.symbols.end(), carry.begin(), carry.end());
    result.symbols.insert(result.symbols.end(),
                          u.symbols.begin() + suffix_begin, u.symbols.end());
    assert_irreducible(table, result, "left_mul (output)");
    return result;
}

SigmaWord incremental_nf(const RuleTable& table, const Word& w) {
    SigmaWord acc;
    for (const Letter x : w) acc = right_mul(table, acc, x);
    return acc;
}

SigmaWord incremental_nf(const CrystalType& type, const Word& w) {
    return incremental_nf(rule_table_for(type), w);
}

bool equal(const CrystalType& type, const Word& u, const Word& v) {
    const RuleTable& table = rule_table_for(type);
    return incremental_nf(table, u) == incremental_nf(table, v);
}

bool same_position(const CrystalType& type, const Word& u, const Word& v) {
    return equal(type, u, v);
}

bool components_isomorphic(const CrystalType& type, const Word& u,
                           const Word& v) {
    // Components are isomorphic iff their highest-weight vertices are
    // equal in the monoid.
    return equal(type, raise_to_highest(type, u).highest,
                 raise_to_highest(type, v).highest);
}

int Transducer::state_of(const std::vector<Word>& window) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == window) return static_cast<int>(i);
    return -1;
}

Transducer materialize_transducer(const RuleTable& table, Side side) {
    const CrystalType& type = table.type();
    Transducer td;
    td.side = side;
    td.type = type;
    td.states.push_back({});  // the empty carry

    std::map<std::vector<Word>, int> index;
    index.emplace(std::vector<Word>{}, 0);
    std::deque<int> work{0};
    const std::size_t state_bound =
        table.sigma().size() * table.sigma().size() * table.sigma().size() +
        table.sigma().size() + 1;

    while (!work.empty()) {
        const int state = work.front();
        work.pop_front();
        const std::vector<Word> carry_cells = td.states[state];
        for (const AdmissibleColumn& in : table.sigma()) {
            SigmaWord window;
            const auto push = [&](const Word& cells) {
                const auto col = parse_column_word(type, cells);
                window.symbols.push_back({*make_admissible(type, *col)});
            };
            if (side == Side::Right) {
                window.symbols.push_back({in});
                for (const Word& c : carry_cells) push(c);
            } else {
                for (const Word& c : carry_cells) push(c);
                window.symbols.push_back({in});
            }
            StepResult step = split_reduced(rewrite_nf(table, window), side);
            if (step.carry.size() > 2)
                throw std::logic_error(
                    "materialize_transducer: carry exceeds two symbols");
            std::vector<Word> next_cells;
            for (const auto& s : step.carry)
                next_cells.push_back(s.column.column.cells);
            auto [it, fresh] =
                index.emplace(next_cells, static_cast<int>(td.states.size()));
            if (fresh) {
                td.states.push_back(next_cells);
                if (td.states.size() > state_bound)
                    throw std::logic_error(
                        "materialize_transducer: state bound exceeded");
                work.push_back(it->second);
            }
            Transducer::Transition tr;
            tr.next = it->second;
            for (const auto& s : step.emitted)
                tr.output.push_back(s.column.column.cells);
            const auto [pos, inserted] = td.delta.emplace(
                std::pair{state, in.column.cells}, std::move(tr));
            if (!inserted)
                throw std::logic_error(
                    "materialize_transducer: duplicate transition");
        }
    }
    return td;
}

SigmaWord run_transducer(const Transducer& td, const RuleTable& table,
                         const SigmaWord& u, Letter x) {
    const CrystalType& type = table.type();
    std::vector<Word> inputs{{x}};
    if (td.side == Side::Right)
        for (std::size_t i = u.size(); i-- > 0;)
            inputs.push_back(u.symbols[i].column.column.cells);
    else
        for (const auto& s : u.symbols)
            inputs.push_back(s.column.column.cells);

    int state = 0;
    std::vector<Word> settled;  // final word order
    for (const Word& in : inputs) {
        const auto it = td.delta.find({state, in});
        if (it == td.delta.end())
            throw std::logic_error("run_transducer: missing transition");
        const auto& tr = it->second;
        if (td.side == Side::Right)
            settled.insert(settled.begin(), tr.output.begin(),
                           tr.output.end());
        else
            settled.insert(settled.end(), tr.output.begin(), tr.output.end());
        state = tr.next;
    }
    // Flush: the final carry sits at the moving end.
    std::vector<Word> cells;
    if (td.side == Side::Right) {
        cells = td.states[state];
        cells.insert(cells.end(), settled.begin(), settled.end());
    } else {
        cells = settled;
        cells.insert(cells.end(), td.states[state].begin(),
                     td.states[state].end());
    }
    SigmaWord out;
    for (const Word& c : cells) {
        const auto col = parse_column_word(type, c);
        out.symbols.push_back({*make_admissible(type, *col)});
    }
    return out;
}

SigmaWord random_irreducible(const RuleTable& table, int max_len,
                             std::mt19937& rng) {
    const auto& sigma = table.sigma();
    std::uniform_int_distribution<int> len_pick(0, max_len);
    std::uniform_int_distribution<std::size_t> sym_pick(0, sigma.size() - 1);
    const int target = len_pick(rng);
    SigmaWord w;
    for (int i = 0; i < target; ++i) {
        std::vector<const AdmissibleColumn*> options;
        for (const auto& c : sigma)
            if (w.empty() ||
                is_tableau_pair(table.type(), w.symbols.back().column, c))
                options.push_back(&c);
        if (options.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0,
                                                        options.size() - 1);
        w.symbols.push_back({*options[pick(rng)]});
    }
    return w;
}

int length_bound_report(const RuleTable& table, int samples,
                        std::mt19937& rng) {
    const auto letters = alphabet(table.type());
    int worst = 0;
    for (int trial = 0; trial < samples; ++trial) {
        const SigmaWord u = random_irreducible(table, 6, rng);
        for (const Letter x : letters) {
            const auto diff = [&](const SigmaWord& result) {
                return std::abs(static_cast<int>(result.size()) -
                                static_cast<int>(u.size()));
            };
            worst = std::max(worst, diff(right_mul(table, u, x)));
            worst = std::max(worst, diff(left_mul(table, x, u)));
        }
    }
    return worst;
}

}  // namespace crystal
