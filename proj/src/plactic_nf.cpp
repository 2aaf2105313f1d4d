#include "crystal/plactic_nf.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace crystal {

namespace {

std::string describe_pair(const AdmissibleColumn& sigma,
                          const AdmissibleColumn& tau) {
    return "c" + format_column(sigma.column) + " c" + format_column(tau.column);
}

}  // namespace

RuleTable::RuleTable(CrystalType type, std::vector<AdmissibleColumn> sigma,
                     std::map<std::pair<Word, Word>, RewriteRule> rules)
    : type_(type), sigma_(std::move(sigma)), rules_(std::move(rules)) {
    for (std::size_t i = 0; i < sigma_.size(); ++i)
        index_.emplace(sigma_[i].column.cells, static_cast<int>(i));
}

const RewriteRule* RuleTable::find(const AdmissibleColumn& sigma,
                                   const AdmissibleColumn& tau) const {
    const auto it = rules_.find({sigma.column.cells, tau.column.cells});
    return it == rules_.end() ? nullptr : &it->second;
}

int RuleTable::symbol_index(const Column& c) const {
    const auto it = index_.find(c.cells);
    if (it == index_.end())
        throw std::invalid_argument("column is not a generator: " +
                                    format_column(c));
    return it->second;
}

bool is_tableau_pair(const CrystalType& type, const AdmissibleColumn& sigma,
                     const AdmissibleColumn& tau) {
    // In the word c_sigma c_tau the column tau stands to the left of
    // sigma in the planar form.
    return precedes(type, tau, sigma) && dn_pair_ok(type, tau, sigma);
}

Tabloid two_column_highest_nf(const CrystalType& type,
                              const AdmissibleColumn& alpha,
                              const AdmissibleColumn& beta) {
    Word w = alpha.column.cells;
    w.insert(w.end(), beta.column.cells.begin(), beta.column.cells.end());
    if (!is_highest_weight(type, w))
        throw std::invalid_argument("two_column_highest_nf: " + format_word(w) +
                                    " is not of highest weight");
    const auto shape = shape_for_highest(type, w);
    if (!shape)
        throw std::logic_error("no tableau shape for highest-weight word " +
                               format_word(w));
    return highest_weight_tableau(type, *shape);
}

Tabloid two_column_nf(const CrystalType& type, const AdmissibleColumn& sigma,
                      const AdmissibleColumn& tau) {
    Word w = sigma.column.cells;
    w.insert(w.end(), tau.column.cells.begin(), tau.column.cells.end());
    const RaiseResult raised = raise_to_highest(type, w);

    // The operators preserve the length split, so the highest word
    // factors into two admissible columns of the original heights.
    const Word& hw = raised.highest;
    const Word acells(hw.begin(), hw.begin() + sigma.height());
    const Word bcells(hw.begin() + sigma.height(), hw.end());
    const auto aparsed = parse_column_word(type, acells);
    const auto bparsed = parse_column_word(type, bcells);
    if (!aparsed || !bparsed)
        throw std::logic_error("raised pair does not split into columns: " +
                               format_word(hw));
    const auto acol = make_admissible(type, *aparsed);
    const auto bcol = make_admissible(type, *bparsed);
    if (!acol || !bcol)
        throw std::logic_error("raised pair has a non-admissible column: " +
                               format_word(hw));

    const Tabloid hw_nf = two_column_highest_nf(type, *acol, *bcol);

    // Replay the recorded raising sequence downwards on the normal form.
    OperatorSequence down(raised.labels.rbegin(), raised.labels.rend());
    const auto replayed = apply_f_sequence(type, reading(hw_nf), down);
    if (!replayed)
        throw std::logic_error("operator replay failed for " + format_word(w));

    Tabloid out;
    std::size_t pos = 0;
    for (const auto& c : hw_nf.columns) {
        const std::size_t h = c.column.cells.size();
        const Word cells(replayed->begin() + pos, replayed->begin() + pos + h);
        pos += h;
        const auto parsed = parse_column_word(type, cells);
        std::optional<AdmissibleColumn> adm;
        if (parsed) adm = make_admissible(type, *parsed);
        if (!adm)
            throw std::logic_error("replayed normal form does not refactor: " +
                                   format_word(*replayed));
        out.columns.push_back(*adm);
    }
    return out;
}

RuleTable build_rule_table(const CrystalType& type) {
    std::vector<AdmissibleColumn> sigma = enumerate_admissible_columns(type);
    std::map<std::pair<Word, Word>, RewriteRule> rules;
    for (const AdmissibleColumn& s : sigma)
        for (const AdmissibleColumn& t : sigma) {
            if (is_tableau_pair(type, s, t)) continue;
            const Tabloid nf = two_column_nf(type, s, t);
            RewriteRule rule{{s}, {t}, {}};
            for (const auto& c : nf.columns) rule.rhs.push_back({c});

            const auto fail = [&](const std::string& what) {
                throw std::logic_error("rule " + describe_pair(s, t) + " -> " +
                                       format_tabloid(nf) + ": " + what);
            };
            if (!is_tableau(type, nf)) fail("rhs is not a tableau");
            const int l_lhs = s.height() + t.height();
            int l_rhs = 0;
            for (const auto& c : rule.rhs) l_rhs += c.height();
            if (l_rhs > l_lhs) fail("rhs is longer in total subscript length");
            if (l_rhs == l_lhs && rule.rhs.size() >= 2 &&
                rule.rhs.front().height() >= s.height())
                fail("equal-length rule does not shorten the first subscript");
            if (rule.rhs.size() > 3 ||
                (rule.rhs.size() == 3 && type.family != Family::G2))
                fail("rhs has too many symbols");
            rules.emplace(std::pair{s.column.cells, t.column.cells},
                          std::move(rule));
        }
    return RuleTable(type, std::move(sigma), std::move(rules));
}

const RuleTable& rule_table_for(const CrystalType& type) {
    static std::map<std::pair<int, int>, RuleTable> cache;
    static std::mutex mutex;
    const std::pair<int, int> key{static_cast<int>(type.family), type.rank};
    const std::lock_guard<std::mutex> lock(mutex);
    const auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, build_rule_table(type)).first->second;
}

int measure_L(const SigmaWord& w) {
    int total = 0;
    for (const auto& s : w.symbols) total += s.height();
    return total;
}

bool noeth_less(const RuleTable& table, const SigmaWord& u,
                const SigmaWord& v) {
    const int lu = measure_L(u), lv = measure_L(v);
    if (lu != lv) return lu < lv;
    if (u.size() != v.size()) return u.size() < v.size();
    for (std::size_t i = 0; i < u.size(); ++i) {
        const int iu = table.symbol_index(u.symbols[i].column.column);
        const int iv = table.symbol_index(v.symbols[i].column.column);
        if (iu != iv) return iu < iv;
    }
    return false;
}

SigmaWord rewrite_nf(const RuleTable& table, SigmaWord w,
                     RewriteStrategy strategy, std::mt19937* rng) {
    // Generous polynomial guard: a leftmost reduction of a letter
    // encoding applies O(|w|^2) rules; anything far beyond that means
    // the table is not terminating.
    const long long n = static_cast<long long>(w.size()) + measure_L(w);
    const long long guard = 64 + 16 * n * n;
    long long steps = 0;
    std::size_t scan_from = 0;  // leftmost only: redexes left of this died
    while (true) {
        std::vector<std::size_t> redexes;
        const std::size_t start =
            strategy == RewriteStrategy::Leftmost ? scan_from : 0;
        for (std::size_t i = start; i + 1 < w.size(); ++i) {
            if (!table.find(w.symbols[i].column, w.symbols[i + 1].column))
                continue;
            redexes.push_back(i);
            if (strategy == RewriteStrategy::Leftmost) break;
        }
        if (redexes.empty()) return w;
        std::size_t at = redexes.front();
        if (strategy == RewriteStrategy::Rightmost) at = redexes.back();
        if (strategy == RewriteStrategy::Random) {
            if (!rng)
                throw std::invalid_argument(
                    "rewrite_nf: Random strategy needs an RNG");
            std::uniform_int_distribution<std::size_t> pick(
                0, redexes.size() - 1);
            at = redexes[pick(*rng)];
        }
        const RewriteRule* rule = table.find(w.symbols[at].column,
                                             w.symbols[at + 1].column);
        SigmaWord next;
        next.symbols.assign(w.symbols.begin(), w.symbols.begin() + at);
        next.symbols.insert(next.symbols.end(), rule->rhs.begin(),
                            rule->rhs.end());
        next.symbols.insert(next.symbols.end(), w.symbols.begin() + at + 2,
                            w.symbols.end());
        if (!noeth_less(table, next, w))
            throw std::logic_error("rewrite step does not decrease the "
                                   "noetherian order at " +
                                   format_sigma_word(w));
        w = std::move(next);
        scan_from = at == 0 ? 0 : at - 1;
        if (++steps > guard)
            throw std::logic_error("rewrite_nf: termination guard exceeded");
    }
}

SigmaWord letters_to_sigma(const CrystalType& type, const Word& w) {
    SigmaWord out;
    for (const Letter x : w) {
        const auto adm = make_admissible(type, Column{{x}});
        if (!adm)
            throw std::invalid_argument("letter is not a column: " +
                                        format_letter(x));
        out.symbols.push_back({*adm});
    }
    return out;
}

Word reading(const SigmaWord& w) {
    Word out;
    for (const auto& s : w.symbols)
        out.insert(out.end(), s.column.column.cells.begin(),
                   s.column.column.cells.end());
    return out;
}

Tabloid to_tabloid(const SigmaWord& w) {
    Tabloid t;
    for (const auto& s : w.symbols) t.columns.push_back(s.column);
    return t;
}

SigmaWord to_sigma_word(const Tabloid& t) {
    SigmaWord w;
    for (const auto& c : t.columns) w.symbols.push_back({c});
    return w;
}

Word nf_word(const RuleTable& table, const Word& w) {
    return reading(rewrite_nf(table, letters_to_sigma(table.type(), w)));
}

Word nf_word(const CrystalType& type, const Word& w) {
    return nf_word(rule_table_for(type), w);
}

std::string format_sigma_word(const SigmaWord& w) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.symbols.size(); ++i) {
        if (i) out << ' ';
        out << 'c' << format_column(w.symbols[i].column.column);
    }
    return out.str();
}

}  // namespace crystal
