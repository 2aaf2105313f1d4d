#include "crystal/tableaux.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace crystal {

namespace {

bool le_letters(const CrystalType& type, Letter x, Letter y) {
    const Cmp c = letter_compare(type, x, y);
    return c == Cmp::Less || c == Cmp::Equal;
}

bool lt_letters(const CrystalType& type, Letter x, Letter y) {
    return letter_compare(type, x, y) == Cmp::Less;
}

// May x sit directly above y in a column?
bool column_adjacent_ok(const CrystalType& type, Letter x, Letter y) {
    const int n = type.rank;
    switch (type.family) {
        case Family::A:
        case Family::C:
            return lt_letters(type, x, y);
        case Family::B:
            return lt_letters(type, x, y) || (x == 0 && y == 0);
        case Family::D:
            if ((x == n || x == -n) && (y == n || y == -n)) return x != y;
            return lt_letters(type, x, y);
        case Family::G2:
            return lt_letters(type, x, y) || (x == 0 && y == 0);
    }
    return false;
}

bool contains(const Word& cells, Letter x) {
    return std::find(cells.begin(), cells.end(), x) != cells.end();
}

void sort_cells(const CrystalType& type, Word& cells) {
    std::sort(cells.begin(), cells.end(), [&](Letter a, Letter b) {
        return order_key(type, a) < order_key(type, b);
    });
}

// Replace n-bar directly above n by two zeros (type D only).
Word d_zero_form(const CrystalType& type, const Word& cells) {
    const int n = type.rank;
    Word out = cells;
    for (std::size_t j = 0; j + 1 < out.size(); ++j) {
        if (out[j] == -n && out[j + 1] == n) {
            out[j] = 0;
            out[j + 1] = 0;
            ++j;
        }
    }
    return out;
}

// Split a zero-form column using the type B conventions.  `cells` must be
// a B-style column (zeros allowed); comparisons on unbarred symbols are
// plain integer comparisons.
std::optional<std::pair<Word, Word>> split_cells_b(int n, const Word& cells) {
    // The pairs z_1 >= z_2 >= ...: zeros first (each zero is one pair),
    // then paired unbarred symbols in decreasing order.
    std::vector<Letter> zs;
    for (Letter x : cells)
        if (x == 0) zs.push_back(0);
    for (Letter z = n; z >= 1; --z)
        if (contains(cells, z) && contains(cells, -z)) zs.push_back(z);

    std::vector<Letter> ts;
    int prev = n + 1;
    for (Letter z : zs) {
        int start = z == 0 ? n : z - 1;
        start = std::min(start, prev - 1);
        int t = 0;
        for (int cand = start; cand >= 1; --cand) {
            if (!contains(cells, cand) && !contains(cells, -cand)) {
                t = cand;
                break;
            }
        }
        if (t == 0) return std::nullopt;
        ts.push_back(t);
        prev = t;
    }

    Word l = cells;
    Word r = cells;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        const Letter z = zs[i];
        const Letter t = ts[i];
        if (z == 0) {
            *std::find(l.begin(), l.end(), 0) = t;
            *std::find(r.begin(), r.end(), 0) = -t;
        } else {
            *std::find(l.begin(), l.end(), z) = t;
            *std::find(r.begin(), r.end(), -z) = -t;
        }
    }
    return std::make_pair(std::move(l), std::move(r));
}

bool is_admissible_basic(const CrystalType& type, const Column& beta) {
    const int n = type.rank;
    if (type.family == Family::A) return true;
    if (type.family == Family::G2) {
        if (beta.height() > 2) return false;
        if (beta.height() == 2) {
            const Letter a = beta.cells[0];
            const Letter b = beta.cells[1];
            const int bound = (a == 1 || a == 0) ? 2 : 3;
            if (g2_dist(a, b) > bound) return false;
        }
        return true;
    }
    for (Letter z = 1; z <= n; ++z)
        if (n_count(type, beta, z) > z) return false;
    if (type.family == Family::B && contains(beta.cells, 0) && beta.height() > n)
        return false;
    return true;
}

std::optional<Letter> find_unique(const Word& cells, Letter x) {
    for (std::size_t j = 0; j < cells.size(); ++j)
        if (cells[j] == x) return static_cast<Letter>(j + 1);  // 1-based row
    return std::nullopt;
}

}  // namespace

std::optional<Column> parse_column_word(const CrystalType& type, const Word& w) {
    if (w.empty()) return std::nullopt;
    for (Letter x : w)
        if (!has_letter(type, x)) return std::nullopt;
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
        if (!column_adjacent_ok(type, w[j], w[j + 1])) return std::nullopt;
    if (type.family == Family::G2 && w.size() > 2) return std::nullopt;
    return Column{w};
}

int n_count(const CrystalType& type, const Column& beta, Letter z) {
    const bool has_bars = type.family != Family::A;
    int count = 0;
    for (Letter x : beta.cells)
        if (le_letters(type, x, z) || (has_bars && le_letters(type, -z, x)))
            ++count;
    return count;
}

int g2_dist(Letter a, Letter b) {
    const CrystalType g2{Family::G2, 2};
    return std::abs(order_key(g2, a) - order_key(g2, b));
}

std::optional<std::pair<Column, Column>> split(const CrystalType& type,
                                               const Column& beta) {
    if (type.family == Family::A || type.family == Family::G2)
        return std::make_pair(beta, beta);
    const Word zero_form =
        type.family == Family::D ? d_zero_form(type, beta.cells) : beta.cells;
    auto lr = split_cells_b(type.rank, zero_form);
    if (!lr) return std::nullopt;
    sort_cells(type, lr->first);
    sort_cells(type, lr->second);
    return std::make_pair(Column{std::move(lr->first)},
                          Column{std::move(lr->second)});
}

bool is_admissible(const CrystalType& type, const Column& beta) {
    const bool basic = is_admissible_basic(type, beta);
    if (type.family == Family::B || type.family == Family::C ||
        type.family == Family::D) {
        const bool splittable = split(type, beta).has_value();
        assert(basic == splittable);
        return basic && splittable;
    }
    return basic;
}

std::optional<AdmissibleColumn> make_admissible(const CrystalType& type,
                                                const Column& beta) {
    if (!is_admissible_basic(type, beta)) return std::nullopt;
    auto lr = split(type, beta);
    if (!lr) {
        assert(false && "admissibility conditions disagree with splitting");
        return std::nullopt;
    }
    return AdmissibleColumn{beta, std::move(lr->first), std::move(lr->second)};
}

bool precedes(const CrystalType& type, const AdmissibleColumn& b2,
              const AdmissibleColumn& b1) {
    if (type.family == Family::G2) {
        const Word& u = b2.column.cells;
        const Word& v = b1.column.cells;
        if (u.size() < v.size()) return false;
        const Letter a = u[0];
        const Letter c = v[0];
        if (!le_letters(type, a, c) || (a == 0 && c == 0)) return false;
        if (v.size() == 2) {
            const Letter b = u[1];
            const Letter d = v[1];
            if (!le_letters(type, b, d) || (b == 0 && d == 0)) return false;
            if ((a == 2 || a == 3 || a == 0) && g2_dist(a, d) < 3) return false;
            if (a == -3 && g2_dist(a, d) < 2) return false;
        }
        return true;
    }
    const Column& left = b2.r_split;
    const Column& right = b1.l_split;
    if (left.height() < right.height()) return false;
    for (int j = 0; j < right.height(); ++j) {
        const Letter x = left.cells[j];
        const Letter y = right.cells[j];
        if (!le_letters(type, x, y)) return false;
    }
    return true;
}

namespace {

// Extra type D condition on an adjacent pair that already satisfies the
// row test.  Whether a two-column tabloid is a tableau is constant along
// the crystal operators and decidable at the highest-weight end of the
// component: the tabloid is a tableau exactly when the highest word of
// its component is the reading of the highest-weight tableau whose shape
// matches the pair's column heights.
bool d_pair_tableau(const CrystalType& type, const AdmissibleColumn& b2,
                    const AdmissibleColumn& b1) {
    const int n = type.rank;
    const int h1 = b1.height(), h2 = b2.height();
    Word w = b1.column.cells;
    w.insert(w.end(), b2.column.cells.begin(), b2.column.cells.end());
    const RaiseResult res = raise_to_highest(type, w);
    Weight c = content(type, res.highest);
    bool bar = false;
    if (c[n - 1] < 0) {
        bar = true;
        c[n - 1] = -c[n - 1];
    }
    std::vector<int> heights;
    for (long long col = 1;; ++col) {
        int h = 0;
        for (const long long part : c)
            if (part >= col) ++h;
        if (h == 0) break;
        heights.push_back(h);
    }
    if (heights != std::vector<int>{h2, h1}) return false;
    return reading(highest_weight_tableau(type, Shape{heights, bar})) ==
           res.highest;
}

}  // namespace

bool dn_pair_ok(const CrystalType& type, const AdmissibleColumn& b2,
                const AdmissibleColumn& b1) {
    if (type.family != Family::D) return true;
    static std::map<std::tuple<int, Word, Word>, bool> cache;
    static std::mutex cache_mutex;
    const std::tuple<int, Word, Word> key{type.rank, b2.column.cells,
                                          b1.column.cells};
    {
        const std::lock_guard<std::mutex> lock(cache_mutex);
        const auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const bool ok = d_pair_tableau(type, b2, b1);
    const std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, ok);
    return ok;
}

bool is_tableau(const CrystalType& type, const Tabloid& t) {
    for (std::size_t j = 0; j + 1 < t.columns.size(); ++j) {
        if (!precedes(type, t.columns[j + 1], t.columns[j])) return false;
        if (!dn_pair_ok(type, t.columns[j + 1], t.columns[j])) return false;
    }
    return true;
}

namespace {

bool tableau_reading_from(const CrystalType& type, const Word& w,
                          std::size_t pos, const AdmissibleColumn* prev) {
    if (pos == w.size()) return true;
    // Reading order runs right to left, so heights weakly increase.
    const std::size_t min_h = prev ? prev->height() : 1;
    for (std::size_t h = min_h; h <= w.size() - pos; ++h) {
        Word cells(w.begin() + pos, w.begin() + pos + h);
        auto col = parse_column_word(type, cells);
        if (!col) continue;
        auto ac = make_admissible(type, *col);
        if (!ac) continue;
        if (prev && !(precedes(type, *ac, *prev) && dn_pair_ok(type, *ac, *prev)))
            continue;
        if (tableau_reading_from(type, w, pos + h, &*ac)) return true;
    }
    return false;
}

}  // namespace

bool is_tableau_reading(const CrystalType& type, const Word& w) {
    return tableau_reading_from(type, w, 0, nullptr);
}

Word reading(const Tabloid& t) {
    Word w;
    for (const auto& col : t.columns)
        w.insert(w.end(), col.column.cells.begin(), col.column.cells.end());
    return w;
}

Tabloid letters_as_tabloid(const CrystalType& type, const Word& w) {
    Tabloid t;
    t.columns.reserve(w.size());
    for (Letter x : w)
        t.columns.push_back(make_admissible(type, Column{{x}}).value());
    return t;
}

Shape shape_of(const Tabloid& t) {
    Shape s;
    for (auto it = t.columns.rbegin(); it != t.columns.rend(); ++it)
        s.heights.push_back(it->height());
    return s;
}

Tabloid highest_weight_tableau(const CrystalType& type, const Shape& shape) {
    Tabloid t;
    const int n = type.rank;
    for (auto it = shape.heights.rbegin(); it != shape.heights.rend(); ++it) {
        const int h = *it;
        Word cells;
        for (int i = 1; i <= h; ++i) cells.push_back(i);
        if (type.family == Family::D && shape.bar && h == n) cells[h - 1] = -n;
        t.columns.push_back(
            make_admissible(type, Column{std::move(cells)}).value());
    }
    assert(is_tableau(type, t));
    return t;
}

std::optional<Shape> shape_for_highest(const CrystalType& type, const Word& w) {
    Shape s;
    std::vector<long long> lambda;
    if (type.family == Family::G2) {
        const Weight wt = weight(type, w);
        lambda = {wt[0] + wt[1], wt[1]};
    } else {
        lambda = content(type, w);
        if (type.family == Family::D && type.rank >= 1 &&
            lambda[type.rank - 1] < 0) {
            s.bar = true;
            lambda[type.rank - 1] = -lambda[type.rank - 1];
        }
    }
    long long prev = -1;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        const long long v = lambda[i];
        if (v < 0) return std::nullopt;
        if (prev >= 0 && v > prev) return std::nullopt;
        prev = v;
        for (long long k = 0; k < v; ++k) {
            if (s.heights.size() <= static_cast<std::size_t>(k))
                s.heights.resize(k + 1, 0);
        }
    }
    // Transpose the partition row lengths into column heights.
    for (std::size_t c = 0; c < s.heights.size(); ++c) {
        int h = 0;
        for (std::size_t i = 0; i < lambda.size(); ++i)
            if (lambda[i] > static_cast<long long>(c)) ++h;
        s.heights[c] = h;
    }
    return s;
}

std::vector<Column> enumerate_columns(const CrystalType& type, int height) {
    std::vector<Column> out;
    const auto letters = alphabet(type);
    Word cur;
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == height) {
            out.push_back(Column{cur});
            return;
        }
        for (Letter x : letters) {
            if (!cur.empty() && !column_adjacent_ok(type, cur.back(), x)) continue;
            cur.push_back(x);
            self(self);
            cur.pop_back();
        }
    };
    if (height > 0 && !(type.family == Family::G2 && height > 2)) dfs(dfs);
    return out;
}

std::vector<AdmissibleColumn> enumerate_admissible_columns(const CrystalType& type) {
    std::vector<AdmissibleColumn> out;
    const int max_height = type.family == Family::G2 ? 2 : type.rank;
    for (int h = 1; h <= max_height; ++h) {
        for (const Column& c : enumerate_columns(type, h)) {
            if (auto adm = make_admissible(type, c)) out.push_back(std::move(*adm));
        }
    }
    return out;
}

std::string format_column(const Column& c) {
    std::string out = "[";
    for (int j = 0; j < c.height(); ++j) {
        if (j) out += ' ';
        out += format_letter(c.cells[j]);
    }
    out += ']';
    return out;
}

std::optional<Column> parse_column_text(const CrystalType& type,
                                        const std::string& text) {
    std::string trimmed = text;
    const auto first = trimmed.find_first_not_of(" \t");
    const auto last = trimmed.find_last_not_of(" \t");
    if (first == std::string::npos) return std::nullopt;
    trimmed = trimmed.substr(first, last - first + 1);
    if (trimmed.size() < 2 || trimmed.front() != '[' || trimmed.back() != ']')
        return std::nullopt;
    const auto w = parse_word(type, trimmed.substr(1, trimmed.size() - 2));
    if (!w) return std::nullopt;
    return parse_column_word(type, *w);
}

std::string format_tabloid(const Tabloid& t) {
    std::string out;
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
        if (j) out += ' ';
        out += format_column(t.columns[j].column);
    }
    return out;
}

}  // namespace crystal
