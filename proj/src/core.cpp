#include "crystal/core.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>

namespace crystal {

std::optional<CrystalType> parse_type(const std::string& spec) {
    if (spec == "G2") return CrystalType{Family::G2, 2};
    if (spec.size() < 3 || spec[1] != ':') return std::nullopt;
    Family fam;
    switch (spec[0]) {
        case 'A': fam = Family::A; break;
        case 'B': fam = Family::B; break;
        case 'C': fam = Family::C; break;
        case 'D': fam = Family::D; break;
        default: return std::nullopt;
    }
    const std::string num = spec.substr(2);
    for (char c : num)
        if (c < '0' || c > '9') return std::nullopt;
    const long n = std::strtol(num.c_str(), nullptr, 10);
    const long min_rank = (fam == Family::D) ? 2 : 1;
    if (n < min_rank || n > 64) return std::nullopt;
    return CrystalType{fam, static_cast<int>(n)};
}

std::string to_string(const CrystalType& type) {
    switch (type.family) {
        case Family::A: return "A:" + std::to_string(type.rank);
        case Family::B: return "B:" + std::to_string(type.rank);
        case Family::C: return "C:" + std::to_string(type.rank);
        case Family::D: return "D:" + std::to_string(type.rank);
        case Family::G2: return "G2";
    }
    return "?";
}

std::vector<Letter> alphabet(const CrystalType& type) {
    const int n = type.rank;
    std::vector<Letter> out;
    switch (type.family) {
        case Family::A:
            for (int a = 1; a <= n; ++a) out.push_back(a);
            break;
        case Family::B:
            for (int a = 1; a <= n; ++a) out.push_back(a);
            out.push_back(0);
            for (int a = n; a >= 1; --a) out.push_back(-a);
            break;
        case Family::C:
        case Family::D:
            for (int a = 1; a <= n; ++a) out.push_back(a);
            for (int a = n; a >= 1; --a) out.push_back(-a);
            break;
        case Family::G2:
            out = {1, 2, 3, 0, -3, -2, -1};
            break;
    }
    return out;
}

bool has_letter(const CrystalType& type, Letter x) {
    const int n = type.rank;
    switch (type.family) {
        case Family::A: return x >= 1 && x <= n;
        case Family::B: return x == 0 || (x >= -n && x <= n);
        case Family::C:
        case Family::D: return x != 0 && x >= -n && x <= n;
        case Family::G2: return x >= -3 && x <= 3;
    }
    return false;
}

int num_labels(const CrystalType& type) {
    switch (type.family) {
        case Family::A: return type.rank - 1;
        case Family::B:
        case Family::C:
        case Family::D: return type.rank;
        case Family::G2: return 2;
    }
    return 0;
}

int weight_dim(const CrystalType& type) {
    return type.family == Family::G2 ? 2 : type.rank;
}

int order_key(const CrystalType& type, Letter x) {
    const int n = type.rank;
    switch (type.family) {
        case Family::A:
            return x - 1;
        case Family::B:
            if (x > 0) return x - 1;
            if (x == 0) return n;
            return 2 * n + x + 1;
        case Family::C:
            return x > 0 ? x - 1 : 2 * n + x;
        case Family::D:
            if (x == n) return n - 1;
            if (x == -n) return n;
            return x > 0 ? x - 1 : 2 * n + x;
        case Family::G2:
            if (x > 0) return x - 1;
            if (x == 0) return 3;
            return 7 + x;
    }
    return 0;
}

Cmp letter_compare(const CrystalType& type, Letter x, Letter y) {
    if (x == y) return Cmp::Equal;
    if (type.family == Family::D) {
        const int n = type.rank;
        if ((x == n || x == -n) && (y == n || y == -n)) return Cmp::Incomparable;
    }
    return order_key(type, x) < order_key(type, y) ? Cmp::Less : Cmp::Greater;
}

std::optional<Letter> basis_edge_f(const CrystalType& type, int i, Letter x) {
    const int n = type.rank;
    switch (type.family) {
        case Family::A:
            if (x == i) return i + 1;
            return std::nullopt;
        case Family::B:
            if (i < n) {
                if (x == i) return i + 1;
                if (x == -(i + 1)) return -i;
            } else {
                if (x == n) return 0;
                if (x == 0) return -n;
            }
            return std::nullopt;
        case Family::C:
            if (i < n) {
                if (x == i) return i + 1;
                if (x == -(i + 1)) return -i;
            } else if (x == n) {
                return -n;
            }
            return std::nullopt;
        case Family::D:
            if (i < n - 1) {
                if (x == i) return i + 1;
                if (x == -(i + 1)) return -i;
            } else if (i == n - 1) {
                if (x == n - 1) return n;
                if (x == -n) return -(n - 1);
            } else {
                if (x == n - 1) return -n;
                if (x == n) return -(n - 1);
            }
            return std::nullopt;
        case Family::G2:
            if (i == 1) {
                if (x == 1) return 2;
                if (x == 3) return 0;
                if (x == 0) return -3;
                if (x == -2) return -1;
            } else {
                if (x == 2) return 3;
                if (x == -3) return -2;
            }
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Letter> basis_edge_e(const CrystalType& type, int i, Letter x) {
    const int n = type.rank;
    switch (type.family) {
        case Family::A:
            if (x == i + 1) return i;
            return std::nullopt;
        case Family::B:
            if (i < n) {
                if (x == i + 1) return i;
                if (x == -i) return -(i + 1);
            } else {
                if (x == 0) return n;
                if (x == -n) return 0;
            }
            return std::nullopt;
        case Family::C:
            if (i < n) {
                if (x == i + 1) return i;
                if (x == -i) return -(i + 1);
            } else if (x == -n) {
                return n;
            }
            return std::nullopt;
        case Family::D:
            if (i < n - 1) {
                if (x == i + 1) return i;
                if (x == -i) return -(i + 1);
            } else if (i == n - 1) {
                if (x == n) return n - 1;
                if (x == -(n - 1)) return -n;
            } else {
                if (x == -n) return n - 1;
                if (x == -(n - 1)) return n;
            }
            return std::nullopt;
        case Family::G2:
            if (i == 1) {
                if (x == 2) return 1;
                if (x == 0) return 3;
                if (x == -3) return 0;
                if (x == -1) return -2;
            } else {
                if (x == 3) return 2;
                if (x == -2) return -3;
            }
            return std::nullopt;
    }
    return std::nullopt;
}

int eps_letter(const CrystalType& type, int i, Letter x) {
    int count = 0;
    std::optional<Letter> cur = x;
    while ((cur = basis_edge_e(type, i, *cur))) ++count;
    return count;
}

int phi_letter(const CrystalType& type, int i, Letter x) {
    int count = 0;
    std::optional<Letter> cur = x;
    while ((cur = basis_edge_f(type, i, *cur))) ++count;
    return count;
}

RhoResult rho(const CrystalType& type, int i, const Word& w) {
    // Each letter contributes -^eps +^phi; a '-' cancels the nearest
    // preceding uncancelled '+'.
    std::vector<int> plus_positions;
    std::vector<int> minus_positions;
    for (int j = 0; j < static_cast<int>(w.size()); ++j) {
        const int m = eps_letter(type, i, w[j]);
        const int p = phi_letter(type, i, w[j]);
        for (int k = 0; k < m; ++k) {
            if (!plus_positions.empty())
                plus_positions.pop_back();
            else
                minus_positions.push_back(j);
        }
        for (int k = 0; k < p; ++k) plus_positions.push_back(j);
    }
    RhoResult r;
    r.minus_count = static_cast<int>(minus_positions.size());
    r.plus_count = static_cast<int>(plus_positions.size());
    if (!minus_positions.empty()) r.e_pos = minus_positions.back();
    if (!plus_positions.empty()) r.f_pos = plus_positions.front();
    return r;
}

std::optional<Word> op_e(const CrystalType& type, int i, const Word& w) {
    const RhoResult r = rho(type, i, w);
    if (r.e_pos < 0) return std::nullopt;
    Word out = w;
    const auto y = basis_edge_e(type, i, out[r.e_pos]);
    assert(y);
    out[r.e_pos] = *y;
    return out;
}

std::optional<Word> op_f(const CrystalType& type, int i, const Word& w) {
    const RhoResult r = rho(type, i, w);
    if (r.f_pos < 0) return std::nullopt;
    Word out = w;
    const auto y = basis_edge_f(type, i, out[r.f_pos]);
    assert(y);
    out[r.f_pos] = *y;
    return out;
}

Weight letter_weight(const CrystalType& type, Letter x) {
    const int n = type.rank;
    Weight v(weight_dim(type), 0);
    if (type.family == Family::A) {
        v[x - 1] = 1;
        return v;
    }
    if (type.family == Family::G2) {
        const int a = x < 0 ? -x : x;
        const long long s = x < 0 ? -1 : 1;
        if (a == 1) {
            v = {s, 0};
        } else if (a == 2) {
            v = {-s, s};
        } else if (a == 3) {
            v = {2 * s, -s};
        }
        return v;
    }
    if (x == 0) return v;
    const int a = x < 0 ? -x : x;
    const long long s = x < 0 ? -1 : 1;
    switch (type.family) {
        case Family::B:
            if (a == n) {
                v[n - 1] = 2 * s;
                if (n >= 2) v[n - 2] = -s;
            } else if (a == 1) {
                v[0] = s;
            } else {
                v[a - 2] = -s;
                v[a - 1] = s;
            }
            break;
        case Family::C:
            if (a == 1) {
                v[0] = s;
            } else {
                v[a - 2] = -s;
                v[a - 1] = s;
            }
            break;
        case Family::D:
            if (a == n) {
                v[n - 1] = 2 * s;
                v[n - 2] = -s;
            } else if (a == n - 1) {
                v[n - 2] = s;
                v[n - 1] = s;
                if (n >= 3) v[n - 3] = -s;
            } else if (a == 1) {
                v[0] = s;
            } else {
                v[a - 2] = -s;
                v[a - 1] = s;
            }
            break;
        default:
            break;
    }
    return v;
}

Weight weight(const CrystalType& type, const Word& w) {
    Weight total(weight_dim(type), 0);
    for (Letter x : w) {
        const Weight v = letter_weight(type, x);
        for (std::size_t k = 0; k < total.size(); ++k) total[k] += v[k];
    }
    return total;
}

std::vector<long long> content(const CrystalType& type, const Word& w) {
    const int m = type.family == Family::G2 ? 3 : type.rank;
    std::vector<long long> c(m, 0);
    for (Letter x : w) {
        if (x > 0)
            ++c[x - 1];
        else if (x < 0)
            --c[-x - 1];
    }
    return c;
}

bool is_highest_weight(const CrystalType& type, const Word& w) {
    const int labels = num_labels(type);
    for (int i = 1; i <= labels; ++i)
        if (rho(type, i, w).minus_count > 0) return false;
    return true;
}

RaiseResult raise_to_highest(const CrystalType& type, const Word& w) {
    RaiseResult res;
    res.highest = w;
    const int labels = num_labels(type);
    for (;;) {
        bool moved = false;
        for (int i = 1; i <= labels; ++i) {
            if (auto up = op_e(type, i, res.highest)) {
                res.highest = std::move(*up);
                res.labels.push_back(i);
                moved = true;
                break;
            }
        }
        if (!moved) return res;
    }
}

std::optional<Word> apply_e_sequence(const CrystalType& type, const Word& w,
                                     const OperatorSequence& labels) {
    Word cur = w;
    for (int i : labels) {
        auto next = op_e(type, i, cur);
        if (!next) return std::nullopt;
        cur = std::move(*next);
    }
    return cur;
}

std::optional<Word> apply_f_sequence(const CrystalType& type, const Word& w,
                                     const OperatorSequence& labels) {
    Word cur = w;
    for (int i : labels) {
        auto next = op_f(type, i, cur);
        if (!next) return std::nullopt;
        cur = std::move(*next);
    }
    return cur;
}

std::optional<Letter> parse_letter(const CrystalType& type, const std::string& tok) {
    if (tok.empty()) return std::nullopt;
    std::size_t pos = 0;
    long val = 0;
    try {
        val = std::stol(tok, &pos);
    } catch (...) {
        return std::nullopt;
    }
    if (pos != tok.size()) return std::nullopt;
    const Letter x = static_cast<Letter>(val);
    if (!has_letter(type, x)) return std::nullopt;
    return x;
}

std::string format_letter(Letter x) { return std::to_string(x); }

std::optional<Word> parse_word(const CrystalType& type, const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        const auto x = parse_letter(type, tok);
        if (!x) return std::nullopt;
        w.push_back(*x);
    }
    return w;
}

std::string format_word(const Word& w) {
    std::string out;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (j) out += ' ';
        out += format_letter(w[j]);
    }
    return out;
}

}  // namespace crystal
