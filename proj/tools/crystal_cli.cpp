// Command-line interface to the crystal plactic-monoid library: normal
// forms, word equality, component isomorphism, rule/automaton dumps,
// crystal components, and self-check suites.

#include <cstdio>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "crystal/automata.hpp"
#include "crystal/crystal_graph.hpp"
#include "crystal/presentations.hpp"
#include "json.hpp"

using namespace crystal;
using nlohmann::json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

struct Options {
    std::string type_spec = "A:2";
    std::size_t max_class = 1'000'000;
    std::size_t max_vertices = 50'000;
    unsigned seed = 20260824;
    bool json_output = false;
};

CrystalType require_type(const Options& opt) {
    const auto type = parse_type(opt.type_spec);
    if (!type) throw CLI::ValidationError("--type", "bad type spec: use A:n, B:n, C:n, D:n, or G2");
    if (type->family != Family::G2 && (type->rank < 1 || type->rank > 8))
        throw CLI::ValidationError("--type", "rank out of the supported range 1..8");
    if (type->family == Family::D && type->rank < 2)
        throw CLI::ValidationError("--type", "type D needs rank >= 2");
    return *type;
}

Word require_word(const CrystalType& type, const std::string& text) {
    const auto w = parse_word(type, text);
    if (!w)
        throw CLI::ValidationError("word", "cannot parse \"" + text +
                                               "\" over " + to_string(type));
    return *w;
}

json column_json(const Column& c) {
    json out = json::array();
    for (const Letter x : c.cells) out.push_back(x);
    return out;
}

json sigma_word_json(const SigmaWord& w) {
    json out = json::array();
    for (const auto& s : w.symbols) out.push_back(column_json(s.column.column));
    return out;
}

int cmd_nf(const Options& opt, const std::string& word_text) {
    const CrystalType type = require_type(opt);
    const Word w = require_word(type, word_text);
    const SigmaWord nf = incremental_nf(type, w);
    if (opt.json_output) {
        json out;
        out["type"] = to_string(type);
        out["word"] = format_word(w);
        out["normal_form"] = format_word(reading(nf));
        out["columns"] = sigma_word_json(nf);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << format_word(reading(nf)) << "\n";
        std::cout << format_tabloid(to_tabloid(nf)) << "\n";
    }
    return kExitTrue;
}

int cmd_eq(const Options& opt, const std::string& u_text,
           const std::string& v_text) {
    const CrystalType type = require_type(opt);
    const bool same = equal(type, require_word(type, u_text),
                            require_word(type, v_text));
    std::cout << (same ? "equal" : "not equal") << "\n";
    return same ? kExitTrue : kExitFalse;
}

int cmd_iso(const Options& opt, const std::string& u_text,
            const std::string& v_text) {
    const CrystalType type = require_type(opt);
    const bool iso = components_isomorphic(type, require_word(type, u_text),
                                           require_word(type, v_text));
    std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
    return iso ? kExitTrue : kExitFalse;
}

int cmd_rules(const Options& opt) {
    const CrystalType type = require_type(opt);
    const RuleTable& table = rule_table_for(type);
    json out;
    out["type"] = to_string(type);
    out["rank"] = type.rank;
    out["sigma"] = json::array();
    for (const auto& c : table.sigma())
        out["sigma"].push_back(column_json(c.column));
    out["rules"] = json::array();
    for (const auto& [key, rule] : table.rules()) {
        json r;
        r["lhs"] = json::array(
            {column_json(rule.lhs_first.column.column),
             column_json(rule.lhs_second.column.column)});
        r["rhs"] = json::array();
        for (const auto& s : rule.rhs)
            r["rhs"].push_back(column_json(s.column.column));
        out["rules"].push_back(std::move(r));
    }
    std::cout << out.dump(2) << "\n";
    return kExitTrue;
}

int cmd_columns(const Options& opt) {
    const CrystalType type = require_type(opt);
    const auto cols = enumerate_admissible_columns(type);
    if (opt.json_output) {
        json out = json::array();
        for (const auto& c : cols) out.push_back(column_json(c.column));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : cols)
            std::cout << format_column(c.column) << "\n";
        std::cout << cols.size() << " admissible columns\n";
    }
    return kExitTrue;
}

int cmd_component(const Options& opt, const std::string& word_text,
                  bool dot) {
    const CrystalType type = require_type(opt);
    const Word w = require_word(type, word_text);
    const ComponentGraph g = component(type, w, opt.max_vertices);
    if (dot) {
        std::cout << to_dot(g);
    } else if (opt.json_output) {
        json out;
        out["type"] = to_string(type);
        out["root"] = format_word(g.root);
        out["vertices"] = json::array();
        for (const Word& v : g.vertices) out["vertices"].push_back(format_word(v));
        out["edges"] = json::array();
        for (const CrystalEdge& e : g.edges)
            out["edges"].push_back(json::array(
                {format_word(e.from), e.label, format_word(e.to)}));
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << g.vertices.size() << " vertices, " << g.edges.size()
                  << " edges, root " << format_word(g.root) << "\n";
    }
    return kExitTrue;
}

int cmd_wt(const Options& opt, const std::string& word_text) {
    const CrystalType type = require_type(opt);
    const Weight wt = weight(type, require_word(type, word_text));
    for (std::size_t i = 0; i < wt.size(); ++i)
        std::cout << (i ? " " : "") << wt[i];
    std::cout << "\n";
    return kExitTrue;
}

int cmd_raise(const Options& opt, const std::string& word_text) {
    const CrystalType type = require_type(opt);
    const RaiseResult r =
        raise_to_highest(type, require_word(type, word_text));
    std::cout << format_word(r.highest) << "\n";
    for (std::size_t i = 0; i < r.labels.size(); ++i)
        std::cout << (i ? " " : "") << r.labels[i];
    std::cout << "\n";
    return kExitTrue;
}

int cmd_dfa(const Options& opt) {
    const CrystalType type = require_type(opt);
    const NfDfa dfa = nf_dfa(type);
    json out;
    out["type"] = to_string(type);
    out["states"] = dfa.num_states();
    out["sigma"] = json::array();
    for (const auto& c : dfa.sigma) out["sigma"].push_back(column_json(c.column));
    out["transitions"] = json::array();
    for (std::size_t i = 0; i < dfa.sigma.size(); ++i)
        for (std::size_t j = 0; j < dfa.sigma.size(); ++j)
            if (dfa.allowed[i][j])
                out["transitions"].push_back(json::array(
                    {static_cast<int>(i), static_cast<int>(j)}));
    std::cout << out.dump(2) << "\n";
    return kExitTrue;
}

int cmd_transducer(const Options& opt, const std::string& side_name) {
    const CrystalType type = require_type(opt);
    const Side side = side_name == "left" ? Side::Left : Side::Right;
    const Transducer td =
        materialize_transducer(rule_table_for(type), side);
    json out;
    out["type"] = to_string(type);
    out["side"] = side_name;
    out["states"] = json::array();
    for (const auto& window : td.states) {
        json st = json::array();
        for (const Word& c : window) st.push_back(json(c));
        out["states"].push_back(std::move(st));
    }
    out["transitions"] = json::array();
    for (const auto& [key, tr] : td.delta) {
        json t;
        t["from"] = key.first;
        t["input"] = json(key.second);
        t["to"] = tr.next;
        t["output"] = json::array();
        for (const Word& c : tr.output) t["output"].push_back(json(c));
        out["transitions"].push_back(std::move(t));
    }
    std::cout << out.dump(2) << "\n";
    return kExitTrue;
}

struct SuiteReport {
    int passed = 0;
    int failed = 0;

    void tally(bool ok) { ok ? ++passed : ++failed; }
};

Word random_word(const CrystalType& type, int len, std::mt19937& rng) {
    const auto alpha = alphabet(type);
    std::uniform_int_distribution<std::size_t> pick(0, alpha.size() - 1);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(alpha[pick(rng)]);
    return w;
}

SuiteReport suite_oracle(const Options& opt, const CrystalType& type) {
    SuiteReport report;
    std::mt19937 rng(opt.seed);
    const auto p = build_presentation(type);
    OracleLimits limits;
    limits.max_class_size = opt.max_class;
    const int max_len = type.family == Family::G2 ? 4 : 5;
    for (int trial = 0; trial < 50; ++trial) {
        const Word w = random_word(type, 1 + trial % max_len, rng);
        report.tally(nf_word(type, w) == oracle_nf(p, w, limits));
    }
    return report;
}

SuiteReport suite_rules(const CrystalType& type) {
    SuiteReport report;
    const RuleTable& table = rule_table_for(type);
    std::size_t tableau_pairs = 0;
    for (const auto& s : table.sigma())
        for (const auto& t : table.sigma())
            if (is_tableau_pair(type, s, t)) ++tableau_pairs;
    report.tally(table.rules().size() + tableau_pairs ==
                 table.sigma().size() * table.sigma().size());
    for (const auto& [key, rule] : table.rules()) {
        Tabloid rhs;
        for (const auto& s : rule.rhs) rhs.columns.push_back(s.column);
        report.tally(is_tableau(type, rhs));
        Word lhs = rule.lhs_first.column.column.cells;
        lhs.insert(lhs.end(), rule.lhs_second.column.column.cells.begin(),
                   rule.lhs_second.column.column.cells.end());
        report.tally(weight(type, reading(rhs)) == weight(type, lhs));
    }
    return report;
}

SuiteReport suite_mult(const Options& opt, const CrystalType& type) {
    SuiteReport report;
    std::mt19937 rng(opt.seed);
    const RuleTable& table = rule_table_for(type);
    const auto letters = alphabet(type);
    for (int trial = 0; trial < 40; ++trial) {
        const SigmaWord u = random_irreducible(table, 6, rng);
        for (const Letter x : letters) {
            SigmaWord ux = u;
            ux.symbols.push_back(
                {*make_admissible(type, Column{{x}})});
            report.tally(right_mul(table, u, x) == rewrite_nf(table, ux));
            SigmaWord xu;
            xu.symbols.push_back({*make_admissible(type, Column{{x}})});
            xu.symbols.insert(xu.symbols.end(), u.symbols.begin(),
                              u.symbols.end());
            report.tally(left_mul(table, x, u) == rewrite_nf(table, xu));
        }
    }
    return report;
}

SuiteReport suite_bounds(const Options& opt, const CrystalType& type) {
    SuiteReport report;
    std::mt19937 rng(opt.seed);
    const int bound = type.family == Family::G2 ? 2 : 1;
    report.tally(length_bound_report(rule_table_for(type), 60, rng) <= bound);
    return report;
}

SuiteReport suite_graph(const Options& opt, const CrystalType& type) {
    SuiteReport report;
    std::mt19937 rng(opt.seed);
    for (int trial = 0; trial < 15; ++trial) {
        const Word w = random_word(type, 1 + trial % 4, rng);
        const ComponentGraph g = component(type, w, opt.max_vertices);
        report.tally(unique_highest_check(g));
    }
    return report;
}

int cmd_check(const Options& opt, const std::string& suite) {
    const CrystalType type = require_type(opt);
    SuiteReport report;
    if (suite == "oracle")
        report = suite_oracle(opt, type);
    else if (suite == "rules")
        report = suite_rules(type);
    else if (suite == "mult")
        report = suite_mult(opt, type);
    else if (suite == "bounds")
        report = suite_bounds(opt, type);
    else if (suite == "graph")
        report = suite_graph(opt, type);
    else
        throw CLI::ValidationError(
            "suite", "unknown suite (oracle, rules, mult, bounds, graph)");
    std::cout << "suite " << suite << " on " << to_string(type) << ": "
              << report.passed << " passed, " << report.failed << " failed\n";
    return report.failed == 0 ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crystal plactic monoid toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opt;
    app.add_option("--type", opt.type_spec,
                   "crystal type: A:n, B:n, C:n, D:n, or G2");
    app.add_option("--max-class", opt.max_class,
                   "oracle congruence-class size cap");
    app.add_option("--max-vertices", opt.max_vertices,
                   "crystal component vertex cap");
    app.add_option("--seed", opt.seed, "RNG seed for sampled suites");
    app.add_flag("--json", opt.json_output, "machine-readable output");

    std::string word_text, u_text, v_text, suite, side = "right";
    bool dot = false;

    auto* nf = app.add_subcommand("nf", "normal form of a word");
    nf->add_option("word", word_text)->required();
    auto* eq = app.add_subcommand("eq", "are two words equal in the monoid?");
    eq->add_option("u", u_text)->required();
    eq->add_option("v", v_text)->required();
    auto* iso = app.add_subcommand(
        "iso", "do two words lie in isomorphic crystal components?");
    iso->add_option("u", u_text)->required();
    iso->add_option("v", v_text)->required();
    app.add_subcommand("rules", "dump the rewriting system as JSON");
    app.add_subcommand("columns", "list the admissible columns");
    auto* comp =
        app.add_subcommand("component", "enumerate a crystal component");
    comp->add_option("word", word_text)->required();
    comp->add_flag("--dot", dot, "emit DOT");
    auto* wt = app.add_subcommand("wt", "weight of a word");
    wt->add_option("word", word_text)->required();
    auto* raise =
        app.add_subcommand("raise", "raise a word to highest weight");
    raise->add_option("word", word_text)->required();
    app.add_subcommand("dfa", "dump the normal-form acceptor as JSON");
    auto* trans = app.add_subcommand(
        "transducer", "materialize a multiplication transducer as JSON");
    trans->add_option("--side", side, "left or right")
        ->check(CLI::IsMember({"left", "right"}));
    auto* check = app.add_subcommand("check", "run a named invariant suite");
    check->add_option("suite", suite)->required();

    try {
        app.parse(argc, argv);
        if (app.got_subcommand("nf")) return cmd_nf(opt, word_text);
        if (app.got_subcommand("eq")) return cmd_eq(opt, u_text, v_text);
        if (app.got_subcommand("iso")) return cmd_iso(opt, u_text, v_text);
        if (app.got_subcommand("rules")) return cmd_rules(opt);
        if (app.got_subcommand("columns")) return cmd_columns(opt);
        if (app.got_subcommand("component"))
            return cmd_component(opt, word_text, dot);
        if (app.got_subcommand("wt")) return cmd_wt(opt, word_text);
        if (app.got_subcommand("raise")) return cmd_raise(opt, word_text);
        if (app.got_subcommand("dfa")) return cmd_dfa(opt);
        if (app.got_subcommand("transducer")) return cmd_transducer(opt, side);
        if (app.got_subcommand("check")) return cmd_check(opt, suite);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitLimit;
    } catch (const std::runtime_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
