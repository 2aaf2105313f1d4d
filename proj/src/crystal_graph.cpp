#include "crystal/crystal_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crystal {

bool ComponentGraph::has_vertex(const Word& w) const {
    return std::binary_search(vertices.begin(), vertices.end(), w);
}

ComponentGraph component(const CrystalType& type, const Word& w,
                         std::size_t max_vertices) {
    if (max_vertices == 0)
        throw std::invalid_argument("component: max_vertices must be > 0");
    std::set<Word> seen{w};
    std::set<CrystalEdge> edges;
    std::deque<Word> work{w};
    const int labels = num_labels(type);
    while (!work.empty()) {
        const Word v = work.front();
        work.pop_front();
        for (int i = 1; i <= labels; ++i) {
            if (const auto up = op_e(type, i, v)) {
                edges.insert({*up, i, v});
                if (seen.insert(*up).second) work.push_back(*up);
            }
            if (const auto down = op_f(type, i, v)) {
                edges.insert({v, i, *down});
                if (seen.insert(*down).second) work.push_back(*down);
            }
            if (seen.size() > max_vertices)
                throw std::length_error(
                    "component: vertex cap exceeded at " + format_word(w));
        }
    }
    ComponentGraph g;
    g.type = type;
    g.vertices.assign(seen.begin(), seen.end());
    g.edges.assign(edges.begin(), edges.end());
    g.root = raise_to_highest(type, w).highest;
    return g;
}

bool unique_highest_check(const ComponentGraph& g) {
    std::size_t count = 0;
    for (const Word& v : g.vertices)
        if (is_highest_weight(g.type, v)) ++count;
    return count == 1;
}

std::string to_dot(const ComponentGraph& g) {
    std::ostringstream out;
    out << "digraph crystal {\n";
    out << "  rankdir=TB;\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        out << "  v" << i << " [label=\"" << format_word(g.vertices[i])
            << "\"";
        if (g.vertices[i] == g.root) out << ", peripheries=2";
        out << "];\n";
    }
    const auto index_of = [&](const Word& v) {
        return std::lower_bound(g.vertices.begin(), g.vertices.end(), v) -
               g.vertices.begin();
    };
    for (const CrystalEdge& e : g.edges)
        out << "  v" << index_of(e.from) << " -> v" << index_of(e.to)
            << " [label=\"" << e.label << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace crystal
