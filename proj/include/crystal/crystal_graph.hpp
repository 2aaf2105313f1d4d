#ifndef CRYSTAL_CRYSTAL_GRAPH_HPP
#define CRYSTAL_CRYSTAL_GRAPH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "crystal/core.hpp"

// Connected components of the crystal graph of words: enumeration,
// structural checks, and DOT export.

namespace crystal {

struct CrystalEdge {
    Word from;
    int label = 0;
    Word to;

    bool operator==(const CrystalEdge&) const = default;
    auto operator<=>(const CrystalEdge&) const = default;
};

// The component B(w): all words reachable from w by e_i/f_i, the f-edges
// between them, and the unique highest-weight vertex as root.
struct ComponentGraph {
    CrystalType type;
    std::vector<Word> vertices;      // sorted, no duplicates
    std::vector<CrystalEdge> edges;  // sorted; each edge is an f_i step
    Word root;

    bool has_vertex(const Word& w) const;
};

// Enumerates B(w) by closure under the defined operators.  Throws
// std::length_error if the component exceeds max_vertices.
ComponentGraph component(const CrystalType& type, const Word& w,
                         std::size_t max_vertices = 50000);

// Does the component contain exactly one vertex with no defined e_i?
bool unique_highest_check(const ComponentGraph& g);

// Deterministic DOT rendering: stable vertex order, edges labelled by
// their operator index, the root drawn with a doubled border.
std::string to_dot(const ComponentGraph& g);

}  // namespace crystal

#endif  // CRYSTAL_CRYSTAL_GRAPH_HPP
