#pragma once

#include <vector>

#include "gclab/graph.hpp"

namespace gclab {

struct Origin {
    enum class Kind { vertex, edge };
    Kind kind;
    int id; // vertex id or edge index in the base graph
};

// A graph derived from a base graph together with the origin of each
// derived vertex. Total graphs list base vertices first (same ids), then
// one vertex per base edge in edge-index order; line graphs list only the
// edge vertices.
struct DerivedGraph {
    Graph graph;
    std::vector<Origin> origin;
    int base_vertex_count = 0;
    int base_edge_count = 0;

    int vertex_for_base_vertex(int v) const { return v; }
    int vertex_for_base_edge(int e) const { return base_vertex_count + e; }
};

DerivedGraph total_graph(const Graph& g);
DerivedGraph line_graph(const Graph& g);

} // namespace gclab
