#include "gclab/derived.hpp"

namespace gclab {

DerivedGraph total_graph(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<std::pair<int, int>> es;
    // base adjacencies keep their ids
    for (const auto& e : g.edges()) es.push_back({e.u, e.v});
    // vertex-edge incidences
    for (int i = 0; i < m; ++i) {
        es.push_back({g.edge(i).u, n + i});
        es.push_back({g.edge(i).v, n + i});
    }
    // edge pairs sharing an endpoint
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const auto &a = g.edge(i), &b = g.edge(j);
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
                es.push_back({n + i, n + j});
        }
    DerivedGraph out;
    out.graph = Graph(n + m, es);
    out.base_vertex_count = n;
    out.base_edge_count = m;
    for (int v = 0; v < n; ++v) out.origin.push_back({Origin::Kind::vertex, v});
    for (int i = 0; i < m; ++i) out.origin.push_back({Origin::Kind::edge, i});
    return out;
}

DerivedGraph line_graph(const Graph& g) {
    const int m = g.edge_count();
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const auto &a = g.edge(i), &b = g.edge(j);
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) es.push_back({i, j});
        }
    DerivedGraph out;
    out.graph = Graph(m, es);
    out.base_vertex_count = 0;
    out.base_edge_count = m;
    for (int i = 0; i < m; ++i) out.origin.push_back({Origin::Kind::edge, i});
    return out;
}

} // namespace gclab
