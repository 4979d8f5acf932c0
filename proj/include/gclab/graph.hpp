#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace gclab {

struct Edge {
    int u, v; // u < v
};

// Simple undirected graph: sorted adjacency lists plus an edge list with
// stable indices. Loops and parallel edges are rejected at construction.
class Graph {
  public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const;
    int min_degree() const;
    bool adjacent(int u, int v) const;
    int edge_index(int u, int v) const; // -1 if absent

    bool connected() const;
    int component_count() const;
    std::vector<int> component_ids() const;

    // New graph on the kept vertices (ids compacted, order preserved).
    Graph induced(const std::vector<int>& keep) const;
    Graph without_edge(int edge_id) const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Direction bit per edge: false = (u -> v) as stored, true = (v -> u).
struct Orientation {
    std::vector<bool> flipped;
    int tail(const Graph& g, int e) const { return flipped[static_cast<std::size_t>(e)] ? g.edge(e).v : g.edge(e).u; }
    int head(const Graph& g, int e) const { return flipped[static_cast<std::size_t>(e)] ? g.edge(e).u : g.edge(e).v; }
};

// Deterministic orientation. Seed 0 directs every edge from the endpoint
// nearer its component's root (lowest id) outward, so trees are oriented
// away from vertex 0; ties and other seeds use seeded pseudorandom bits.
Orientation orient(const Graph& g, std::uint64_t seed);

using Rotation = std::vector<std::vector<int>>;

// A generated catalog entry. Rotation present for the plane families;
// the outerplanar/planar flags are declarations of the construction,
// not computed properties.
struct GeneratedGraph {
    std::string name;
    Graph graph;
    std::optional<Rotation> rotation;
    bool outerplanar = false;
    bool planar = false;
};

// Frozen vertex numbering per family:
//   path(n): 0..n-1 along the path              cycle(n): 0..n-1 cyclic
//   wheel(n): rim 0..n-1 cyclic, hub n          star(n): hub 0, leaves 1..n
//   complete(n), biclique(a,b): parts 0..a-1 / a..a+b-1
//   theta(m): ends 0,1; 2 and 3 are the middle of the two 2-paths;
//             4.. the interior of the 2m-path
//   prism(n): outer 0..n-1, inner n+i paired with i  (cube = prism(4))
//   fan(n): path 0..n-2, apex n-1
//   tree(n,seed): seeded Pruefer decode
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_wheel(int n);
Graph make_complete(int n);
Graph make_biclique(int a, int b);
Graph make_star(int n);
Graph make_theta(int m);
Graph make_random_tree(int n, std::uint64_t seed);

GeneratedGraph generate(const std::string& family, const std::vector<long>& params);
// "cycle:5", "tree:8,3", "cube", "file:path.json"
GeneratedGraph make_named(const std::string& spec);

// Derive the rotation system from a face list (each face a clockwise vertex
// walk). The directed edges of the walks must cover each graph edge exactly
// once in each direction; throws otherwise.
Rotation rotation_from_faces(const Graph& g, const std::vector<std::vector<int>>& faces);

// {"n": int, "edges": [[u,v],...], "rotation": [[...],...]?}
nlohmann::json graph_to_json(const Graph& g, const std::optional<Rotation>& rot = std::nullopt);
GeneratedGraph graph_from_json(const nlohmann::json& j);

} // namespace gclab
