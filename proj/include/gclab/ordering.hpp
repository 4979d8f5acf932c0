#pragma once

#include <vector>

#include "gclab/graph.hpp"

namespace gclab {

// Witness for col(G): an ordering in which every vertex sees at most
// col-1 earlier neighbors. Produced by repeated minimum-degree removal
// (ties broken by lowest id), which is exact for the coloring number.
struct DegeneracyCertificate {
    int col = 0;
    std::vector<int> ordering;     // permutation of V
    std::vector<int> back_degrees; // aligned with ordering
};

DegeneracyCertificate coloring_number(const Graph& g);

struct BlockDecomposition {
    std::vector<std::vector<int>> block_vertices; // sorted
    std::vector<std::vector<int>> block_edges;    // edge ids, sorted
    std::vector<int> cut_vertices;                // sorted
};

BlockDecomposition blocks(const Graph& g);

// True iff some block is neither a complete graph nor a cycle.
// Requires a connected input.
bool d_group_choosable_oracle(const Graph& g);

enum class CoreShape { k1, even_cycle, theta_2_2_2m, other };

struct PruneResult {
    Graph core;
    std::vector<int> core_vertices; // ids in the input graph
    CoreShape shape = CoreShape::other;
};

// Successively delete degree-1 vertices; classify what remains.
// A shape of k1, even_cycle or theta_2_2_2m marks the 2-choosable cores.
PruneResult prune_core(const Graph& g);

inline bool two_choosable_shape(CoreShape s) { return s != CoreShape::other; }

} // namespace gclab
