#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gclab/derived.hpp"
#include "gclab/graph.hpp"
#include "gclab/group.hpp"

namespace gclab {

// Labels f : E(G) -> A, one value per edge index, read on the directed
// edge given by the accompanying Orientation.
struct EdgeLabeling {
    std::vector<int> values;
};

// Per-vertex color lists (sorted element indices). Uniform k-list
// assignments record k; degree-sized assignments leave it empty.
struct ListAssignment {
    std::vector<std::vector<int>> lists;
    std::optional<int> uniform_size;

    static ListAssignment full(const Graph& g, const Group& a);
    static ListAssignment uniform(const Graph& g, const std::vector<int>& list, int k);
};

struct Coloring {
    std::vector<int> colors;
};

// The re-checkable coloring invariant: list membership plus
// op(c(x), inv(c(y))) != f(xy) on every directed edge. Independent of the
// solver's search path.
bool coloring_valid(const Graph& g, const Orientation& o, const Group& a, const EdgeLabeling& f,
                    const ListAssignment& lists, const Coloring& c);

struct Budget {
    std::uint64_t max_nodes = 200'000'000ull;
    double max_seconds = 300.0;
};

Budget default_budget(); // honors GCLAB_BUDGET_NODES / GCLAB_BUDGET_SECONDS

struct CheckOptions {
    Budget budget = default_budget();
    int workers = 1;
};

enum class CheckStatus { holds, fails, budget_exceeded };

std::string to_string(CheckStatus s);

struct Witness {
    EdgeLabeling f;
    ListAssignment lists;
    std::uint64_t instance = 0; // index in the deterministic enumeration
};

struct CheckStats {
    std::uint64_t instances = 0;
    std::uint64_t nodes = 0;
    double millis = 0.0;
    std::string method;
};

// Outcome of an exhaustive check. A holds-verdict from enumeration is an
// exhaustion certificate (every normalized instance was visited); fails
// carries a witness that re-checks as unsolvable; budgets never turn into
// silent passes.
struct Verdict {
    CheckStatus status = CheckStatus::budget_exceeded;
    std::optional<Witness> witness;
    CheckStats stats;
};

nlohmann::json verdict_to_json(const Graph& g, const Orientation& o, const Verdict& v);

// Complete backtracking search: variable order is the degeneracy ordering,
// forward checking on each neighbor constraint. Node count reported via
// `nodes` when given.
std::optional<Coloring> solve(const Graph& g, const Orientation& o, const Group& a,
                              const EdgeLabeling& f, const ListAssignment& lists,
                              std::uint64_t* nodes = nullptr);

// For every f (normalized to the identity on a spanning forest), is there a
// coloring from full lists?
Verdict check_group_colorable(const Graph& g, const Group& a, const CheckOptions& opt = {});

// For every f and every k-list assignment (normalized so the identity lies
// in each list), is there a coloring? k = |A| forces full lists and reduces
// to the labeling sweep. When the instance space exceeds the node budget
// and col(G) <= k, the degeneracy certificate settles the holds-direction.
Verdict check_group_choosable(const Graph& g, const Group& a, int k, const CheckOptions& opt = {});

// Degree-sized lists instead of uniform k.
Verdict check_d_group_choosable(const Graph& g, const Group& a, const CheckOptions& opt = {});

// Color vertices in the given order, first admissible list element each.
// Succeeds whenever every vertex has more list elements than earlier
// neighbors.
std::optional<Coloring> greedy(const Graph& g, const std::vector<int>& ordering,
                               const Orientation& o, const Group& a, const EdgeLabeling& f,
                               const ListAssignment& lists);

struct TwoPhaseResult {
    std::optional<Coloring> coloring;
    int failed_phase = 0; // 1 or 2 when no coloring was produced
    int failed_element = -1; // vertex of T(g) that ran dry
};

// Total-coloring procedure: color the base vertices greedily along the
// degeneracy order of g, strike the two incident shifted colors from each
// edge list, then color the edge vertices greedily along the degeneracy
// order of the line graph. line_col_estimate is col(L(g)); all lists must
// have at least line_col_estimate + 2 entries.
TwoPhaseResult two_phase_total(const Graph& base, const DerivedGraph& tg, const Orientation& o,
                               const Group& a, const EdgeLabeling& f, const ListAssignment& lists,
                               int line_col_estimate);

struct HardLabeling {
    Graph base;          // C_{3t}
    DerivedGraph tg;     // T(C_{3t})
    Orientation orientation;
    EdgeLabeling f;      // over Z3: 1 and 2 on the two closing line edges
    int edge_one = -1;   // T-edge indices carrying the nonzero labels
    int edge_two = -1;
};

// The Z3 labeling on T(C_{3t}) with no admissible coloring: label 1 on the
// line edge u_{n-1} -> u_n, label 2 on u_n -> u_1, identity elsewhere.
HardLabeling c3t_hard_labeling(int t);

struct RandomizedReport {
    int trials = 0;
    int failures = 0;
    std::uint64_t seed = 0;
    std::vector<Witness> failure_witnesses; // capped
    double millis = 0.0;
};

// Samples f uniformly (and lists of size list_size when given) and solves
// each instance. planted labelings are checked before the random trials.
RandomizedReport randomized_colorability(const Graph& g, const Group& a, int trials,
                                         std::uint64_t seed,
                                         const std::vector<EdgeLabeling>& planted = {},
                                         std::optional<int> list_size = std::nullopt);

} // namespace gclab
