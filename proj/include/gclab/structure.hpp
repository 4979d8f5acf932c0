#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gclab/graph.hpp"

namespace gclab {

// Graph plus rotation system. Rotation lists must be permutations of the
// neighbor sets; that is the only embedding validity this module checks
// (planarity of abstract graphs is out of scope, Euler's identity is
// checked downstream where plane inputs are required).
class PlaneGraph {
  public:
    PlaneGraph(Graph g, Rotation rot);
    explicit PlaneGraph(const GeneratedGraph& gg);

    const Graph& graph() const { return g_; }
    const Rotation& rotation() const { return rot_; }
    // cyclic successor of neighbor `from` in the rotation at v
    int next_at(int v, int from) const;

  private:
    Graph g_;
    Rotation rot_;
};

struct FaceWalk {
    std::vector<int> vertices; // closed boundary walk, one entry per edge step
    int degree() const { return static_cast<int>(vertices.size()); }
    int multiplicity(int v) const; // m_v(f): times the walk passes through v
    int min_incident_degree(const Graph& g) const; // delta(f)
};

// All faces by next-edge-in-rotation traversal.
std::vector<FaceWalk> faces(const PlaneGraph& pg);

// |V| - |E| + |F| == 2 (connected inputs).
bool euler_formula_holds(const PlaneGraph& pg);

bool has_cycle_len(const Graph& g, int len);
// nullopt for forests ("infinite" girth)
std::optional<int> girth(const Graph& g);

struct KNet {
    std::vector<int> cycle;
    std::pair<int, int> chord;
};
// Some k-cycle with a chord. Cycle enumeration is capped at length 8.
std::optional<KNet> find_knet(const Graph& g, int k);

// An even cycle whose alternating vertices all have degree 2 in g.
std::optional<std::vector<int>> find_2_alternating_cycle(const Graph& g);

struct LightEdgeRule {
    enum class Kind { degree_sum, deg3_and_max5 };
    Kind kind = Kind::degree_sum;
    int max_sum = 13;

    static LightEdgeRule sum_at_most(int s) { return {Kind::degree_sum, s}; }
    static LightEdgeRule deg3_max5() { return {Kind::deg3_and_max5, 0}; }
};

// First edge (by index) satisfying the rule.
std::optional<int> find_light_edge(const Graph& g, const LightEdgeRule& rule);

enum class OuterplanarConfig { a, b, c, d, none };

struct OuterplanarWitness {
    OuterplanarConfig tag = OuterplanarConfig::none;
    std::vector<int> vertices;
};

// First of: (a) a degree-1 vertex; (b) an edge with both ends of degree 2;
// (c) a triangle uxy with deg(u)=2, deg(x)=3; (d) two triangles xu1v1,
// xu2v2 with deg(u1)=deg(u2)=2, deg(x)=4, five distinct vertices.
OuterplanarWitness outerplanar_configuration(const Graph& g);

enum class MinorId { k4, k23, k2bar_k1k2 };

// Exact fixed-minor test. All three patterns have maximum degree 3, so
// minor containment coincides with topological containment; the search
// branches over branch-vertex images and internally disjoint paths.
bool has_minor(const Graph& g, MinorId h, int size_cap = 14);

std::string to_string(OuterplanarConfig c);

} // namespace gclab
