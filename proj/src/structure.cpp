#include "gclab/structure.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace gclab {

PlaneGraph::PlaneGraph(Graph g, Rotation rot) : g_(std::move(g)), rot_(std::move(rot)) {
    if (static_cast<int>(rot_.size()) != g_.vertex_count())
        throw std::invalid_argument("rotation-invalid: wrong vertex count");
    for (int v = 0; v < g_.vertex_count(); ++v) {
        auto sorted = rot_[static_cast<std::size_t>(v)];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g_.neighbors(v))
            throw std::invalid_argument("rotation-invalid: not a permutation of the neighbors");
    }
}

PlaneGraph::PlaneGraph(const GeneratedGraph& gg)
    : PlaneGraph(gg.graph, gg.rotation ? *gg.rotation
                                       : throw std::invalid_argument(
                                             "graph " + gg.name + " carries no rotation")) {}

int PlaneGraph::next_at(int v, int from) const {
    const auto& r = rot_[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] == from) return r[(i + 1) % r.size()];
    throw std::logic_error("next_at: neighbor not in rotation");
}

int FaceWalk::multiplicity(int v) const {
    return static_cast<int>(std::count(vertices.begin(), vertices.end(), v));
}

int FaceWalk::min_incident_degree(const Graph& g) const {
    int d = INT_MAX;
    for (int v : vertices) d = std::min(d, g.degree(v));
    return d;
}

std::vector<FaceWalk> faces(const PlaneGraph& pg) {
    const Graph& g = pg.graph();
    std::set<std::pair<int, int>> seen;
    std::vector<FaceWalk> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        for (auto [su, sv] : {std::pair{g.edge(e).u, g.edge(e).v}, std::pair{g.edge(e).v, g.edge(e).u}}) {
            if (seen.count({su, sv})) continue;
            FaceWalk f;
            int u = su, v = sv;
            do {
                seen.insert({u, v});
                f.vertices.push_back(u);
                const int w = pg.next_at(v, u);
                u = v;
                v = w;
            } while (!(u == su && v == sv));
            out.push_back(std::move(f));
        }
    }
    return out;
}

bool euler_formula_holds(const PlaneGraph& pg) {
    if (!pg.graph().connected()) return false;
    const auto F = faces(pg).size();
    return pg.graph().vertex_count() - pg.graph().edge_count() + static_cast<int>(F) == 2;
}

namespace {

// Enumerate simple cycles of length exactly `len` in canonical form
// (minimum vertex first, direction fixed by second < last); invokes the
// callback until it returns true.
template <typename Cb>
bool for_each_cycle(const Graph& g, int len, Cb&& cb) {
    const int n = g.vertex_count();
    std::vector<int> path;
    std::vector<bool> onpath(static_cast<std::size_t>(n), false);
    std::function<bool(int, int)> extend = [&](int start, int cur) -> bool {
        if (static_cast<int>(path.size()) == len)
            return g.adjacent(cur, start) && path[1] < path.back() && cb(path);
        for (int w : g.neighbors(cur)) {
            if (w <= start || onpath[static_cast<std::size_t>(w)]) continue;
            path.push_back(w);
            onpath[static_cast<std::size_t>(w)] = true;
            if (extend(start, w)) return true;
            onpath[static_cast<std::size_t>(w)] = false;
            path.pop_back();
        }
        return false;
    };
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        onpath.assign(static_cast<std::size_t>(n), false);
        onpath[static_cast<std::size_t>(s)] = true;
        if (extend(s, s)) return true;
    }
    return false;
}

} // namespace

bool has_cycle_len(const Graph& g, int len) {
    if (len < 3) throw std::invalid_argument("has_cycle_len: len >= 3");
    if (len > g.vertex_count()) return false;
    return for_each_cycle(g, len, [](const std::vector<int>&) { return true; });
}

std::optional<int> girth(const Graph& g) {
    // min over all BFS roots of the shortest cycle the BFS exposes
    int best = INT_MAX;
    const int n = g.vertex_count();
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1), par(static_cast<std::size_t>(n), -1);
        std::queue<int> q;
        dist[static_cast<std::size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    par[static_cast<std::size_t>(w)] = u;
                    q.push(w);
                } else if (w != par[static_cast<std::size_t>(u)]) {
                    best = std::min(best, dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1);
                }
            }
        }
    }
    if (best == INT_MAX) return std::nullopt;
    return best;
}

std::optional<KNet> find_knet(const Graph& g, int k) {
    if (k < 4) throw std::invalid_argument("find_knet: k >= 4");
    if (k > 8) throw std::invalid_argument("find_knet: cycle enumeration capped at length 8");
    KNet net;
    bool found = for_each_cycle(g, k, [&](const std::vector<int>& cyc) {
        for (int i = 0; i < k; ++i)
            for (int j = i + 2; j < k; ++j) {
                if (i == 0 && j == k - 1) continue; // consecutive on the cycle
                if (g.adjacent(cyc[static_cast<std::size_t>(i)], cyc[static_cast<std::size_t>(j)])) {
                    net.cycle = cyc;
                    net.chord = {cyc[static_cast<std::size_t>(i)], cyc[static_cast<std::size_t>(j)]};
                    return true;
                }
            }
        return false;
    });
    if (!found) return std::nullopt;
    return net;
}

std::optional<std::vector<int>> find_2_alternating_cycle(const Graph& g) {
    // Connector u of degree 2 joins its two neighbors; a 2-alternating
    // cycle is a cycle in that auxiliary multigraph whose pivots avoid the
    // chosen connectors.
    struct Conn {
        int a, b, u;
    };
    std::vector<Conn> conns;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (g.degree(u) == 2)
            conns.push_back({g.neighbors(u)[0], g.neighbors(u)[1], u});
    if (conns.empty()) return std::nullopt;

    std::vector<int> pivots;
    std::vector<int> used_conn;
    std::set<int> pivot_set, conn_set;
    std::optional<std::vector<int>> result;

    std::function<bool(int, int)> extend = [&](int start, int cur) -> bool {
        for (std::size_t ci = 0; ci < conns.size(); ++ci) {
            const auto& c = conns[ci];
            if (conn_set.count(static_cast<int>(ci))) continue;
            int nxt;
            if (c.a == cur) nxt = c.b;
            else if (c.b == cur) nxt = c.a;
            else continue;
            if (pivot_set.count(c.u)) continue;
            if (nxt == start && pivots.size() >= 2) {
                // close: connectors must avoid every pivot
                used_conn.push_back(static_cast<int>(ci));
                bool ok = true;
                for (int uc : used_conn)
                    if (pivot_set.count(conns[static_cast<std::size_t>(uc)].u)) ok = false;
                if (ok) {
                    std::vector<int> cyc;
                    for (std::size_t i = 0; i < pivots.size(); ++i) {
                        cyc.push_back(pivots[i]);
                        cyc.push_back(conns[static_cast<std::size_t>(used_conn[i])].u);
                    }
                    result = cyc;
                    return true;
                }
                used_conn.pop_back();
                continue;
            }
            if (nxt < start || pivot_set.count(nxt)) continue;
            if (conns.size() < 2) continue;
            pivots.push_back(nxt);
            pivot_set.insert(nxt);
            used_conn.push_back(static_cast<int>(ci));
            conn_set.insert(static_cast<int>(ci));
            if (extend(start, nxt)) return true;
            conn_set.erase(static_cast<int>(ci));
            used_conn.pop_back();
            pivot_set.erase(nxt);
            pivots.pop_back();
        }
        return false;
    };

    for (int s = 0; s < g.vertex_count(); ++s) {
        pivots.assign(1, s);
        pivot_set = {s};
        used_conn.clear();
        conn_set.clear();
        if (extend(s, s)) return result;
    }
    return std::nullopt;
}

std::optional<int> find_light_edge(const Graph& g, const LightEdgeRule& rule) {
    for (int e = 0; e < g.edge_count(); ++e) {
        const int du = g.degree(g.edge(e).u), dv = g.degree(g.edge(e).v);
        bool hit = false;
        switch (rule.kind) {
            case LightEdgeRule::Kind::degree_sum: hit = du + dv <= rule.max_sum; break;
            case LightEdgeRule::Kind::deg3_and_max5:
                hit = (du == 3 && dv <= 5) || (dv == 3 && du <= 5);
                break;
        }
        if (hit) return e;
    }
    return std::nullopt;
}

namespace {

std::vector<std::array<int, 3>> triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            for (int w : g.neighbors(v)) {
                if (w <= v) continue;
                if (g.adjacent(u, w)) out.push_back({u, v, w});
            }
        }
    return out;
}

} // namespace

OuterplanarWitness outerplanar_configuration(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) return {OuterplanarConfig::a, {v}};
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.degree(g.edge(e).u) == 2 && g.degree(g.edge(e).v) == 2)
            return {OuterplanarConfig::b, {g.edge(e).u, g.edge(e).v}};
    const auto tris = triangles(g);
    for (const auto& t : tris)
        for (int u : t)
            for (int x : t)
                if (u != x && g.degree(u) == 2 && g.degree(x) == 3) {
                    int y = t[0] + t[1] + t[2] - u - x;
                    return {OuterplanarConfig::c, {u, x, y}};
                }
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (std::size_t j = i + 1; j < tris.size(); ++j)
            for (int x : tris[i]) {
                if (g.degree(x) != 4) continue;
                if (std::find(tris[j].begin(), tris[j].end(), x) == tris[j].end()) continue;
                std::vector<int> r1, r2;
                for (int v : tris[i])
                    if (v != x) r1.push_back(v);
                for (int v : tris[j])
                    if (v != x) r2.push_back(v);
                std::set<int> all{x, r1[0], r1[1], r2[0], r2[1]};
                if (all.size() != 5) continue;
                for (int u1 : r1)
                    for (int u2 : r2)
                        if (g.degree(u1) == 2 && g.degree(u2) == 2) {
                            int v1 = r1[0] + r1[1] - u1, v2 = r2[0] + r2[1] - u2;
                            return {OuterplanarConfig::d, {x, u1, v1, u2, v2}};
                        }
            }
    return {OuterplanarConfig::none, {}};
}

namespace {

Graph minor_pattern(MinorId id) {
    switch (id) {
        case MinorId::k4: return make_complete(4);
        case MinorId::k23: return make_biclique(2, 3);
        case MinorId::k2bar_k1k2: {
            // K_{2,3} plus an edge joining two of its degree-2 vertices
            std::vector<std::pair<int, int>> es;
            for (int u = 0; u < 2; ++u)
                for (int v = 2; v < 5; ++v) es.push_back({u, v});
            es.push_back({2, 3});
            return Graph(5, es);
        }
    }
    throw std::invalid_argument("unknown minor id");
}

struct TopoEmbed {
    const Graph& g;
    const Graph& h;
    std::vector<int> horder; // h vertices, descending degree
    std::vector<int> phi;
    std::vector<bool> used;
    std::vector<std::pair<int, int>> hedges;

    TopoEmbed(const Graph& gg, const Graph& hh) : g(gg), h(hh) {
        phi.assign(static_cast<std::size_t>(h.vertex_count()), -1);
        used.assign(static_cast<std::size_t>(g.vertex_count()), false);
        for (int v = 0; v < h.vertex_count(); ++v) horder.push_back(v);
        std::stable_sort(horder.begin(), horder.end(),
                         [&](int x, int y) { return h.degree(x) > h.degree(y); });
        for (const auto& e : h.edges()) hedges.push_back({e.u, e.v});
    }

    bool assign(std::size_t hi) {
        if (hi == horder.size()) return connect(0);
        const int hv = horder[hi];
        for (int gv = 0; gv < g.vertex_count(); ++gv) {
            if (used[static_cast<std::size_t>(gv)] || g.degree(gv) < h.degree(hv)) continue;
            phi[static_cast<std::size_t>(hv)] = gv;
            used[static_cast<std::size_t>(gv)] = true;
            if (assign(hi + 1)) return true;
            used[static_cast<std::size_t>(gv)] = false;
        }
        phi[static_cast<std::size_t>(hv)] = -1;
        return false;
    }

    bool connect(std::size_t ei) {
        if (ei == hedges.size()) return true;
        return dfs_path(ei, phi[static_cast<std::size_t>(hedges[ei].first)],
                        phi[static_cast<std::size_t>(hedges[ei].second)]);
    }

    bool dfs_path(std::size_t ei, int cur, int target) {
        for (int w : g.neighbors(cur)) {
            if (w == target) {
                if (connect(ei + 1)) return true;
            } else if (!used[static_cast<std::size_t>(w)]) {
                used[static_cast<std::size_t>(w)] = true;
                if (dfs_path(ei, w, target)) return true;
                used[static_cast<std::size_t>(w)] = false;
            }
        }
        return false;
    }
};

} // namespace

bool has_minor(const Graph& g, MinorId id, int size_cap) {
    if (g.vertex_count() > size_cap)
        throw std::invalid_argument("has_minor: size cap exceeded");
    const Graph h = minor_pattern(id);
    if (g.vertex_count() < h.vertex_count() || g.edge_count() < h.edge_count()) return false;
    TopoEmbed emb(g, h);
    return emb.assign(0);
}

std::string to_string(OuterplanarConfig c) {
    switch (c) {
        case OuterplanarConfig::a: return "a";
        case OuterplanarConfig::b: return "b";
        case OuterplanarConfig::c: return "c";
        case OuterplanarConfig::d: return "d";
        case OuterplanarConfig::none: return "none";
    }
    return "?";
}

} // namespace gclab
