#include "gclab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

namespace gclab {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: loop edge");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("graph: duplicate edge");
        edges_.push_back({u, v});
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].u == u && edges_[i].v == v) return static_cast<int>(i);
    return -1;
}

std::vector<int> Graph::component_ids() const {
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    int c = 0;
    for (int s = 0; s < n_; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        comp[static_cast<std::size_t>(s)] = c;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : neighbors(u))
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = c;
                    q.push(w);
                }
        }
        ++c;
    }
    return comp;
}

int Graph::component_count() const {
    auto ids = component_ids();
    return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

bool Graph::connected() const { return n_ <= 1 || component_count() == 1; }

Graph Graph::induced(const std::vector<int>& keep) const {
    std::vector<int> newid(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) newid[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (const auto& e : edges_) {
        int a = newid[static_cast<std::size_t>(e.u)], b = newid[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) es.push_back({a, b});
    }
    return Graph(static_cast<int>(keep.size()), es);
}

Graph Graph::without_edge(int edge_id) const {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < edge_count(); ++i)
        if (i != edge_id) es.push_back({edges_[static_cast<std::size_t>(i)].u, edges_[static_cast<std::size_t>(i)].v});
    return Graph(n_, es);
}

Orientation orient(const Graph& g, std::uint64_t seed) {
    Orientation o;
    o.flipped.assign(static_cast<std::size_t>(g.edge_count()), false);
    if (seed == 0) {
        // BFS levels from each component root; edges point to the deeper
        // endpoint, level ties keep the stored (lower -> higher) direction.
        std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
        for (int s = 0; s < g.vertex_count(); ++s) {
            if (dist[static_cast<std::size_t>(s)] >= 0) continue;
            std::queue<int> q;
            q.push(s);
            dist[static_cast<std::size_t>(s)] = 0;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int w : g.neighbors(u))
                    if (dist[static_cast<std::size_t>(w)] < 0) {
                        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                        q.push(w);
                    }
            }
        }
        for (int i = 0; i < g.edge_count(); ++i)
            o.flipped[static_cast<std::size_t>(i)] =
                dist[static_cast<std::size_t>(g.edge(i).v)] < dist[static_cast<std::size_t>(g.edge(i).u)];
    } else {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < g.edge_count(); ++i) o.flipped[static_cast<std::size_t>(i)] = rng() & 1u;
    }
    return o;
}

// ---------- families ----------

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path: n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return Graph(n, es);
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return Graph(n, es);
}

Graph make_wheel(int n) {
    if (n < 3) throw std::invalid_argument("wheel: n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    for (int i = 0; i < n; ++i) es.push_back({i, n});
    return Graph(n + 1, es);
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return Graph(n, es);
}

Graph make_biclique(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("biclique: parts >= 1");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.push_back({u, a + v});
    return Graph(a + b, es);
}

Graph make_star(int n) {
    if (n < 1) throw std::invalid_argument("star: n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= n; ++i) es.push_back({0, i});
    return Graph(n + 1, es);
}

Graph make_theta(int m) {
    if (m < 1) throw std::invalid_argument("theta: m >= 1");
    // ends 0 and 1, three internally disjoint paths of lengths 2, 2, 2m
    std::vector<std::pair<int, int>> es{{0, 2}, {2, 1}, {0, 3}, {3, 1}};
    int prev = 0;
    for (int i = 0; i < 2 * m - 1; ++i) {
        es.push_back({prev, 4 + i});
        prev = 4 + i;
    }
    es.push_back({prev, 1});
    return Graph(2 * m + 3, es);
}

Graph make_random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("tree: n >= 1");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
    for (auto& x : pruefer) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int x : pruefer) ++deg[static_cast<std::size_t>(x)];
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) leaves.push(v);
    std::vector<std::pair<int, int>> es;
    for (int x : pruefer) {
        int leaf = leaves.top();
        leaves.pop();
        es.push_back({leaf, x});
        if (--deg[static_cast<std::size_t>(x)] == 1) leaves.push(x);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    es.push_back({a, b});
    return Graph(n, es);
}

Rotation rotation_from_faces(const Graph& g, const std::vector<std::vector<int>>& faces) {
    // succ[v][u] = w whenever some face walks u -> v -> w
    std::vector<std::map<int, int>> succ(static_cast<std::size_t>(g.vertex_count()));
    std::set<std::pair<int, int>> covered;
    for (const auto& f : faces) {
        const std::size_t L = f.size();
        if (L < 2) throw std::invalid_argument("face walk too short");
        for (std::size_t i = 0; i < L; ++i) {
            int u = f[i], v = f[(i + 1) % L], w = f[(i + 2) % L];
            if (!g.adjacent(u, v)) throw std::invalid_argument("face walk uses a non-edge");
            if (!covered.insert({u, v}).second)
                throw std::invalid_argument("face walks cover a directed edge twice");
            if (succ[static_cast<std::size_t>(v)].count(u))
                throw std::invalid_argument("inconsistent face walks at a vertex");
            succ[static_cast<std::size_t>(v)][u] = w;
        }
    }
    if (covered.size() != 2 * static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument("face walks do not cover every directed edge");
    Rotation rot(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        if (nb.empty()) continue;
        int start = nb.front(), cur = start;
        auto& r = rot[static_cast<std::size_t>(v)];
        do {
            r.push_back(cur);
            auto it = succ[static_cast<std::size_t>(v)].find(cur);
            if (it == succ[static_cast<std::size_t>(v)].end())
                throw std::invalid_argument("face walks incomplete at a vertex");
            cur = it->second;
        } while (cur != start && r.size() <= nb.size());
        if (r.size() != nb.size())
            throw std::invalid_argument("face walks do not form a single rotation cycle");
    }
    return rot;
}

namespace {

Rotation trivial_rotation(const Graph& g) {
    Rotation r(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) r[static_cast<std::size_t>(v)] = g.neighbors(v);
    return r;
}

std::vector<std::vector<int>> cycle_faces(int n) {
    std::vector<int> fwd(static_cast<std::size_t>(n)), bwd;
    std::iota(fwd.begin(), fwd.end(), 0);
    bwd = fwd;
    std::reverse(bwd.begin(), bwd.end());
    return {fwd, bwd};
}

GeneratedGraph plane(const std::string& name, Graph g, const std::vector<std::vector<int>>& faces,
                     bool outerplanar) {
    GeneratedGraph out;
    out.name = name;
    out.rotation = rotation_from_faces(g, faces);
    out.graph = std::move(g);
    out.outerplanar = outerplanar;
    out.planar = true;
    return out;
}

GeneratedGraph make_prism(int n) {
    if (n < 3) throw std::invalid_argument("prism: n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    for (int i = 0; i < n; ++i) es.push_back({n + i, n + (i + 1) % n});
    for (int i = 0; i < n; ++i) es.push_back({i, n + i});
    Graph g(2 * n, es);
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < n; ++i)
        faces.push_back({i, (i + 1) % n, n + (i + 1) % n, n + i});
    std::vector<int> outer, inner;
    for (int i = 0; i < n; ++i) outer.push_back((n - i) % n);
    for (int i = 0; i < n; ++i) inner.push_back(n + i);
    faces.push_back(outer);
    faces.push_back(inner);
    return plane("prism:" + std::to_string(n), std::move(g), faces, false);
}

GeneratedGraph make_tetrahedron() {
    Graph g = make_complete(4);
    return plane("tetrahedron", std::move(g), {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}, false);
}

GeneratedGraph make_octahedron() {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= 4; ++i) es.push_back({0, i});
    for (int i = 1; i <= 4; ++i) es.push_back({i, i % 4 + 1});
    for (int i = 1; i <= 4; ++i) es.push_back({i, 5});
    Graph g(6, es);
    std::vector<std::vector<int>> faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
                                           {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};
    return plane("octahedron", std::move(g), faces, false);
}

GeneratedGraph make_dodecahedron() {
    // generalized Petersen graph GP(10,2): outer u_i = i, inner w_i = 10+i
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 10; ++i) es.push_back({i, (i + 1) % 10});
    for (int i = 0; i < 10; ++i) es.push_back({i, 10 + i});
    for (int i = 0; i < 10; ++i) es.push_back({10 + i, 10 + (i + 2) % 10});
    Graph g(20, es);
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < 10; ++i) {
        std::vector<int> f = {i, (i + 1) % 10, (i + 2) % 10, 10 + (i + 2) % 10, 10 + i};
        if (i % 2) std::reverse(f.begin(), f.end());
        faces.push_back(f);
    }
    faces.push_back({10, 12, 14, 16, 18});
    faces.push_back({19, 17, 15, 13, 11});
    return plane("dodecahedron", std::move(g), faces, false);
}

GeneratedGraph make_fan(int n) {
    if (n < 3) throw std::invalid_argument("fan: n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n - 1; ++i) es.push_back({i, i + 1});
    for (int i = 0; i < n - 1; ++i) es.push_back({i, n - 1});
    Graph g(n, es);
    std::vector<std::vector<int>> faces;
    for (int i = 0; i + 1 < n - 1; ++i) faces.push_back({i, i + 1, n - 1});
    std::vector<int> outer;
    for (int i = n - 2; i >= 0; --i) outer.push_back(i);
    outer.push_back(n - 1);
    faces.push_back(outer);
    return plane("fan:" + std::to_string(n), std::move(g), faces, true);
}

GeneratedGraph make_wheel_plane(int n) {
    Graph g = make_wheel(n);
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < n; ++i) faces.push_back({i, (i + 1) % n, n});
    std::vector<int> outer;
    for (int i = 0; i < n; ++i) outer.push_back((n - i) % n);
    faces.push_back(outer);
    return plane("wheel:" + std::to_string(n), std::move(g), faces, false);
}

GeneratedGraph make_theta_plane(int m) {
    Graph g = make_theta(m);
    std::vector<int> pa = {2}, pb = {3}, pc;
    for (int i = 0; i < 2 * m - 1; ++i) pc.push_back(4 + i);
    auto face = [](const std::vector<int>& first, const std::vector<int>& second) {
        std::vector<int> f{0};
        f.insert(f.end(), first.begin(), first.end());
        f.push_back(1);
        f.insert(f.end(), second.rbegin(), second.rend());
        return f;
    };
    return plane("theta:" + std::to_string(m), std::move(g), {face(pa, pb), face(pb, pc), face(pc, pa)},
                 false);
}

GeneratedGraph make_hextri() {
    // hexagon 0..5 with inner triangle 0-2-4; hits outerplanar configuration (d)
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 6; ++i) es.push_back({i, (i + 1) % 6});
    es.push_back({0, 2});
    es.push_back({2, 4});
    es.push_back({0, 4});
    Graph g(6, es);
    std::vector<std::vector<int>> faces = {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}, {0, 2, 4},
                                           {0, 5, 4, 3, 2, 1}};
    return plane("hextri", std::move(g), faces, true);
}

GeneratedGraph subdivide_all(const GeneratedGraph& in, const std::string& name) {
    const Graph& g = in.graph;
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < g.edge_count(); ++i) {
        es.push_back({g.edge(i).u, n + i});
        es.push_back({g.edge(i).v, n + i});
    }
    Graph sg(n + g.edge_count(), es);
    GeneratedGraph out;
    out.name = name;
    out.graph = sg;
    out.outerplanar = in.outerplanar;
    out.planar = in.planar;
    if (in.rotation) {
        Rotation rot(static_cast<std::size_t>(sg.vertex_count()));
        for (int v = 0; v < n; ++v)
            for (int w : (*in.rotation)[static_cast<std::size_t>(v)])
                rot[static_cast<std::size_t>(v)].push_back(n + g.edge_index(v, w));
        for (int i = 0; i < g.edge_count(); ++i)
            rot[static_cast<std::size_t>(n + i)] = {g.edge(i).u, g.edge(i).v};
        out.rotation = rot;
    }
    return out;
}

GeneratedGraph with_trivial_rotation(const std::string& name, Graph g, bool outerplanar) {
    GeneratedGraph out;
    out.name = name;
    out.rotation = trivial_rotation(g);
    out.graph = std::move(g);
    out.outerplanar = outerplanar;
    out.planar = true;
    return out;
}

} // namespace

GeneratedGraph generate(const std::string& family, const std::vector<long>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family " + family + ": wrong parameter count");
    };
    auto p0 = [&] { return static_cast<int>(params[0]); };
    if (family == "path") {
        need(1);
        return with_trivial_rotation("path:" + std::to_string(p0()), make_path(p0()), true);
    }
    if (family == "cycle") {
        need(1);
        Graph g = make_cycle(p0());
        return plane("cycle:" + std::to_string(p0()), std::move(g), cycle_faces(p0()), true);
    }
    if (family == "wheel") {
        need(1);
        return make_wheel_plane(p0());
    }
    if (family == "complete") {
        need(1);
        GeneratedGraph out;
        out.name = "complete:" + std::to_string(p0());
        out.graph = make_complete(p0());
        if (p0() <= 4) out.planar = true;
        return out;
    }
    if (family == "biclique") {
        need(2);
        GeneratedGraph out;
        out.name = "biclique:" + std::to_string(params[0]) + "," + std::to_string(params[1]);
        out.graph = make_biclique(static_cast<int>(params[0]), static_cast<int>(params[1]));
        return out;
    }
    if (family == "star") {
        need(1);
        return with_trivial_rotation("star:" + std::to_string(p0()), make_star(p0()), true);
    }
    if (family == "theta") {
        need(1);
        return make_theta_plane(p0());
    }
    if (family == "tree") {
        need(2);
        return with_trivial_rotation(
            "tree:" + std::to_string(params[0]) + "," + std::to_string(params[1]),
            make_random_tree(static_cast<int>(params[0]), static_cast<std::uint64_t>(params[1])), true);
    }
    if (family == "prism") {
        need(1);
        return make_prism(p0());
    }
    if (family == "cube") {
        need(0);
        auto g = make_prism(4);
        g.name = "cube";
        return g;
    }
    if (family == "subcube") {
        need(0);
        return subdivide_all(make_prism(4), "subcube");
    }
    if (family == "tetrahedron") {
        need(0);
        return make_tetrahedron();
    }
    if (family == "octahedron") {
        need(0);
        return make_octahedron();
    }
    if (family == "dodecahedron") {
        need(0);
        return make_dodecahedron();
    }
    if (family == "hextri") {
        need(0);
        return make_hextri();
    }
    throw std::invalid_argument("unknown family: " + family);
}

GeneratedGraph make_named(const std::string& spec) {
    if (spec.rfind("file:", 0) == 0) {
        std::ifstream in(spec.substr(5));
        if (!in) throw std::invalid_argument("cannot open graph file: " + spec.substr(5));
        nlohmann::json j;
        in >> j;
        auto g = graph_from_json(j);
        g.name = spec;
        return g;
    }
    const auto colon = spec.find(':');
    std::string family = spec.substr(0, colon);
    std::vector<long> params;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            auto comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            params.push_back(std::stol(rest.substr(pos, comma - pos)));
            pos = comma + 1;
        }
    }
    return generate(family, params);
}

nlohmann::json graph_to_json(const Graph& g, const std::optional<Rotation>& rot) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = edges;
    if (rot) j["rotation"] = *rot;
    return j;
}

GeneratedGraph graph_from_json(const nlohmann::json& j) {
    GeneratedGraph out;
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j.at("edges")) es.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    out.graph = Graph(n, es);
    out.name = "json";
    if (j.contains("rotation")) out.rotation = j.at("rotation").get<Rotation>();
    return out;
}

} // namespace gclab
