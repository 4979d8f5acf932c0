#include "gclab/ordering.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stack>
#include <stdexcept>

namespace gclab {

DegeneracyCertificate coloring_number(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);

    std::vector<int> removal;
    removal.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[static_cast<std::size_t>(v)] &&
                (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)]))
                best = v;
        removed[static_cast<std::size_t>(best)] = true;
        removal.push_back(best);
        for (int w : g.neighbors(best))
            if (!removed[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
    }

    DegeneracyCertificate cert;
    cert.ordering.assign(removal.rbegin(), removal.rend());
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(cert.ordering[static_cast<std::size_t>(i)])] = i;
    cert.back_degrees.resize(static_cast<std::size_t>(n), 0);
    int maxback = -1;
    for (int i = 0; i < n; ++i) {
        int v = cert.ordering[static_cast<std::size_t>(i)];
        int b = 0;
        for (int w : g.neighbors(v))
            if (pos[static_cast<std::size_t>(w)] < i) ++b;
        cert.back_degrees[static_cast<std::size_t>(i)] = b;
        maxback = std::max(maxback, b);
    }
    cert.col = n == 0 ? 0 : maxback + 1;
    return cert;
}

namespace {

struct BlockDfs {
    const Graph& g;
    std::vector<std::vector<std::pair<int, int>>> incidence; // (neighbor, edge id)
    std::vector<int> disc, low;
    std::vector<int> edge_stack;
    BlockDecomposition out;
    int timer = 1;

    explicit BlockDfs(const Graph& gg)
        : g(gg),
          incidence(static_cast<std::size_t>(gg.vertex_count())),
          disc(static_cast<std::size_t>(gg.vertex_count()), 0),
          low(static_cast<std::size_t>(gg.vertex_count()), 0) {
        for (int e = 0; e < g.edge_count(); ++e) {
            incidence[static_cast<std::size_t>(g.edge(e).u)].push_back({g.edge(e).v, e});
            incidence[static_cast<std::size_t>(g.edge(e).v)].push_back({g.edge(e).u, e});
        }
    }

    void pop_block(int until_edge) {
        std::vector<int> es;
        while (true) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            es.push_back(e);
            if (e == until_edge) break;
        }
        std::set<int> vs;
        for (int e : es) {
            vs.insert(g.edge(e).u);
            vs.insert(g.edge(e).v);
        }
        std::sort(es.begin(), es.end());
        out.block_edges.push_back(es);
        out.block_vertices.emplace_back(vs.begin(), vs.end());
    }

    void run(int root) {
        struct Frame {
            int v, parent_edge;
            std::size_t next = 0;
        };
        std::stack<Frame> st;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        st.push({root, -1});
        while (!st.empty()) {
            Frame& f = st.top();
            const auto& nbrs = incidence[static_cast<std::size_t>(f.v)];
            if (f.next < nbrs.size()) {
                auto [w, e] = nbrs[f.next++];
                if (e == f.parent_edge) continue;
                if (!disc[static_cast<std::size_t>(w)]) {
                    edge_stack.push_back(e);
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    st.push({w, e});
                } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
                    edge_stack.push_back(e);
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
                }
            } else {
                const Frame done = f;
                st.pop();
                if (st.empty()) continue;
                Frame& p = st.top();
                low[static_cast<std::size_t>(p.v)] =
                    std::min(low[static_cast<std::size_t>(p.v)], low[static_cast<std::size_t>(done.v)]);
                if (low[static_cast<std::size_t>(done.v)] >= disc[static_cast<std::size_t>(p.v)])
                    pop_block(done.parent_edge);
            }
        }
    }
};

bool block_is_complete(const std::vector<int>& vs, const std::vector<int>& es) {
    const std::size_t s = vs.size();
    return es.size() == s * (s - 1) / 2;
}

bool block_is_cycle(const Graph& g, const std::vector<int>& vs, const std::vector<int>& es) {
    if (vs.size() < 3 || es.size() != vs.size()) return false;
    std::map<int, int> deg;
    for (int e : es) {
        deg[g.edge(e).u]++;
        deg[g.edge(e).v]++;
    }
    for (auto [v, d] : deg) {
        (void)v;
        if (d != 2) return false;
    }
    return true;
}

} // namespace

BlockDecomposition blocks(const Graph& g) {
    BlockDfs dfs(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!dfs.disc[static_cast<std::size_t>(v)] && g.degree(v) > 0) dfs.run(v);
    BlockDecomposition out = dfs.out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) {
            out.block_vertices.push_back({v});
            out.block_edges.push_back({});
        }
    std::vector<int> count(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& vs : out.block_vertices)
        for (int v : vs) ++count[static_cast<std::size_t>(v)];
    for (int v = 0; v < g.vertex_count(); ++v)
        if (count[static_cast<std::size_t>(v)] > 1) out.cut_vertices.push_back(v);
    return out;
}

bool d_group_choosable_oracle(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("d_group_choosable_oracle: disconnected input");
    auto bd = blocks(g);
    for (std::size_t i = 0; i < bd.block_vertices.size(); ++i) {
        if (block_is_complete(bd.block_vertices[i], bd.block_edges[i])) continue;
        if (block_is_cycle(g, bd.block_vertices[i], bd.block_edges[i])) continue;
        return true;
    }
    return false;
}

PruneResult prune_core(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("prune_core: disconnected input");
    const int n = g.vertex_count();
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    int alive_count = n;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v)
            if (alive[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] == 1 && alive_count > 1) {
                alive[static_cast<std::size_t>(v)] = false;
                --alive_count;
                changed = true;
                for (int w : g.neighbors(v))
                    if (alive[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
            }
    }
    PruneResult out;
    for (int v = 0; v < n; ++v)
        if (alive[static_cast<std::size_t>(v)]) out.core_vertices.push_back(v);
    out.core = g.induced(out.core_vertices);

    const Graph& c = out.core;
    const int cn = c.vertex_count();
    if (cn == 1) {
        out.shape = CoreShape::k1;
        return out;
    }
    bool all2 = true;
    for (int v = 0; v < cn; ++v) all2 = all2 && c.degree(v) == 2;
    if (all2 && c.edge_count() == cn) {
        out.shape = cn % 2 == 0 ? CoreShape::even_cycle : CoreShape::other;
        return out;
    }
    // theta: exactly two degree-3 vertices joined by three internally
    // disjoint paths, lengths 2, 2 and an even length >= 2 (traced, not
    // matched by a general isomorphism engine)
    std::vector<int> deg3;
    bool degs_ok = true;
    for (int v = 0; v < cn; ++v) {
        if (c.degree(v) == 3) deg3.push_back(v);
        else if (c.degree(v) != 2) degs_ok = false;
    }
    if (degs_ok && deg3.size() == 2) {
        int a = deg3[0], b = deg3[1];
        std::vector<int> lens;
        std::vector<bool> used(static_cast<std::size_t>(cn), false);
        int visited = 2;
        bool ok = true;
        for (int start : c.neighbors(a)) {
            int prev = a, cur = start, len = 1;
            while (cur != b && c.degree(cur) == 2 && !used[static_cast<std::size_t>(cur)]) {
                used[static_cast<std::size_t>(cur)] = true;
                ++visited;
                int nxt = c.neighbors(cur)[0] == prev ? c.neighbors(cur)[1] : c.neighbors(cur)[0];
                prev = cur;
                cur = nxt;
                ++len;
            }
            if (cur != b) { ok = false; break; }
            lens.push_back(len);
        }
        std::sort(lens.begin(), lens.end());
        if (ok && lens.size() == 3 && visited == cn && lens[0] == 2 && lens[1] == 2 &&
            lens[2] >= 2 && lens[2] % 2 == 0)
            out.shape = CoreShape::theta_2_2_2m;
    }
    return out;
}

} // namespace gclab
