#include "gclab/engine.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "gclab/ordering.hpp"

namespace gclab {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > UINT64_MAX / b) return UINT64_MAX;
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    while (exp--) r = sat_mul(r, base);
    return r;
}

void atomic_min(std::atomic<std::uint64_t>& a, std::uint64_t v) {
    std::uint64_t cur = a.load();
    while (v < cur && !a.compare_exchange_weak(cur, v)) {
    }
}

// Directed view of one incidence, from the perspective of one endpoint.
struct Arc {
    int nbr;
    int edge;
    bool self_is_tail;
};

// Immutable per-(graph, orientation, group) solver context.
struct Ctx {
    const Graph& g;
    const Group& grp;
    int n, m, a;
    const int* op;
    const int* inv;
    std::vector<std::vector<Arc>> arcs;
    std::vector<int> order; // degeneracy ordering

    Ctx(const Graph& gg, const Orientation& o, const Group& grp_) : g(gg), grp(grp_) {
        n = g.vertex_count();
        m = g.edge_count();
        a = grp.order();
        if (a > 64) throw std::invalid_argument("solver supports groups of order <= 64");
        op = grp.op_table();
        inv = grp.inv_table();
        arcs.resize(static_cast<std::size_t>(n));
        for (int e = 0; e < m; ++e) {
            const int t = o.tail(g, e), h = o.head(g, e);
            arcs[static_cast<std::size_t>(t)].push_back({h, e, true});
            arcs[static_cast<std::size_t>(h)].push_back({t, e, false});
        }
        order = coloring_number(g).ordering;
    }

    // color forbidden for arc.nbr once the owning vertex has color c
    inline int forbidden(const Arc& arc, int c, const int* f) const {
        const int lab = f[arc.edge];
        if (arc.self_is_tail) return inv[op[static_cast<std::size_t>(inv[c]) * a + lab]];
        return op[static_cast<std::size_t>(lab) * a + c];
    }

    inline bool edge_ok(const Orientation& o, int e, const int* f, const int* col) const {
        const int t = o.tail(g, e), h = o.head(g, e);
        return op[static_cast<std::size_t>(col[t]) * a + inv[col[h]]] != f[e];
    }
};

enum class SolveOut { sat, unsat, budget };

struct Solver {
    const Ctx& ctx;
    std::vector<std::uint64_t> dom;
    std::vector<int> color;
    std::vector<std::pair<int, std::uint64_t>> trail;
    std::uint64_t nodes = 0; // reset on every run()

    explicit Solver(const Ctx& c)
        : ctx(c), dom(static_cast<std::size_t>(std::max(c.n, 1))),
          color(static_cast<std::size_t>(std::max(c.n, 1)), -1) {}

    SolveOut run(const std::uint64_t* list_masks, const int* f, bool fix_first_zero,
                 std::uint64_t node_limit, std::vector<int>* out) {
        nodes = 0;
        if (ctx.n == 0) {
            if (out) out->clear();
            return SolveOut::sat;
        }
        for (int v = 0; v < ctx.n; ++v) {
            dom[static_cast<std::size_t>(v)] = list_masks[v];
            color[static_cast<std::size_t>(v)] = -1;
        }
        trail.clear();
        SolveOut r = descend(0, f, fix_first_zero, node_limit);
        if (r == SolveOut::sat && out) out->assign(color.begin(), color.end());
        return r;
    }

  private:
    SolveOut descend(int level, const int* f, bool fix_first_zero, std::uint64_t node_limit) {
        if (level == ctx.n) return SolveOut::sat;
        const int v = ctx.order[static_cast<std::size_t>(level)];
        std::uint64_t cand = dom[static_cast<std::size_t>(v)];
        if (fix_first_zero && level == 0) cand &= 1ull << ctx.grp.zero();
        while (cand) {
            const int c = std::countr_zero(cand);
            cand &= cand - 1;
            if (++nodes > node_limit) return SolveOut::budget;
            const std::size_t mark = trail.size();
            color[static_cast<std::size_t>(v)] = c;
            bool wipe = false;
            for (const Arc& arc : ctx.arcs[static_cast<std::size_t>(v)]) {
                if (color[static_cast<std::size_t>(arc.nbr)] >= 0) continue;
                const std::uint64_t bit = 1ull << ctx.forbidden(arc, c, f);
                auto& d = dom[static_cast<std::size_t>(arc.nbr)];
                if (d & bit) {
                    d &= ~bit;
                    trail.push_back({arc.nbr, bit});
                    if (d == 0) {
                        wipe = true;
                        break;
                    }
                }
            }
            if (!wipe) {
                SolveOut r = descend(level + 1, f, fix_first_zero, node_limit);
                if (r != SolveOut::unsat) return r;
            }
            while (trail.size() > mark) {
                auto [w, bit] = trail.back();
                trail.pop_back();
                dom[static_cast<std::size_t>(w)] |= bit;
            }
            color[static_cast<std::size_t>(v)] = -1;
        }
        return SolveOut::unsat;
    }
};

struct SweepShared {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> best_witness{UINT64_MAX};
    std::atomic<bool> budget_hit{false};
    Clock::time_point deadline;
    std::uint64_t node_limit = UINT64_MAX;

    // flush local work and report whether the budget is gone
    bool over(std::uint64_t local) {
        const std::uint64_t tot = nodes.fetch_add(local) + local;
        if (tot > node_limit || Clock::now() > deadline) budget_hit.store(true);
        return budget_hit.load();
    }
};

struct WorkerResult {
    bool found_unsat = false;
    std::uint64_t witness_index = 0;
    std::vector<int> witness_f;
    std::vector<std::vector<int>> witness_lists;
    std::uint64_t instances = 0;
    bool budget = false;
};

using Family = std::pair<std::uint64_t, std::vector<int>>; // mask + sorted elements

struct FamilySet {
    std::vector<std::vector<Family>> families; // per vertex
};

// Enumerates instances [begin, end) of the joint (list family, labeling)
// space in a fixed mixed-radix order: labeling digits over free_edges run
// fastest, then the per-vertex family digits. A coloring cached from the
// previous instance is rechecked only on the edges whose label changed,
// with a single-vertex repair attempt before a full re-solve.
struct Sweep {
    const Ctx& ctx;
    const Orientation& ornt;
    const FamilySet& fams;
    const std::vector<int>& free_edges;
    bool fix_first_zero;

    WorkerResult run(std::uint64_t begin, std::uint64_t end, SweepShared& shared) const {
        WorkerResult res;
        const int a = ctx.a;
        const std::uint64_t f_space = sat_pow(static_cast<std::uint64_t>(a), free_edges.size());

        std::vector<int> f(static_cast<std::size_t>(std::max(ctx.m, 1)), ctx.grp.zero());
        std::vector<int> fdig(free_edges.size(), 0);
        std::vector<std::size_t> famdig(static_cast<std::size_t>(ctx.n), 0);
        std::vector<std::uint64_t> masks(static_cast<std::size_t>(std::max(ctx.n, 1)), 0);

        std::uint64_t idx = begin;
        if (f_space > 0) {
            std::uint64_t fpart = idx % f_space;
            idx /= f_space;
            for (std::size_t i = 0; i < free_edges.size(); ++i) {
                fdig[i] = static_cast<int>(fpart % static_cast<std::uint64_t>(a));
                fpart /= static_cast<std::uint64_t>(a);
                f[static_cast<std::size_t>(free_edges[i])] = fdig[i];
            }
        }
        for (int v = 0; v < ctx.n; ++v) {
            const auto& fv = fams.families[static_cast<std::size_t>(v)];
            famdig[static_cast<std::size_t>(v)] = idx % fv.size();
            idx /= fv.size();
        }
        auto load_masks = [&] {
            for (int v = 0; v < ctx.n; ++v)
                masks[static_cast<std::size_t>(v)] =
                    fams.families[static_cast<std::size_t>(v)][famdig[static_cast<std::size_t>(v)]].first;
        };
        load_masks();

        Solver solver(ctx);
        std::vector<int> cached;
        bool cache_valid = false;
        std::uint64_t local_nodes = 0;
        std::vector<int> changed;

        for (std::uint64_t inst = begin; inst < end; ++inst) {
            if (inst != begin) {
                changed.clear();
                std::size_t i = 0;
                for (; i < fdig.size(); ++i) {
                    const int e = free_edges[i];
                    changed.push_back(e);
                    if (++fdig[i] < a) {
                        f[static_cast<std::size_t>(e)] = fdig[i];
                        break;
                    }
                    fdig[i] = 0;
                    f[static_cast<std::size_t>(e)] = 0;
                }
                if (i == fdig.size()) {
                    for (int v = 0; v < ctx.n; ++v) {
                        auto& dv = famdig[static_cast<std::size_t>(v)];
                        if (++dv < fams.families[static_cast<std::size_t>(v)].size()) break;
                        dv = 0;
                    }
                    load_masks();
                    cache_valid = false;
                }
            }
            ++local_nodes;
            if ((local_nodes & 0xfff) == 0) {
                if (shared.over(local_nodes)) {
                    res.budget = true;
                    res.instances = inst - begin;
                    return res;
                }
                local_nodes = 0;
                if (shared.best_witness.load() < begin) {
                    res.instances = inst - begin;
                    shared.nodes.fetch_add(local_nodes);
                    return res;
                }
            }

            if (cache_valid) {
                int broken = -1, nbad = 0;
                for (int e : changed)
                    if (!ctx.edge_ok(ornt, e, f.data(), cached.data())) {
                        broken = e;
                        if (++nbad > 1) break;
                    }
                if (nbad == 0) continue;
                if (nbad == 1 && repair(broken, f.data(), masks.data(), cached, local_nodes))
                    continue;
            }

            SolveOut out = solver.run(masks.data(), f.data(), fix_first_zero,
                                      shared.node_limit, &cached);
            local_nodes += solver.nodes;
            if (out == SolveOut::sat) {
                cache_valid = true;
                continue;
            }
            if (out == SolveOut::budget) {
                shared.over(local_nodes);
                shared.budget_hit.store(true);
                res.budget = true;
                res.instances = inst - begin + 1;
                return res;
            }
            res.found_unsat = true;
            res.witness_index = inst;
            res.witness_f = f;
            res.witness_lists.resize(static_cast<std::size_t>(ctx.n));
            for (int v = 0; v < ctx.n; ++v)
                res.witness_lists[static_cast<std::size_t>(v)] =
                    fams.families[static_cast<std::size_t>(v)][famdig[static_cast<std::size_t>(v)]].second;
            res.instances = inst - begin + 1;
            shared.nodes.fetch_add(local_nodes);
            atomic_min(shared.best_witness, inst);
            return res;
        }
        res.instances = end - begin;
        shared.nodes.fetch_add(local_nodes);
        return res;
    }

  private:
    bool repair(int edge, const int* f, const std::uint64_t* masks, std::vector<int>& cached,
                std::uint64_t& local_nodes) const {
        for (int endpoint : {ctx.g.edge(edge).u, ctx.g.edge(edge).v}) {
            const int old = cached[static_cast<std::size_t>(endpoint)];
            std::uint64_t cand = masks[endpoint] & ~(1ull << old);
            while (cand) {
                const int c = std::countr_zero(cand);
                cand &= cand - 1;
                ++local_nodes;
                bool ok = true;
                for (const Arc& arc : ctx.arcs[static_cast<std::size_t>(endpoint)])
                    if (ctx.forbidden(arc, c, f) == cached[static_cast<std::size_t>(arc.nbr)]) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    cached[static_cast<std::size_t>(endpoint)] = c;
                    return true;
                }
            }
        }
        return false;
    }
};

Verdict run_sweep(const Ctx& ctx, const Orientation& o, const FamilySet& fams,
                  const std::vector<int>& free_edges, bool fix_first_zero, std::uint64_t total,
                  const CheckOptions& opt, Clock::time_point t0, const std::string& method) {
    SweepShared shared;
    shared.node_limit = opt.budget.max_nodes;
    shared.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(opt.budget.max_seconds));
    Sweep sweep{ctx, o, fams, free_edges, fix_first_zero};

    std::vector<WorkerResult> results;
    int workers = std::max(1, opt.workers);
    if (workers == 1 || total < 65536 || total == UINT64_MAX) {
        results.push_back(sweep.run(0, total, shared));
    } else {
        workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total));
        results.resize(static_cast<std::size_t>(workers));
        std::vector<std::thread> threads;
        const std::uint64_t chunk = total / static_cast<std::uint64_t>(workers);
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t b = chunk * static_cast<std::uint64_t>(w);
            const std::uint64_t e = w + 1 == workers ? total : b + chunk;
            threads.emplace_back(
                [&, w, b, e] { results[static_cast<std::size_t>(w)] = sweep.run(b, e, shared); });
        }
        for (auto& t : threads) t.join();
    }

    Verdict v;
    v.stats.method = method;
    v.stats.nodes = shared.nodes.load();
    const WorkerResult* best = nullptr;
    bool budget = false;
    for (const auto& r : results) {
        v.stats.instances += r.instances;
        if (r.found_unsat && (!best || r.witness_index < best->witness_index)) best = &r;
        budget = budget || r.budget;
    }
    if (best) {
        v.status = CheckStatus::fails;
        Witness w;
        w.instance = best->witness_index;
        w.f.values = best->witness_f;
        w.lists.lists = best->witness_lists;
        v.witness = w;
    } else if (budget) {
        v.status = CheckStatus::budget_exceeded;
    } else {
        v.status = CheckStatus::holds;
    }
    v.stats.millis = ms_since(t0);
    return v;
}

std::vector<int> forest_free_edges(const Graph& g) {
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    std::vector<int> free;
    for (int e = 0; e < g.edge_count(); ++e) {
        int ru = find(g.edge(e).u), rv = find(g.edge(e).v);
        if (ru == rv) free.push_back(e);
        else parent[static_cast<std::size_t>(ru)] = rv;
    }
    return free;
}

FamilySet full_families(const Graph& g, const Group& a) {
    FamilySet fs;
    const std::uint64_t mask = a.order() == 64 ? ~0ull : (1ull << a.order()) - 1;
    fs.families.assign(static_cast<std::size_t>(g.vertex_count()), {{mask, a.elements()}});
    return fs;
}

// all size-k subsets of A containing the identity, lexicographic
std::vector<Family> zero_families(const Group& a, int k) {
    std::vector<Family> out;
    if (k == 0) {
        out.push_back({0ull, {}});
        return out;
    }
    std::vector<int> rest;
    for (int x = 0; x < a.order(); ++x)
        if (x != a.zero()) rest.push_back(x);
    const int r = static_cast<int>(rest.size());
    if (k - 1 > r) throw std::invalid_argument("list size exceeds group order");
    std::vector<int> pick(static_cast<std::size_t>(k - 1));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::vector<int> elems{a.zero()};
        std::uint64_t mask = 1ull << a.zero();
        for (int i : pick) {
            elems.push_back(rest[static_cast<std::size_t>(i)]);
            mask |= 1ull << rest[static_cast<std::size_t>(i)];
        }
        std::sort(elems.begin(), elems.end());
        out.push_back({mask, elems});
        int i = k - 2;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == r - (k - 1) + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k - 1; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

// Shared flow. cert_limit > 0 allows the degeneracy certificate to settle
// the holds-direction when the instance space exceeds the node budget.
Verdict check_impl(const Graph& g, const Group& a, const FamilySet& fams, std::uint64_t fam_total,
                   const std::vector<int>& free_edges, bool fix_first_zero, int cert_limit,
                   const CheckOptions& opt, const std::string& how) {
    const auto t0 = Clock::now();
    if (opt.budget.max_nodes == 0) {
        Verdict v;
        v.status = CheckStatus::budget_exceeded;
        v.stats.method = how + " (zero budget)";
        v.stats.millis = ms_since(t0);
        return v;
    }
    Orientation o = orient(g, 0);
    Ctx ctx(g, o, a);
    const std::uint64_t f_total = sat_pow(static_cast<std::uint64_t>(a.order()), free_edges.size());
    const std::uint64_t total = sat_mul(fam_total, f_total);

    if (total <= opt.budget.max_nodes)
        return run_sweep(ctx, o, fams, free_edges, fix_first_zero, total, opt, t0, how);

    if (cert_limit > 0) {
        auto cert = coloring_number(g);
        if (cert.col <= cert_limit) {
            Verdict v;
            v.status = CheckStatus::holds;
            v.stats.method = "degeneracy-certificate: col=" + std::to_string(cert.col) +
                             " <= " + std::to_string(cert_limit) + ", greedy colors every instance";
            v.stats.millis = ms_since(t0);
            return v;
        }
    }
    return run_sweep(ctx, o, fams, free_edges, fix_first_zero, total, opt, t0,
                     how + " (bounded witness hunt)");
}

} // namespace

ListAssignment ListAssignment::full(const Graph& g, const Group& a) {
    ListAssignment L;
    L.lists.assign(static_cast<std::size_t>(g.vertex_count()), a.elements());
    L.uniform_size = a.order();
    return L;
}

ListAssignment ListAssignment::uniform(const Graph& g, const std::vector<int>& list, int k) {
    ListAssignment L;
    L.lists.assign(static_cast<std::size_t>(g.vertex_count()), list);
    L.uniform_size = k;
    return L;
}

bool coloring_valid(const Graph& g, const Orientation& o, const Group& a, const EdgeLabeling& f,
                    const ListAssignment& lists, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.vertex_count()) return false;
    if (static_cast<int>(f.values.size()) != g.edge_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& L = lists.lists[static_cast<std::size_t>(v)];
        if (std::find(L.begin(), L.end(), c.colors[static_cast<std::size_t>(v)]) == L.end())
            return false;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const int t = o.tail(g, e), h = o.head(g, e);
        if (a.sub(c.colors[static_cast<std::size_t>(t)], c.colors[static_cast<std::size_t>(h)]) ==
            f.values[static_cast<std::size_t>(e)])
            return false;
    }
    return true;
}

Budget default_budget() {
    Budget b;
    if (const char* s = std::getenv("GCLAB_BUDGET_NODES")) b.max_nodes = std::strtoull(s, nullptr, 10);
    if (const char* s = std::getenv("GCLAB_BUDGET_SECONDS")) b.max_seconds = std::strtod(s, nullptr);
    return b;
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::holds: return "holds";
        case CheckStatus::fails: return "fails";
        case CheckStatus::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

nlohmann::json verdict_to_json(const Graph& g, const Orientation& o, const Verdict& v) {
    nlohmann::json j;
    j["status"] = to_string(v.status);
    j["stats"] = {{"instances", v.stats.instances},
                  {"nodes", v.stats.nodes},
                  {"millis", v.stats.millis},
                  {"method", v.stats.method}};
    if (v.witness) {
        nlohmann::json w;
        w["instance"] = v.witness->instance;
        auto fj = nlohmann::json::array();
        for (int e = 0; e < g.edge_count(); ++e)
            fj.push_back({{"tail", o.tail(g, e)},
                          {"head", o.head(g, e)},
                          {"value", v.witness->f.values[static_cast<std::size_t>(e)]}});
        w["f"] = fj;
        w["lists"] = v.witness->lists.lists;
        j["witness"] = w;
    }
    return j;
}

std::optional<Coloring> solve(const Graph& g, const Orientation& o, const Group& a,
                              const EdgeLabeling& f, const ListAssignment& lists,
                              std::uint64_t* nodes) {
    if (static_cast<int>(f.values.size()) != g.edge_count())
        throw std::invalid_argument("solve: labeling size mismatch");
    if (static_cast<int>(lists.lists.size()) != g.vertex_count())
        throw std::invalid_argument("solve: list assignment size mismatch");
    for (int x : f.values)
        if (x < 0 || x >= a.order()) throw std::invalid_argument("solve: label out of range");
    Ctx ctx(g, o, a);
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(std::max(g.vertex_count(), 1)), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int x : lists.lists[static_cast<std::size_t>(v)]) {
            if (x < 0 || x >= a.order())
                throw std::invalid_argument("solve: list element out of range");
            masks[static_cast<std::size_t>(v)] |= 1ull << x;
        }
    Solver s(ctx);
    std::vector<int> out;
    SolveOut r = s.run(masks.data(), f.values.data(), false, UINT64_MAX, &out);
    if (nodes) *nodes += s.nodes;
    if (r != SolveOut::sat) return std::nullopt;
    return Coloring{out};
}

Verdict check_group_colorable(const Graph& g, const Group& a, const CheckOptions& opt) {
    return check_impl(g, a, full_families(g, a), 1, forest_free_edges(g), true, a.order(), opt,
                      "exhaustive over forest-normalized labelings, full lists");
}

Verdict check_group_choosable(const Graph& g, const Group& a, int k, const CheckOptions& opt) {
    if (k < 1 || k > a.order())
        throw std::invalid_argument("check_group_choosable: need 1 <= k <= |A|");
    if (k == a.order()) {
        Verdict v = check_group_colorable(g, a, opt);
        v.stats.method += " (k = |A| forces full lists)";
        return v;
    }
    FamilySet fs;
    auto fams = zero_families(a, k);
    fs.families.assign(static_cast<std::size_t>(g.vertex_count()), fams);
    const std::uint64_t fam_total =
        sat_pow(static_cast<std::uint64_t>(fams.size()), static_cast<std::size_t>(g.vertex_count()));
    std::vector<int> free_edges(static_cast<std::size_t>(g.edge_count()));
    std::iota(free_edges.begin(), free_edges.end(), 0);
    return check_impl(g, a, fs, fam_total, free_edges, false, k, opt,
                      "exhaustive over all labelings x identity-normalized " + std::to_string(k) +
                          "-lists");
}

Verdict check_d_group_choosable(const Graph& g, const Group& a, const CheckOptions& opt) {
    if (a.order() < g.max_degree())
        throw std::invalid_argument("check_d_group_choosable: need |A| >= max degree");
    bool all_full = g.vertex_count() > 0;
    for (int v = 0; v < g.vertex_count(); ++v) all_full = all_full && g.degree(v) == a.order();
    if (all_full) {
        Verdict v = check_group_colorable(g, a, opt);
        v.stats.method += " (degree lists are full lists here)";
        return v;
    }
    FamilySet fs;
    fs.families.resize(static_cast<std::size_t>(g.vertex_count()));
    std::uint64_t fam_total = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        fs.families[static_cast<std::size_t>(v)] = zero_families(a, g.degree(v));
        fam_total = sat_mul(fam_total, fs.families[static_cast<std::size_t>(v)].size());
    }
    std::vector<int> free_edges(static_cast<std::size_t>(g.edge_count()));
    std::iota(free_edges.begin(), free_edges.end(), 0);
    return check_impl(g, a, fs, fam_total, free_edges, false, 0, opt,
                      "exhaustive over all labelings x identity-normalized degree lists");
}

std::optional<Coloring> greedy(const Graph& g, const std::vector<int>& ordering,
                               const Orientation& o, const Group& a, const EdgeLabeling& f,
                               const ListAssignment& lists) {
    Ctx ctx(g, o, a);
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int v : ordering) {
        std::uint64_t mask = 0;
        for (int x : lists.lists[static_cast<std::size_t>(v)]) mask |= 1ull << x;
        for (const Arc& arc : ctx.arcs[static_cast<std::size_t>(v)]) {
            const int cn = color[static_cast<std::size_t>(arc.nbr)];
            if (cn < 0) continue;
            // value of v that would break this arc, given the colored neighbor
            const int bad = arc.self_is_tail
                                ? a.op(f.values[static_cast<std::size_t>(arc.edge)], cn)
                                : a.inv(a.op(a.inv(cn), f.values[static_cast<std::size_t>(arc.edge)]));
            mask &= ~(1ull << bad);
        }
        if (mask == 0) return std::nullopt;
        color[static_cast<std::size_t>(v)] = std::countr_zero(mask);
    }
    return Coloring{color};
}

TwoPhaseResult two_phase_total(const Graph& base, const DerivedGraph& tg, const Orientation& o,
                               const Group& a, const EdgeLabeling& f, const ListAssignment& lists,
                               int line_col_estimate) {
    const int n = base.vertex_count();
    const int m = base.edge_count();
    if (tg.graph.vertex_count() != n + m || tg.base_vertex_count != n)
        throw std::invalid_argument("two_phase_total: derived graph does not match base");
    if (static_cast<int>(lists.lists.size()) != tg.graph.vertex_count())
        throw std::invalid_argument("two_phase_total: list assignment size mismatch");
    for (const auto& L : lists.lists)
        if (static_cast<int>(L.size()) < line_col_estimate + 2)
            throw std::invalid_argument("two_phase_total: list smaller than estimate + 2");

    Ctx ctx(tg.graph, o, a);
    std::vector<int> color(static_cast<std::size_t>(tg.graph.vertex_count()), -1);
    TwoPhaseResult res;

    auto color_one = [&](int v) -> bool {
        std::uint64_t mask = 0;
        for (int x : lists.lists[static_cast<std::size_t>(v)]) mask |= 1ull << x;
        for (const Arc& arc : ctx.arcs[static_cast<std::size_t>(v)]) {
            const int cn = color[static_cast<std::size_t>(arc.nbr)];
            if (cn < 0) continue;
            const int bad = arc.self_is_tail
                                ? a.op(f.values[static_cast<std::size_t>(arc.edge)], cn)
                                : a.inv(a.op(a.inv(cn), f.values[static_cast<std::size_t>(arc.edge)]));
            mask &= ~(1ull << bad);
        }
        if (mask == 0) return false;
        color[static_cast<std::size_t>(v)] = std::countr_zero(mask);
        return true;
    };

    // phase 1: base vertices along the degeneracy order of the base graph
    for (int v : coloring_number(base).ordering) {
        if (!color_one(v)) {
            res.failed_phase = 1;
            res.failed_element = v;
            return res;
        }
    }
    // phase 2: the incident endpoint colors shrink each edge list inside
    // color_one; order is the degeneracy order of the line graph
    auto lg = line_graph(base);
    for (int e : coloring_number(lg.graph).ordering) {
        const int v = tg.vertex_for_base_edge(e);
        if (!color_one(v)) {
            res.failed_phase = 2;
            res.failed_element = v;
            return res;
        }
    }
    res.coloring = Coloring{color};
    return res;
}

HardLabeling c3t_hard_labeling(int t) {
    if (t < 1) throw std::invalid_argument("c3t_hard_labeling: t >= 1");
    const int n = 3 * t;
    HardLabeling hl;
    hl.base = make_cycle(n);
    hl.tg = total_graph(hl.base);
    const Graph& T = hl.tg.graph;
    hl.orientation.flipped.assign(static_cast<std::size_t>(T.edge_count()), false);
    hl.f.values.assign(static_cast<std::size_t>(T.edge_count()), 0);
    // u_i is the base edge v_i v_{i+1}; u_n is base edge n-1, u_1 is base edge 0
    const int u_nm1 = hl.tg.vertex_for_base_edge(n - 2);
    const int u_n = hl.tg.vertex_for_base_edge(n - 1);
    const int u_1 = hl.tg.vertex_for_base_edge(0);
    hl.edge_one = T.edge_index(u_nm1, u_n);
    hl.edge_two = T.edge_index(u_1, u_n);
    if (hl.edge_one < 0 || hl.edge_two < 0)
        throw std::logic_error("c3t_hard_labeling: derived edges missing");
    // u_{n-1} -> u_n labeled 1 (stored direction already runs that way),
    // u_n -> u_1 labeled 2 (flip the stored (u_1, u_n) edge)
    hl.f.values[static_cast<std::size_t>(hl.edge_one)] = 1;
    hl.orientation.flipped[static_cast<std::size_t>(hl.edge_two)] = true;
    hl.f.values[static_cast<std::size_t>(hl.edge_two)] = 2;
    return hl;
}

RandomizedReport randomized_colorability(const Graph& g, const Group& a, int trials,
                                         std::uint64_t seed,
                                         const std::vector<EdgeLabeling>& planted,
                                         std::optional<int> list_size) {
    if (trials < 1) throw std::invalid_argument("randomized_colorability: trials >= 1");
    const auto t0 = Clock::now();
    Orientation o = orient(g, 0);
    std::mt19937_64 rng(seed);
    RandomizedReport rep;
    rep.seed = seed;

    auto run_one = [&](const EdgeLabeling& f, const ListAssignment& L) {
        ++rep.trials;
        if (!solve(g, o, a, f, L)) {
            ++rep.failures;
            if (rep.failure_witnesses.size() < 8) {
                Witness w;
                w.f = f;
                w.lists = L;
                w.instance = static_cast<std::uint64_t>(rep.trials - 1);
                rep.failure_witnesses.push_back(w);
            }
        }
    };

    ListAssignment full = ListAssignment::full(g, a);
    for (const auto& f : planted) run_one(f, full);
    for (int tr = 0; tr < trials; ++tr) {
        EdgeLabeling f;
        f.values.resize(static_cast<std::size_t>(g.edge_count()));
        for (auto& x : f.values) x = static_cast<int>(rng() % static_cast<std::uint64_t>(a.order()));
        if (!list_size) {
            run_one(f, full);
        } else {
            ListAssignment L;
            L.uniform_size = *list_size;
            L.lists.resize(static_cast<std::size_t>(g.vertex_count()));
            for (auto& lst : L.lists) {
                std::vector<int> pool = a.elements();
                for (int i = 0; i < *list_size; ++i) {
                    const std::size_t j =
                        static_cast<std::size_t>(i) +
                        static_cast<std::size_t>(rng() % (pool.size() - static_cast<std::size_t>(i)));
                    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
                }
                lst.assign(pool.begin(), pool.begin() + *list_size);
                std::sort(lst.begin(), lst.end());
            }
            run_one(f, L);
        }
    }
    rep.millis = ms_since(t0);
    return rep;
}

} // namespace gclab
