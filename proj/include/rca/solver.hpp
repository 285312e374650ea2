// Polynomial-time solvers and the dispatch that picks one per instance class.
//
// The workhorse reduction: p routes sharing at most k edges exist iff for some
// edge subset K with |K| <= k, p routes sharing *nothing* exist once every
// edge of K is replaced by p parallel copies (each route gets a private copy,
// so sharing concentrates on K).  Zero-shared existence is a max-flow question
// on the time-expanded network.

#pragma once

#include <future>
#include <optional>
#include <string>
#include <vector>

#include "rca/flow.hpp"
#include "rca/graph.hpp"
#include "rca/instance.hpp"
#include "rca/oracle.hpp"
#include "rca/route.hpp"

namespace rca {

// Refuse time expansions whose size (horizon * (n + m)) would be absurd for a
// desk-scale tool, rather than thrash.
constexpr long long kMaxNetworkUnits = 50'000'000;

// Horizon for flow-based solving: walks in a minimal solution never need more
// than p * (max distance to t) steps (a longest-walk exchange argument), and
// on a DAG no walk exceeds n-1 steps anyway; alpha tightens either bound.
inline long long dispatch_horizon(const Graph& g, int t, int p,
                                  std::optional<int> alpha) {
    long long base;
    if (g.is_directed() && is_dag(g))
        base = g.vertex_count();
    else
        base = static_cast<long long>(p) * sink_eccentricity(g, t);
    if (alpha && *alpha < base) base = *alpha;
    return base;
}

// Do p pairwise non-colliding s-t walks of length <= tau exist?  Max flow >= p
// on the time-expanded network decides it; the decomposition is the witness.
inline SolveResult solve_zero_shared_directed(const Graph& g, int s, int t, int p,
                                              long long tau) {
    if (tau < 1) throw std::invalid_argument("solve_zero_shared: tau must be >= 1");
    long long units = tau * (g.vertex_count() + g.edge_count() + 1);
    if (units > kMaxNetworkUnits)
        throw BudgetError("time expansion too large: horizon " + std::to_string(tau) +
                              " over " + std::to_string(g.vertex_count()) + "+" +
                              std::to_string(g.edge_count()) +
                              " vertices+edges exceeds network guard",
                          static_cast<double>(units), kMaxNetworkUnits);
    TimeExpandedNetwork net = expand(g, s, t, static_cast<int>(tau), p);
    Flow f = max_flow(net, p);
    SolveResult res;
    res.solver_used = "flow";
    res.horizon = static_cast<int>(tau);
    res.yes = f.value >= p;
    if (res.yes) {
        std::vector<Route> walks = decompose_to_walks(net, f);
        walks.resize(p);
        res.witness = std::move(walks);
        res.shared = shared_edges(g, res.witness);
    }
    return res;
}

namespace detail {

// Translates a witness found on a replicate_arcs graph back to the original:
// vertices are unchanged, pins map through the copy-origin table.
inline void map_pins(std::vector<Route>& routes, const std::vector<int>& origin) {
    for (Route& r : routes)
        for (int& pin : r.pinned)
            if (pin >= 0) pin = origin[pin];
}

// Shortest s-t path as a pinned route (BFS tree, deterministic).  t must be
// reachable from s.
inline Route shortest_path_route(const Graph& g, int s, int t) {
    std::vector<int> par = bfs_parent_edge(g, s);
    Route r;
    std::vector<int> vs, es;
    for (int v = t; v != s;) {
        if (par[v] < 0) throw std::logic_error("shortest_path_route: t unreachable");
        const Edge& e = g.edge(par[v]);
        vs.push_back(v);
        es.push_back(par[v]);
        v = (e.tail == v) ? e.head : e.tail;
    }
    vs.push_back(s);
    std::reverse(vs.begin(), vs.end());
    std::reverse(es.begin(), es.end());
    r.vertices = std::move(vs);
    r.pinned = std::move(es);
    return r;
}

}  // namespace detail

// Solves the k-shared question for a directed graph by trying every edge
// subset K with |K| <= k (ascending size, lexicographic) and asking the flow
// engine for a zero-shared solution in the blown-up graph.  `jobs` > 1
// evaluates candidate subsets in parallel batches; the accepted subset is
// always the first in enumeration order, so results are schedule-independent.
inline SolveResult solve_k_shared_directed(const Graph& g, int s, int t, int p, int k,
                                           long long tau, int jobs = 1) {
    if (!g.is_directed())
        throw std::invalid_argument("solve_k_shared_directed: graph must be directed");
    int m = g.edge_count();
    int kk = std::min(k, m);

    auto attempt = [&](const std::vector<int>& subset) -> SolveResult {
        ReplicateResult rep = replicate_arcs(g, EdgeSet::of(subset, m), p);
        SolveResult zero = solve_zero_shared_directed(rep.graph, s, t, p, tau);
        if (zero.yes) {
            detail::map_pins(zero.witness, rep.origin);
            zero.shared = shared_edges(g, zero.witness);
        }
        return zero;
    };

    // All subsets of {0..m-1} of one size, lexicographic.
    auto next_subset = [m](std::vector<int>& c) -> bool {
        int sz = static_cast<int>(c.size());
        for (int i = sz - 1; i >= 0; --i) {
            if (c[i] < m - (sz - i)) {
                ++c[i];
                for (int j = i + 1; j < sz; ++j) c[j] = c[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    SolveResult last;
    for (int size = 0; size <= kk; ++size) {
        std::vector<int> subset(size);
        for (int i = 0; i < size; ++i) subset[i] = i;
        bool more = true;
        while (more) {
            // Collect a batch, evaluate (possibly in parallel), take the
            // first success in order.
            std::vector<std::vector<int>> batch;
            int batch_cap = jobs > 1 ? jobs * 4 : 1;
            while (more && static_cast<int>(batch.size()) < batch_cap) {
                batch.push_back(subset);
                more = next_subset(subset);
            }
            std::vector<SolveResult> results(batch.size());
            if (jobs > 1 && batch.size() > 1) {
                std::vector<std::future<SolveResult>> futs;
                for (const auto& b : batch)
                    futs.push_back(std::async(std::launch::async, attempt, b));
                for (size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
            } else {
                for (size_t i = 0; i < batch.size(); ++i) results[i] = attempt(batch[i]);
            }
            for (auto& r : results) {
                if (r.yes) {
                    r.solver_used = "k-subset-flow";
                    return r;
                }
                last = r;
            }
        }
    }
    last.solver_used = "k-subset-flow";
    last.yes = false;
    last.witness.clear();
    last.shared = EdgeSet();
    return last;
}

// Closed form for undirected walk routing without a length bound: reachable
// plus any of {dist(s,t) <= k, k >= 1, edge-degree(s) >= p} means yes.  With
// k >= 1 the routes bounce across the first shortest-path edge a staggered
// number of times, sharing exactly that edge; with k = 0 each route bounces
// across a private incident edge of s instead.  If deg(s) < p and k = 0, two
// of the p routes already collide on their first step.
inline SolveResult solve_walk_undirected(const Graph& g, int s, int t, int p, int k) {
    if (g.is_directed())
        throw std::invalid_argument("solve_walk_undirected: graph must be undirected");
    SolveResult res;
    res.solver_used = "walk-undirected";
    std::vector<int> dist = bfs_distance(g, s);
    if (dist[t] == kUnreachable) return res;

    Route path = detail::shortest_path_route(g, s, t);

    // s -> other -> s, `times` times, then the shortest path.
    auto bounce_then = [&](int other, int edge_id, int times) {
        Route r;
        r.vertices.push_back(s);
        for (int i = 0; i < times; ++i) {
            r.vertices.push_back(other);
            r.pinned.push_back(edge_id);
            r.vertices.push_back(s);
            r.pinned.push_back(edge_id);
        }
        for (size_t i = 1; i < path.vertices.size(); ++i) {
            r.vertices.push_back(path.vertices[i]);
            r.pinned.push_back(path.pinned[i - 1]);
        }
        return r;
    };

    if (dist[t] <= k) {
        res.yes = true;
        res.witness.assign(p, path);
        res.shared = shared_edges(g, res.witness);
        return res;
    }
    if (k >= 1) {
        int e1 = path.pinned.front();
        int v1 = path.vertices[1];
        res.yes = true;
        for (int i = 0; i < p; ++i) res.witness.push_back(bounce_then(v1, e1, i));
        res.shared = shared_edges(g, res.witness);
        return res;
    }
    if (g.degree(s) >= p) {
        int e1 = path.pinned.front();
        std::vector<int> pool;  // incident edges of s, the path's first edge first
        pool.push_back(e1);
        for (int id : g.incident(s))
            if (id != e1) pool.push_back(id);
        std::sort(pool.begin() + 1, pool.end());
        res.yes = true;
        for (int i = 0; i < p; ++i) {
            const Edge& e = g.edge(pool[i]);
            int other = (e.tail == s) ? e.head : e.tail;
            res.witness.push_back(bounce_then(other, pool[i], i));
        }
        res.shared = shared_edges(g, res.witness);
        return res;
    }
    return res;
}

// Entry point: validates, then picks the right engine.
//
//   (a) t unreachable from s                            -> no
//   (b) no length bound and dist(s,t) <= k              -> yes (p copies of a
//       shortest path share only its dist(s,t) <= k edges)
//   (c) undirected walk routing without length bound    -> closed form
//   (d) directed walks, or any kind on a DAG (where     -> k-subset flow
//       walks, trails and paths coincide), horizon per dispatch_horizon
//   (e) everything else (path/trail with cycles around, -> exhaustive oracle,
//       or undirected length-bounded walks)                budget-guarded
inline SolveResult solve(const Instance& inst, long long budget = kDefaultOracleBudget,
                         int jobs = 1) {
    inst.validate();
    const Graph& g = inst.graph;

    std::vector<int> dist = bfs_distance(g, inst.s);
    if (dist[inst.t] == kUnreachable) {
        SolveResult res;
        res.solver_used = "unreachable";
        return res;
    }
    if (!inst.alpha && dist[inst.t] <= inst.k) {
        SolveResult res;
        res.solver_used = "shortest-path";
        res.yes = true;
        res.witness.assign(inst.p, detail::shortest_path_route(g, inst.s, inst.t));
        res.shared = shared_edges(g, res.witness);
        return res;
    }
    if (!g.is_directed() && inst.kind == RouteKind::walk && !inst.alpha)
        return solve_walk_undirected(g, inst.s, inst.t, inst.p, inst.k);
    if (g.is_directed() && (inst.kind == RouteKind::walk || is_dag(g))) {
        long long tau = dispatch_horizon(g, inst.t, inst.p, inst.alpha);
        return solve_k_shared_directed(g, inst.s, inst.t, inst.p, inst.k, tau, jobs);
    }
    return min_shared(inst, budget);
}

}  // namespace rca
