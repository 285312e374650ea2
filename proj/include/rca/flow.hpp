// Time-expanded flow machinery.
//
// p collision-free s-t walks of length <= tau exist exactly when the
// time-expanded network below carries an integral s0 -> t^tau flow of value
// >= p.  Layer i holds a copy v^i of every vertex; each edge contributes one
// capacity-1 movement arc per layer transition (one arc per parallel copy, so
// copies can carry distinct routes at the same step); a capacity-p chain along
// the sink's copies lets routes wait at t once they arrive.

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "rca/graph.hpp"
#include "rca/route.hpp"

namespace rca {

struct TimeExpandedNetwork {
    int base_vertices = 0;  // n of the underlying graph
    int horizon = 0;        // tau
    int source = 0;         // s at layer 0
    int sink = 0;           // t at layer tau
    bool bidirected = false;  // built from an undirected graph

    struct Arc {
        int from = 0;
        int to = 0;
        int capacity = 0;
        int origin = -1;  // underlying edge id; -1 for sink-chain arcs
    };
    std::vector<Arc> arcs;

    int node_count() const { return base_vertices * (horizon + 1); }
    int node(int v, int layer) const { return layer * base_vertices + v; }
    int layer_of(int node) const { return node / base_vertices; }
    int vertex_of(int node) const { return node % base_vertices; }
};

// Builds the time-expanded network for horizon tau.  Undirected graphs are
// bidirected: each edge yields movement arcs in both directions per layer,
// tagged with the same origin edge id.
inline TimeExpandedNetwork expand(const Graph& g, int s, int t, int tau, int p) {
    if (tau < 1) throw std::invalid_argument("expand: horizon must be >= 1");
    if (p < 1) throw std::invalid_argument("expand: p must be >= 1");
    if (s < 0 || s >= g.vertex_count() || t < 0 || t >= g.vertex_count())
        throw std::invalid_argument("expand: terminal out of range");
    TimeExpandedNetwork net;
    net.base_vertices = g.vertex_count();
    net.horizon = tau;
    net.bidirected = !g.is_directed();
    net.source = net.node(s, 0);
    net.sink = net.node(t, tau);
    for (int i = 1; i <= tau; ++i)
        for (int id = 0; id < g.edge_count(); ++id) {
            const Edge& e = g.edge(id);
            net.arcs.push_back({net.node(e.tail, i - 1), net.node(e.head, i), 1, id});
            if (!g.is_directed())
                net.arcs.push_back({net.node(e.head, i - 1), net.node(e.tail, i), 1, id});
        }
    for (int i = 1; i <= tau; ++i)
        net.arcs.push_back({net.node(t, i - 1), net.node(t, i), p, -1});
    return net;
}

struct Flow {
    int value = 0;
    std::vector<int> arc_flow;  // parallel to net.arcs
};

// Dinic's algorithm (BFS level graph + DFS blocking flow), stopping early once
// `target` units have been routed.  Arc order is fixed by the network, so the
// resulting flow — and everything decomposed from it — is deterministic.
inline Flow max_flow(const TimeExpandedNetwork& net, int target = kUnreachable) {
    struct RArc {
        int to, cap, rev;
    };
    int n = net.node_count();
    std::vector<std::vector<RArc>> adj(n);
    std::vector<std::pair<int, int>> where;  // arc index -> (node, slot)
    where.reserve(net.arcs.size());
    for (const auto& a : net.arcs) {
        where.emplace_back(a.from, static_cast<int>(adj[a.from].size()));
        adj[a.from].push_back({a.to, a.capacity, static_cast<int>(adj[a.to].size())});
        adj[a.to].push_back({a.from, 0, static_cast<int>(adj[a.from].size()) - 1});
    }

    std::vector<int> level(n), iter(n);
    auto bfs = [&]() {
        std::fill(level.begin(), level.end(), -1);
        std::vector<int> q{net.source};
        level[net.source] = 0;
        for (size_t h = 0; h < q.size(); ++h) {
            int u = q[h];
            for (const RArc& a : adj[u])
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[u] + 1;
                    q.push_back(a.to);
                }
        }
        return level[net.sink] >= 0;
    };
    // Iterative DFS for one augmenting path in the level graph.
    std::vector<std::pair<int, int>> stack;  // (node, slot taken to reach it)
    auto dfs = [&]() -> int {
        stack.clear();
        int u = net.source;
        while (true) {
            if (u == net.sink) {
                int aug = kUnreachable;
                int v = net.source;
                for (auto [node, slot] : stack) {
                    aug = std::min(aug, adj[v][slot].cap);
                    v = node;
                }
                v = net.source;
                for (auto [node, slot] : stack) {
                    adj[v][slot].cap -= aug;
                    adj[node][adj[v][slot].rev].cap += aug;
                    v = node;
                }
                return aug;
            }
            bool advanced = false;
            for (int& i = iter[u]; i < static_cast<int>(adj[u].size()); ++i) {
                const RArc& a = adj[u][i];
                if (a.cap > 0 && level[a.to] == level[u] + 1) {
                    stack.emplace_back(a.to, i);
                    u = a.to;
                    advanced = true;
                    break;
                }
            }
            if (advanced) continue;
            level[u] = -1;  // dead end; prune
            if (stack.empty()) return 0;
            stack.pop_back();
            u = stack.empty() ? net.source : stack.back().first;
        }
    };

    Flow f;
    while (f.value < target && bfs()) {
        std::fill(iter.begin(), iter.end(), 0);
        while (f.value < target) {
            int aug = dfs();
            if (aug == 0) break;
            f.value += aug;
        }
    }
    f.arc_flow.resize(net.arcs.size());
    for (size_t i = 0; i < net.arcs.size(); ++i) {
        auto [node, slot] = where[i];
        f.arc_flow[i] = net.arcs[i].capacity - adj[node][slot].cap;
    }
    return f;
}

// Decomposes an integral flow into flow.value walks in the underlying graph.
// Each unit is peeled off as a source->sink path in the expanded network
// (first-arc order, so deterministic), projected to underlying vertices, and
// truncated at its first arrival at t.  Movement arcs carry their origin edge
// id into the route's pins, so parallel copies stay distinguishable.
inline std::vector<Route> decompose_to_walks(const TimeExpandedNetwork& net,
                                             const Flow& flow) {
    std::vector<int> remaining = flow.arc_flow;
    int n = net.node_count();
    std::vector<std::vector<int>> out(n);  // arc indices by tail node
    for (size_t i = 0; i < net.arcs.size(); ++i)
        out[net.arcs[i].from].push_back(static_cast<int>(i));
    std::vector<size_t> cursor(n, 0);

    int t_vertex = net.vertex_of(net.sink);
    std::vector<Route> routes;
    for (int unit = 0; unit < flow.value; ++unit) {
        Route r;
        r.vertices.push_back(net.vertex_of(net.source));
        bool done = false;  // reached t in the projection; keep draining flow
        int u = net.source;
        while (u != net.sink) {
            while (cursor[u] < out[u].size() && remaining[out[u][cursor[u]]] == 0)
                ++cursor[u];
            if (cursor[u] == out[u].size())
                throw std::logic_error("decompose_to_walks: flow not decomposable");
            int ai = out[u][cursor[u]];
            remaining[ai]--;
            // The cursor may only advance past arcs that are fully drained;
            // re-check on the next visit rather than advancing now.
            if (!done) {
                r.vertices.push_back(net.vertex_of(net.arcs[ai].to));
                r.pinned.push_back(net.arcs[ai].origin);
                if (net.vertex_of(net.arcs[ai].to) == t_vertex) done = true;
            }
            u = net.arcs[ai].to;
        }
        routes.push_back(std::move(r));
    }
    return routes;
}

// Human-readable dump of a network: header, then one line per arc.
inline std::string format_network(const TimeExpandedNetwork& net) {
    std::ostringstream outs;
    outs << "time-expanded network: " << net.base_vertices << " base vertices, horizon "
         << net.horizon << ", " << net.node_count() << " nodes, " << net.arcs.size()
         << " arcs";
    if (net.bidirected) outs << " (bidirected from undirected input)";
    outs << "\n";
    outs << "source " << net.vertex_of(net.source) << "@" << net.layer_of(net.source)
         << " sink " << net.vertex_of(net.sink) << "@" << net.layer_of(net.sink) << "\n";
    for (const auto& a : net.arcs) {
        outs << net.vertex_of(a.from) << "@" << net.layer_of(a.from) << " -> "
             << net.vertex_of(a.to) << "@" << net.layer_of(a.to) << " cap " << a.capacity;
        if (a.origin >= 0) outs << " edge " << a.origin;
        else outs << " sink-chain";
        outs << "\n";
    }
    return outs.str();
}

}  // namespace rca
