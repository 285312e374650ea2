// Core graph types for the routing-with-collision-avoidance toolkit.
//
// Graphs are dense-id multigraphs: vertices are 0..n-1, edges are 0..m-1 in
// insertion order.  Parallel edges are allowed (they matter: two routes using
// different parallel copies of an edge at the same time step do not collide),
// self-loops are not.  Undirected edges are stored with canonical (min,max)
// endpoint order so parallel copies of the same undirected edge compare equal
// structurally and only differ by id.

#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace rca {

constexpr int kUnreachable = std::numeric_limits<int>::max();

struct Edge {
    int tail = 0;
    int head = 0;
};

class Graph {
public:
    Graph() = default;

    static Graph directed(int n) { return Graph(true, n); }
    static Graph undirected(int n) { return Graph(false, n); }

    bool is_directed() const { return directed_; }
    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Adds an edge and returns its id.  Undirected endpoints are canonicalized
    // to (min,max); direction of traversal is recovered from route context.
    int add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("self-loop (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") not allowed");
        if (!directed_ && u > v) std::swap(u, v);
        int id = edge_count();
        edges_.push_back({u, v});
        adj_[u].push_back(id);
        if (!directed_) adj_[v].push_back(id);
        return id;
    }

    const Edge& edge(int id) const {
        check_edge(id);
        return edges_[id];
    }

    const std::vector<Edge>& edges() const { return edges_; }

    // Edge ids usable when standing at v: out-arcs if directed, all incident
    // edges if undirected.  Ids appear in insertion order.
    const std::vector<int>& incident(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    // True if edge id can be traversed from u to v in one step.
    bool connects(int id, int u, int v) const {
        const Edge& e = edge(id);
        if (directed_) return e.tail == u && e.head == v;
        return (e.tail == u && e.head == v) || (e.tail == v && e.head == u);
    }

    // All parallel copies usable from u to v, ascending by id.
    std::vector<int> edges_between(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        std::vector<int> out;
        for (int id : adj_[u])
            if (connects(id, u, v)) out.push_back(id);
        std::sort(out.begin(), out.end());
        return out;
    }

    // Lowest-id copy usable from u to v, or -1.  This is the default
    // resolution for route steps without an explicit copy annotation.
    int find_edge(int u, int v) const {
        std::vector<int> all = edges_between(u, v);
        return all.empty() ? -1 : all.front();
    }

    // Number of edge endpoints at v (undirected multigraph degree / directed
    // out-degree).  Parallel copies count separately.
    int degree(int v) const { return static_cast<int>(incident(v).size()); }

private:
    Graph(bool directed, int n) : directed_(directed), n_(n), adj_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex id " + std::to_string(v) +
                                        " out of range [0," + std::to_string(n_) + ")");
    }
    void check_edge(int id) const {
        if (id < 0 || id >= edge_count())
            throw std::invalid_argument("edge id " + std::to_string(id) +
                                        " out of range [0," +
                                        std::to_string(edge_count()) + ")");
    }

    bool directed_ = true;
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// A set of edge ids, kept sorted and duplicate-free.
class EdgeSet {
public:
    EdgeSet() = default;

    // Validating constructor: every id must be a valid edge id of a graph with
    // `edge_count` edges, and ids must be pairwise distinct.
    static EdgeSet of(std::vector<int> ids, int edge_count) {
        std::sort(ids.begin(), ids.end());
        for (size_t i = 0; i < ids.size(); ++i) {
            if (ids[i] < 0 || ids[i] >= edge_count)
                throw std::invalid_argument("edge id " + std::to_string(ids[i]) +
                                            " out of range");
            if (i > 0 && ids[i] == ids[i - 1])
                throw std::invalid_argument("duplicate edge id " +
                                            std::to_string(ids[i]) + " in edge set");
        }
        EdgeSet s;
        s.ids_ = std::move(ids);
        return s;
    }

    void insert(int id) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
        if (it == ids_.end() || *it != id) ids_.insert(it, id);
    }

    bool contains(int id) const {
        return std::binary_search(ids_.begin(), ids_.end(), id);
    }

    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    const std::vector<int>& ids() const { return ids_; }

    bool operator==(const EdgeSet& o) const { return ids_ == o.ids_; }

private:
    std::vector<int> ids_;
};

// BFS distances (in edges) from `from`, following arc direction when the graph
// is directed.  Unreachable vertices get kUnreachable.  Neighbors are expanded
// in incident-list order, so parent choices (and shortest paths derived from
// them) are deterministic.
inline std::vector<int> bfs_distance(const Graph& g, int from) {
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    dist[from] = 0;
    std::queue<int> q;
    q.push(from);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int id : g.incident(u)) {
            const Edge& e = g.edge(id);
            int w = (e.tail == u) ? e.head : e.tail;
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

// BFS parent edges from `from`: par[v] = edge id used to discover v (-1 for
// `from` and unreachable vertices).  Companion to bfs_distance for witness
// path reconstruction.
inline std::vector<int> bfs_parent_edge(const Graph& g, int from) {
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::vector<int> par(g.vertex_count(), -1);
    dist[from] = 0;
    std::queue<int> q;
    q.push(from);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int id : g.incident(u)) {
            const Edge& e = g.edge(id);
            int w = (e.tail == u) ? e.head : e.tail;
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                par[w] = id;
                q.push(w);
            }
        }
    }
    return par;
}

// Longest finite distance *to* t over vertices that can reach t (reverse BFS).
// This feeds the walk-solution horizon p * sink_eccentricity(g, t).
inline int sink_eccentricity(const Graph& g, int t) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> radj(n);
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        radj[e.head].push_back(e.tail);
        if (!g.is_directed()) radj[e.tail].push_back(e.head);
    }
    std::vector<int> dist(n, kUnreachable);
    dist[t] = 0;
    std::queue<int> q;
    q.push(t);
    int ecc = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        ecc = std::max(ecc, dist[u]);
        for (int w : radj[u])
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return ecc;
}

// Kahn's algorithm.  Throws on undirected graphs: acyclicity is a directed
// notion here and callers dispatch on it.
inline bool is_dag(const Graph& g) {
    if (!g.is_directed())
        throw std::invalid_argument("is_dag: graph must be directed");
    int n = g.vertex_count();
    std::vector<int> indeg(n, 0);
    for (const Edge& e : g.edges()) indeg[e.head]++;
    std::queue<int> q;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) q.push(v);
    int seen = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        ++seen;
        for (int id : g.incident(u))
            if (g.edge(id).tail == u && --indeg[g.edge(id).head] == 0)
                q.push(g.edge(id).head);
    }
    return seen == n;
}

struct ReplicateResult {
    Graph graph;              // same vertices; selected edges replaced by x copies
    std::vector<int> origin;  // origin[new edge id] = edge id in the input graph
};

// Replaces every edge in `selected` by `x` parallel copies (the blow-up that
// turns a k-shared question into a 0-shared one: a route per copy).  Edge ids
// are renumbered: the new edge list follows the input id order, with each
// selected edge expanded in place into x consecutive copies.
inline ReplicateResult replicate_arcs(const Graph& g, const EdgeSet& selected, int x) {
    if (x < 1) throw std::invalid_argument("replicate_arcs: x must be >= 1");
    for (int id : selected.ids())
        if (id < 0 || id >= g.edge_count())
            throw std::invalid_argument("replicate_arcs: edge id " +
                                        std::to_string(id) + " out of range");
    ReplicateResult r{g.is_directed() ? Graph::directed(g.vertex_count())
                                      : Graph::undirected(g.vertex_count()),
                      {}};
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        int copies = selected.contains(id) ? x : 1;
        for (int c = 0; c < copies; ++c) {
            r.graph.add_edge(e.tail, e.head);
            r.origin.push_back(id);
        }
    }
    return r;
}

struct Subdivide3Result {
    Graph graph;  // every input edge replaced by a path of length 3
    // internals[e] = the two fresh vertices on input edge e, ordered from
    // edge(e).tail to edge(e).head.
    std::vector<std::array<int, 2>> internals;
};

// Subdivides every edge of an undirected graph twice, turning each edge
// {u,v} into a path u - a - b - v.  Restores simplicity of multigraphs while
// preserving the trail-routing decision.  Fresh vertices are numbered after
// the originals, grouped by input edge id.
inline Subdivide3Result subdivide3(const Graph& g) {
    if (g.is_directed())
        throw std::invalid_argument("subdivide3: graph must be undirected");
    int n = g.vertex_count();
    int m = g.edge_count();
    Subdivide3Result r{Graph::undirected(n + 2 * m), {}};
    r.internals.reserve(m);
    for (int id = 0; id < m; ++id) {
        const Edge& e = g.edge(id);
        int a = n + 2 * id;
        int b = n + 2 * id + 1;
        r.graph.add_edge(e.tail, a);
        r.graph.add_edge(a, b);
        r.graph.add_edge(b, e.head);
        r.internals.push_back({a, b});
    }
    return r;
}

}  // namespace rca
