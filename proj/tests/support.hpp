// Shared helpers for the test suite: seeded random graph builders and a
// brute-force min-cut used to cross-check the flow engine.  Everything here is
// deterministic given the seed.

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rca/rca.hpp"

namespace testsupport {

using rca::Graph;

inline std::mt19937 rng(unsigned seed) { return std::mt19937(seed); }

// Uniform integer in [lo, hi].
inline int pick(std::mt19937& r, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(r);
}

// Random directed multigraph: n in [2, n_max], up to m_max arcs with
// tail != head (parallel arcs allowed, self-loop draws are skipped).
inline Graph random_directed(std::mt19937& r, int n_max, int m_max) {
    int n = pick(r, 2, n_max);
    int m = pick(r, 0, m_max);
    Graph g = Graph::directed(n);
    for (int i = 0; i < m; ++i) {
        int u = pick(r, 0, n - 1), v = pick(r, 0, n - 1);
        if (u != v) g.add_edge(u, v);
    }
    return g;
}

// Random connected undirected multigraph: a random spanning tree on
// n in [2, n_max] vertices plus up to extra_max additional edges.
inline Graph random_connected_undirected(std::mt19937& r, int n_max, int extra_max) {
    int n = pick(r, 2, n_max);
    Graph g = Graph::undirected(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, pick(r, 0, v - 1));
    int extra = pick(r, 0, extra_max);
    for (int i = 0; i < extra; ++i) {
        int u = pick(r, 0, n - 1), v = pick(r, 0, n - 1);
        if (u != v) g.add_edge(u, v);
    }
    return g;
}

// Random simple cubic graph on n (even, >= 4) vertices via the pairing
// model: resample random perfect matchings on 3n half-edge stubs until the
// result has no loops or parallel edges.
inline Graph random_cubic(std::mt19937& r, int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("random_cubic: n must be even and >= 4");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), 3, v);
        std::shuffle(stubs.begin(), stubs.end(), r);
        std::set<std::pair<int, int>> seen;
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int a = std::min(stubs[i], stubs[i + 1]);
            int b = std::max(stubs[i], stubs[i + 1]);
            if (a == b || !seen.insert({a, b}).second) ok = false;
        }
        if (!ok) continue;
        Graph g = Graph::undirected(n);
        for (auto [a, b] : seen) g.add_edge(a, b);
        return g;
    }
    throw std::runtime_error("random_cubic: no simple pairing found");
}

// Random digraph with in/out-degree <= 2 and total degree <= 3, built around
// a known directed Hamiltonian cycle (returned alongside) plus extra arcs
// inserted wherever the degree bounds permit.
struct Dp23Sample {
    Graph graph;
    std::vector<int> cycle;  // Hamiltonian cycle as a vertex order
};

inline Dp23Sample random_dp23(std::mt19937& r, int n, int extra_tries) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), r);
    Graph g = Graph::directed(n);
    std::vector<int> outd(n, 0), ind(n, 0);
    std::set<std::pair<int, int>> arcs;
    auto add = [&](int u, int v) {
        g.add_edge(u, v);
        arcs.insert({u, v});
        outd[u]++;
        ind[v]++;
    };
    for (int i = 0; i < n; ++i) add(perm[i], perm[(i + 1) % n]);
    for (int i = 0; i < extra_tries; ++i) {
        int u = pick(r, 0, n - 1), v = pick(r, 0, n - 1);
        if (u == v || arcs.count({u, v})) continue;
        if (outd[u] >= 2 || ind[v] >= 2) continue;
        if (outd[u] + ind[u] >= 3 || outd[v] + ind[v] >= 3) continue;
        add(u, v);
    }
    return {std::move(g), std::move(perm)};
}

// Minimum s-t cut of a time-expanded network by enumerating all 2^(nodes-2)
// source sides.  Only usable on tiny networks; guards itself.
inline long long brute_min_cut(const rca::TimeExpandedNetwork& net) {
    int nodes = net.node_count();
    if (nodes > 22) throw std::invalid_argument("brute_min_cut: network too large");
    long long best = -1;
    for (uint64_t mask = 0; mask < (uint64_t{1} << nodes); ++mask) {
        if (!(mask >> net.source & 1) || (mask >> net.sink & 1)) continue;
        long long cut = 0;
        for (const auto& a : net.arcs)
            if ((mask >> a.from & 1) && !(mask >> a.to & 1)) cut += a.capacity;
        if (best < 0 || cut < best) best = cut;
    }
    return best;
}

}  // namespace testsupport
