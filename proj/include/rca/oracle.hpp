// Exhaustive oracles.  Everything here is deliberately brute-force: these
// functions define ground truth for the polynomial solvers at desk scale and
// refuse (rather than degrade) beyond their budget.

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "rca/graph.hpp"
#include "rca/instance.hpp"
#include "rca/route.hpp"

namespace rca {

constexpr long long kDefaultOracleBudget = 10'000'000;

// Thrown when an exhaustive search would exceed its combination budget.
struct BudgetError : std::runtime_error {
    double combinations;
    long long budget;
    BudgetError(const std::string& msg, double comb, long long bud)
        : std::runtime_error(msg), combinations(comb), budget(bud) {}
};

namespace detail {

// BFS distances *to* t (reverse direction for directed graphs).
inline std::vector<int> distances_to_sink(const Graph& g, int t) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> radj(n);
    for (const Edge& e : g.edges()) {
        radj[e.head].push_back(e.tail);
        if (!g.is_directed()) radj[e.tail].push_back(e.head);
    }
    std::vector<int> dist(n, kUnreachable);
    dist[t] = 0;
    std::vector<int> q{t};
    for (size_t h = 0; h < q.size(); ++h) {
        int u = q[h];
        for (int w : radj[u])
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

}  // namespace detail

// All s-t routes of the given kind with at most maxlen steps, as vertex
// sequences in lexicographic order.  Routes end at their first arrival at t
// (a route that reached t has no reason to keep moving; any solution can be
// truncated this way without creating collisions).  Parallel copies do not
// multiply the output: copy choice is deferred to the sharing search, and a
// vertex sequence is listed when *some* copy assignment realizes the kind.
//
// With max_routes > 0 the enumeration refuses (BudgetError) instead of
// producing more than max_routes routes or doing unbounded work; walks under a
// huge length cap would otherwise never terminate.
inline std::vector<Route> enumerate_routes(const Graph& g, int s, int t,
                                           RouteKind kind, int maxlen,
                                           long long max_routes = 0) {
    if (maxlen < 1) throw std::invalid_argument("enumerate_routes: maxlen must be >= 1");
    if (s < 0 || s >= g.vertex_count() || t < 0 || t >= g.vertex_count())
        throw std::invalid_argument("enumerate_routes: terminal out of range");
    std::vector<Route> out;
    if (s == t) {
        out.push_back(Route::of({s}));
        return out;
    }
    std::vector<int> dist_t = detail::distances_to_sink(g, t);
    if (dist_t[s] == kUnreachable) return out;

    long long work = 0;
    long long work_limit = max_routes > 0 ? 20 * max_routes + 1000 : 0;
    auto charge = [&](long long units) {
        if (max_routes <= 0) return;
        work += units;
        if (work > work_limit ||
            static_cast<long long>(out.size()) > max_routes) {
            std::ostringstream msg;
            msg << "route enumeration budget exceeded: more than " << max_routes
                << " routes of length <= " << maxlen;
            throw BudgetError(msg.str(), static_cast<double>(out.size()), max_routes);
        }
    };

    int n = g.vertex_count();
    std::vector<int> seq{s};
    std::vector<char> visited(n, 0);  // paths
    visited[s] = 1;
    std::map<std::pair<int, int>, int> pair_used;  // trails: steps per endpoint pair

    // Distinct successor vertices of u, ascending, each with its copy count.
    auto successors = [&](int u) {
        std::map<int, int> copies;  // next vertex -> parallel copy count
        for (int id : g.incident(u)) {
            const Edge& e = g.edge(id);
            copies[e.tail == u ? e.head : e.tail]++;
        }
        return copies;
    };

    auto dfs = [&](auto&& self, int u) -> void {
        int len = static_cast<int>(seq.size()) - 1;
        for (auto [v, copies] : successors(u)) {
            if (dist_t[v] == kUnreachable || len + 1 + dist_t[v] > maxlen) continue;
            if (kind == RouteKind::path && visited[v]) continue;
            std::pair<int, int> key = g.is_directed()
                                          ? std::make_pair(u, v)
                                          : std::make_pair(std::min(u, v), std::max(u, v));
            if (kind == RouteKind::trail && pair_used[key] >= copies) continue;
            seq.push_back(v);
            if (v == t) {
                out.push_back(Route::of(seq));
                charge(static_cast<long long>(seq.size()));
            } else {
                charge(1);
                if (kind == RouteKind::path) visited[v] = 1;
                if (kind == RouteKind::trail) pair_used[key]++;
                self(self, v);
                if (kind == RouteKind::path) visited[v] = 0;
                if (kind == RouteKind::trail) pair_used[key]--;
            }
            seq.pop_back();
        }
    };
    dfs(dfs, s);
    return out;
}

namespace detail {

// Minimum number of copies of one endpoint pair that end up shared, for trail
// routes, where each route must use pairwise-distinct copies of the pair.
// slots_by_route[r] = the time steps at which selected route r uses the pair.
// Tiny exact search; only reached for parallel-copy pairs under kind=trail.
inline int trail_pair_min_shared(const std::vector<std::vector<int>>& slots_by_route,
                                 int copies,
                                 std::vector<std::vector<int>>* best_assign) {
    std::vector<int> steps;  // dense step index
    for (const auto& v : slots_by_route) steps.insert(steps.end(), v.begin(), v.end());
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    auto step_index = [&](int s) {
        return static_cast<int>(std::lower_bound(steps.begin(), steps.end(), s) -
                                steps.begin());
    };

    struct Slot {
        int route, step;
    };
    std::vector<Slot> slots;
    for (size_t r = 0; r < slots_by_route.size(); ++r)
        for (int s : slots_by_route[r])
            slots.push_back({static_cast<int>(r), step_index(s)});

    std::vector<std::vector<int>> occ(steps.size(), std::vector<int>(copies, 0));
    std::vector<uint32_t> route_mask(slots_by_route.size(), 0);
    std::vector<int> chosen(slots.size(), -1);
    std::vector<int> copy_shared(copies, 0);  // collision count per copy
    int shared_now = 0;
    int best = copies + 1;
    std::vector<int> best_choice;

    auto rec = [&](auto&& self, size_t i) -> void {
        if (shared_now >= best) return;
        if (i == slots.size()) {
            best = shared_now;
            best_choice = chosen;
            return;
        }
        const Slot& sl = slots[i];
        for (int x = 0; x < copies; ++x) {
            if (route_mask[sl.route] & (1u << x)) continue;
            int delta_shared = (occ[sl.step][x] == 1 && copy_shared[x] == 0) ? 1 : 0;
            int delta_coll = occ[sl.step][x] >= 1 ? 1 : 0;
            occ[sl.step][x]++;
            route_mask[sl.route] |= 1u << x;
            copy_shared[x] += delta_coll;
            shared_now += delta_shared;
            chosen[i] = x;
            self(self, i + 1);
            shared_now -= delta_shared;
            copy_shared[x] -= delta_coll;
            route_mask[sl.route] &= ~(1u << x);
            occ[sl.step][x]--;
        }
    };
    rec(rec, 0);

    if (best_assign) {
        best_assign->assign(slots_by_route.size(), {});
        size_t i = 0;
        for (size_t r = 0; r < slots_by_route.size(); ++r)
            for (size_t j = 0; j < slots_by_route[r].size(); ++j)
                (*best_assign)[r].push_back(best_choice[i++]);
    }
    return best;
}

}  // namespace detail

// Exact minimum number of shared edges over all multisets of p routes of
// inst.kind, by iterative-deepening branch and bound over route indices in
// nondecreasing order (multisets, canonically).  Routes come from
// enumerate_routes capped at alpha when the instance has a length bound —
// honored literally, so the oracle can probe how the answer depends on the
// bound — else at the natural cap: n-1 for paths, m for trails,
// p * sink-eccentricity for walks (a shortest total-length solution never
// needs longer walks, so that cap loses nothing).
//
// Refuses with BudgetError when route_count^p exceeds `budget`, or when the
// enumeration itself would produce more than `budget` routes.
//
// Returned SolveResult: min_shared always set when any route exists (nullopt
// otherwise), yes = (min <= inst.k), witness = first multiset achieving the
// minimum, with parallel copies pinned so its shared_edges equals the minimum.
inline SolveResult min_shared(const Instance& inst,
                              long long budget = kDefaultOracleBudget) {
    inst.validate();
    const Graph& g = inst.graph;
    int n = g.vertex_count(), m = g.edge_count();

    SolveResult res;
    res.solver_used = "oracle";

    int natural = 0;
    switch (inst.kind) {
        case RouteKind::path: natural = n - 1; break;
        case RouteKind::trail: natural = m; break;
        case RouteKind::walk: natural = inst.p * sink_eccentricity(g, inst.t); break;
    }
    int cap = inst.alpha ? *inst.alpha : natural;
    res.horizon = cap;
    if (cap < 1) return res;  // no admissible route can exist

    std::vector<Route> routes = enumerate_routes(g, inst.s, inst.t, inst.kind, cap, budget);
    if (routes.empty()) return res;

    std::sort(routes.begin(), routes.end(), [](const Route& a, const Route& b) {
        if (a.vertices.size() != b.vertices.size())
            return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });

    int R = static_cast<int>(routes.size());
    double combos = std::pow(static_cast<double>(R), inst.p);
    if (static_cast<double>(inst.p) * std::log(static_cast<double>(R)) >
        std::log(static_cast<double>(budget))) {
        std::ostringstream msg;
        msg << "oracle budget exceeded: " << R << "^" << inst.p << " = " << combos
            << " route combinations > budget " << budget;
        throw BudgetError(msg.str(), combos, budget);
    }

    // Endpoint-pair table.  pair_of[r][step-1] = pair index; a pair is simple
    // when it has exactly one copy, in which case "some step overloaded" is
    // exactly "this edge is shared".  For parallel pairs that closed form is
    // the walk/path optimum and a lower bound for trails.
    std::map<std::pair<int, int>, int> pair_index;
    std::vector<std::vector<int>> pair_copies;  // ascending edge ids
    std::vector<std::pair<int, int>> pair_ends;
    auto pair_of = [&](int u, int v) {
        std::pair<int, int> key = g.is_directed()
                                      ? std::make_pair(u, v)
                                      : std::make_pair(std::min(u, v), std::max(u, v));
        auto it = pair_index.find(key);
        if (it != pair_index.end()) return it->second;
        int idx = static_cast<int>(pair_copies.size());
        pair_index.emplace(key, idx);
        pair_copies.push_back(g.edges_between(key.first, key.second));
        pair_ends.push_back(key);
        return idx;
    };
    std::vector<std::vector<int>> route_pairs(R);
    for (int r = 0; r < R; ++r)
        for (size_t i = 1; i < routes[r].vertices.size(); ++i)
            route_pairs[r].push_back(
                pair_of(routes[r].vertices[i - 1], routes[r].vertices[i]));
    bool all_simple = true;
    for (const auto& pc : pair_copies)
        if (pc.size() > 1) all_simple = false;

    int P = static_cast<int>(pair_copies.size());
    std::vector<std::vector<int>> load(P, std::vector<int>(cap, 0));
    std::vector<int> overloaded_steps(P, 0);
    int lb = 0;  // sum over pairs of the closed-form contribution

    auto push_route = [&](int r) {
        for (size_t i = 0; i < route_pairs[r].size(); ++i) {
            int pi = route_pairs[r][i];
            if (++load[pi][i] == static_cast<int>(pair_copies[pi].size()) + 1)
                if (++overloaded_steps[pi] == 1) ++lb;
        }
    };
    auto pop_route = [&](int r) {
        for (size_t i = 0; i < route_pairs[r].size(); ++i) {
            int pi = route_pairs[r][i];
            if (load[pi][i]-- == static_cast<int>(pair_copies[pi].size()) + 1)
                if (--overloaded_steps[pi] == 0) --lb;
        }
    };

    std::vector<int> sel;
    bool need_exact = !all_simple && inst.kind == RouteKind::trail;

    // Exact sharing of the current complete selection (only differs from lb
    // when trail routes meet parallel-copy pairs).
    auto exact_shared = [&]() -> int {
        if (!need_exact) return lb;
        int total = 0;
        for (int pi = 0; pi < P; ++pi) {
            int c = static_cast<int>(pair_copies[pi].size());
            if (c == 1) {
                total += overloaded_steps[pi] > 0 ? 1 : 0;
                continue;
            }
            bool touched = false;
            for (int s = 0; s < cap && !touched; ++s) touched = load[pi][s] > 1;
            if (!touched) continue;  // no step with 2+ routes: nothing can be shared
            std::vector<std::vector<int>> slots;
            for (int r : sel) {
                std::vector<int> mine;
                for (size_t i = 0; i < route_pairs[r].size(); ++i)
                    if (route_pairs[r][i] == pi) mine.push_back(static_cast<int>(i));
                slots.push_back(std::move(mine));
            }
            total += detail::trail_pair_min_shared(slots, c, nullptr);
        }
        return total;
    };

    int best = -1;
    std::vector<int> best_sel;
    auto dfs = [&](auto&& self, int depth, int from, int T) -> bool {
        if (lb > T) return false;
        if (depth == inst.p) {
            int exact = exact_shared();
            if (exact > T) return false;
            best = exact;
            best_sel = sel;
            return true;
        }
        for (int r = from; r < R; ++r) {
            push_route(r);
            sel.push_back(r);
            bool found = self(self, depth + 1, r, T);
            sel.pop_back();
            pop_route(r);
            if (found) return true;
        }
        return false;
    };
    for (int T = 0; T <= m && best < 0; ++T) dfs(dfs, 0, 0, T);

    res.min_shared = best;
    res.yes = best <= inst.k;

    // Materialize the witness: pin copies on parallel pairs.  Walk/path pairs
    // funnel any excess through the lowest-id copy (one shared copy per pair,
    // matching the closed form); trail pairs take the assignment found by the
    // per-pair search.
    std::vector<Route> witness;
    for (int r : best_sel) witness.push_back(routes[r]);
    if (!all_simple) {
        for (int pi = 0; pi < P; ++pi) {
            const std::vector<int>& copies = pair_copies[pi];
            int c = static_cast<int>(copies.size());
            if (c == 1) continue;
            std::vector<std::vector<int>> slots;  // per witness route: steps on pi
            for (size_t w = 0; w < witness.size(); ++w) {
                std::vector<int> mine;
                const auto& rp = route_pairs[best_sel[w]];
                for (size_t i = 0; i < rp.size(); ++i)
                    if (rp[i] == pi) mine.push_back(static_cast<int>(i));
                slots.push_back(std::move(mine));
            }
            std::vector<std::vector<int>> assign(witness.size());
            if (inst.kind == RouteKind::trail) {
                detail::trail_pair_min_shared(slots, c, &assign);
            } else {
                // Per step, hand out copies in ascending order; overflow all
                // goes to copies[0].
                std::map<int, int> given;  // step -> slots already assigned there
                for (size_t w = 0; w < witness.size(); ++w)
                    for (size_t j = 0; j < slots[w].size(); ++j) {
                        int s = slots[w][j];
                        int idx = given[s]++;
                        assign[w].push_back(idx < c - 1 ? idx + 1 : 0);
                    }
                // Count loads to restore the no-overflow case to 0,1,2,...
                std::map<int, int> total;
                for (size_t w = 0; w < witness.size(); ++w)
                    for (int s : slots[w]) total[s]++;
                std::map<int, int> given2;
                for (size_t w = 0; w < witness.size(); ++w)
                    for (size_t j = 0; j < slots[w].size(); ++j) {
                        int s = slots[w][j];
                        int idx = given2[s]++;
                        if (total[s] <= c) assign[w][j] = idx;  // all distinct fits
                    }
            }
            for (size_t w = 0; w < witness.size(); ++w)
                for (size_t j = 0; j < slots[w].size(); ++j)
                    witness[w].pinned[slots[w][j]] = copies[assign[w][j]];
        }
    }
    if (res.yes) {
        res.witness = witness;
        res.shared = shared_edges(g, witness);
    }
    return res;
}

// --- set cover --------------------------------------------------------------
//
// File format:
//   sc 1
//   n <universe size>          elements are 0..n-1
//   f <elem> <elem> ...        one line per set (may be empty: bare "f")
//   l <budget>

struct SetCoverInstance {
    int universe = 0;
    std::vector<std::vector<int>> sets;
    int budget = 0;

    void validate() const {
        if (universe < 0) throw std::invalid_argument("negative universe");
        if (budget < 0) throw std::invalid_argument("negative budget");
        for (const auto& f : sets)
            for (int e : f)
                if (e < 0 || e >= universe)
                    throw std::invalid_argument("set element " + std::to_string(e) +
                                                " outside universe");
    }
};

// Minimum-cardinality cover within budget, by enumerating all subfamilies.
// Returns the chosen set indices (smallest family, ties by lowest bitmask) or
// nullopt when no subfamily within budget covers the universe.
inline std::optional<std::vector<int>> brute_force_set_cover(const SetCoverInstance& sc) {
    sc.validate();
    int m = static_cast<int>(sc.sets.size());
    if (m > 25)
        throw BudgetError("set cover brute force limited to 25 sets, got " +
                              std::to_string(m),
                          std::pow(2.0, m), 1 << 25);
    uint64_t full = sc.universe >= 64 ? ~0ull : ((1ull << sc.universe) - 1);
    if (sc.universe > 63) throw std::invalid_argument("universe too large");
    std::vector<uint64_t> bits(m, 0);
    for (int j = 0; j < m; ++j)
        for (int e : sc.sets[j]) bits[j] |= 1ull << e;

    int best_count = m + 1;
    uint32_t best_mask = 0;
    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
        int cnt = std::popcount(mask);
        if (cnt > sc.budget || cnt >= best_count) continue;
        uint64_t cover = 0;
        for (int j = 0; j < m; ++j)
            if (mask & (1u << j)) cover |= bits[j];
        if (cover == full) {
            best_count = cnt;
            best_mask = mask;
        }
    }
    // 0-set check: empty family covers only the empty universe.
    if (best_count > m && full != 0) return std::nullopt;
    if (full == 0) return std::vector<int>{};  // nothing to cover
    if (best_count > sc.budget || best_count > m) return std::nullopt;
    std::vector<int> chosen;
    for (int j = 0; j < m; ++j)
        if (best_mask & (1u << j)) chosen.push_back(j);
    return chosen;
}

inline SetCoverInstance parse_set_cover(const std::string& text) {
    detail::LineReader r(text);
    if (!r.next()) throw std::runtime_error("empty set cover file");
    {
        std::istringstream ls(r.line);
        std::string a, b;
        ls >> a >> b;
        if (a != "sc" || b != "1") r.fail("expected header 'sc 1'");
    }
    if (!r.next()) r.fail("missing 'n' line");
    SetCoverInstance sc;
    sc.universe = detail::expect_int(r, "n");
    bool have_line = r.next();
    bool budget_seen = false;
    while (have_line) {
        std::istringstream ls(r.line);
        std::string key;
        ls >> key;
        if (key == "f") {
            std::vector<int> set;
            std::string tok;
            while (ls >> tok) set.push_back(detail::parse_int(r, "element", tok));
            sc.sets.push_back(std::move(set));
        } else if (key == "l") {
            std::string tok, extra;
            if (!(ls >> tok) || (ls >> extra)) r.fail("expected 'l <budget>'");
            sc.budget = detail::parse_int(r, "budget", tok);
            budget_seen = true;
            if (r.next()) r.fail("unexpected line after 'l'");
            have_line = false;
            break;
        } else {
            r.fail("expected 'f ...' or 'l <budget>', got '" + r.line + "'");
        }
        have_line = r.next();
    }
    if (!budget_seen) throw std::runtime_error("missing 'l' line");
    try {
        sc.validate();
    } catch (const std::invalid_argument& ex) {
        throw std::runtime_error(std::string("invalid set cover instance: ") + ex.what());
    }
    return sc;
}

inline std::string format_set_cover(const SetCoverInstance& sc) {
    std::ostringstream out;
    out << "sc 1\nn " << sc.universe << "\n";
    for (const auto& f : sc.sets) {
        out << 'f';
        for (int e : f) out << ' ' << e;
        out << '\n';
    }
    out << "l " << sc.budget << "\n";
    return out.str();
}

// --- Hamiltonian cycle ------------------------------------------------------

// Backtracking Hamiltonian-cycle search, guarded to n <= 12.  Returns the
// first cycle in lexicographic vertex order (starting at 0) or nullopt.
// Works for directed and undirected graphs.
inline std::optional<std::vector<int>> brute_force_hamiltonian(const Graph& g) {
    int n = g.vertex_count();
    if (n > 12)
        throw BudgetError("hamiltonian brute force limited to 12 vertices, got " +
                              std::to_string(n),
                          std::tgamma(n), 12);
    if (n < 3) return std::nullopt;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const Edge& e : g.edges()) {
        adj[e.tail][e.head] = 1;
        if (!g.is_directed()) adj[e.head][e.tail] = 1;
    }
    std::vector<int> order{0};
    std::vector<char> used(n, 0);
    used[0] = 1;
    auto rec = [&](auto&& self) -> bool {
        if (static_cast<int>(order.size()) == n) return adj[order.back()][0];
        for (int v = 1; v < n; ++v) {
            if (used[v] || !adj[order.back()][v]) continue;
            used[v] = 1;
            order.push_back(v);
            if (self(self)) return true;
            order.pop_back();
            used[v] = 0;
        }
        return false;
    };
    if (!rec(rec)) return std::nullopt;
    return order;
}

}  // namespace rca
