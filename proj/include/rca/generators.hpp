// Hardness-reduction instance generators.
//
// Each generator turns an instance of a classic NP-hard problem into a
// routing instance whose answer matches, returning the instance together with
// a name map (role -> vertex id) so tests and humans can see the gadget
// structure, plus enough construction metadata to assemble witness routes
// from a solution of the source problem.

#pragma once

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rca/graph.hpp"
#include "rca/instance.hpp"
#include "rca/oracle.hpp"
#include "rca/route.hpp"

namespace rca {

// --- name maps --------------------------------------------------------------

struct NameMap {
    std::vector<std::pair<std::string, int>> entries;  // insertion order

    void add(const std::string& role, int id) { entries.emplace_back(role, id); }

    int lookup(const std::string& role) const {
        for (const auto& [r, id] : entries)
            if (r == role) return id;
        throw std::invalid_argument("name map has no role '" + role + "'");
    }
    bool has(const std::string& role) const {
        for (const auto& [r, id] : entries)
            if (r == role) return true;
        return false;
    }
};

inline std::string format_name_map(const NameMap& nm) {
    std::ostringstream out;
    for (const auto& [role, id] : nm.entries) out << role << ' ' << id << '\n';
    return out.str();
}

inline NameMap parse_name_map(const std::string& text) {
    NameMap nm;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string role, idtok, extra;
        if (!(ls >> role)) continue;
        if (!(ls >> idtok) || (ls >> extra))
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": expected '<role> <id>'");
        try {
            nm.add(role, std::stoi(idtok));
        } catch (...) {
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": malformed id '" + idtok + "'");
        }
    }
    return nm;
}

// --- graph source files -----------------------------------------------------
//
//   graph 1
//   directed | undirected
//   n <count>
//   e <tail> <head>     (one per edge)

inline Graph parse_graph_file(const std::string& text) {
    detail::LineReader r(text);
    if (!r.next()) throw std::runtime_error("empty graph file");
    {
        std::istringstream ls(r.line);
        std::string a, b;
        ls >> a >> b;
        if (a != "graph" || b != "1") r.fail("expected header 'graph 1'");
    }
    if (!r.next()) r.fail("missing directedness line");
    std::string mode;
    {
        std::istringstream ls(r.line);
        ls >> mode;
        if (mode != "directed" && mode != "undirected")
            r.fail("expected 'directed' or 'undirected'");
    }
    if (!r.next()) r.fail("missing 'n' line");
    int n = detail::expect_int(r, "n");
    Graph g = (mode == "directed") ? Graph::directed(n) : Graph::undirected(n);
    while (r.next()) {
        std::istringstream ls(r.line);
        std::string key, a, b, extra;
        if (!(ls >> key >> a >> b) || key != "e" || (ls >> extra))
            r.fail("expected 'e <tail> <head>'");
        try {
            g.add_edge(detail::parse_int(r, "vertex", a), detail::parse_int(r, "vertex", b));
        } catch (const std::invalid_argument& ex) {
            r.fail(ex.what());
        }
    }
    return g;
}

inline std::string format_graph_file(const Graph& g) {
    std::ostringstream out;
    out << "graph 1\n"
        << (g.is_directed() ? "directed" : "undirected") << "\n"
        << "n " << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) out << "e " << e.tail << ' ' << e.head << "\n";
    return out.str();
}

// --- set cover -> walk routing ----------------------------------------------
//
// Universe element i becomes a vertex reached from s by a private chain of
// length l+1; set j becomes a vertex reached by a private chain of length l+2
// and connected to t.  Membership edges run element -> set.  Every s-t walk
// has length exactly l+3 and all p = n+m of them hit their (set, t) edge at
// the same final step, so walks can only avoid colliding there by spreading
// over distinct sets — possible within k = l shared edges iff l sets cover
// the universe.  The undirected variant needs the length bound alpha = l+3 to
// keep walks from dawdling; the directed variant is a DAG and needs none.

struct SetCoverGen {
    Instance instance;
    NameMap names;
    SetCoverInstance source;
    int s = 0, t = 0;
    std::vector<int> elem_ids, set_ids;
    std::vector<std::vector<int>> elem_chain;  // vertex sequence s .. elem i
    std::vector<std::vector<int>> set_chain;   // vertex sequence s .. set j
};

inline SetCoverGen gen_setcover(const SetCoverInstance& sc, bool directed) {
    sc.validate();
    int n = sc.universe;
    int m = static_cast<int>(sc.sets.size());
    int l = sc.budget;
    if (n + m == 0)
        throw std::invalid_argument("gen_setcover: empty universe and family (p >= 1 impossible)");

    SetCoverGen out;
    out.source = sc;
    int total = 2 + n + m + m * (l + 1) + n * l;
    Graph g = directed ? Graph::directed(total) : Graph::undirected(total);

    int next = 0;
    out.s = next++;
    out.names.add("s", out.s);
    for (int i = 0; i < n; ++i) {
        out.elem_ids.push_back(next);
        out.names.add("elem:" + std::to_string(i), next++);
    }
    for (int j = 0; j < m; ++j) {
        out.set_ids.push_back(next);
        out.names.add("set:" + std::to_string(j), next++);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<int> chain{out.s};
        for (int pos = 1; pos <= l; ++pos) {
            out.names.add("chainU:" + std::to_string(i) + ":" + std::to_string(pos), next);
            chain.push_back(next++);
        }
        chain.push_back(out.elem_ids[i]);
        out.elem_chain.push_back(std::move(chain));
    }
    for (int j = 0; j < m; ++j) {
        std::vector<int> chain{out.s};
        for (int pos = 1; pos <= l + 1; ++pos) {
            out.names.add("chainF:" + std::to_string(j) + ":" + std::to_string(pos), next);
            chain.push_back(next++);
        }
        chain.push_back(out.set_ids[j]);
        out.set_chain.push_back(std::move(chain));
    }
    out.t = next++;
    out.names.add("t", out.t);
    if (next != total) throw std::logic_error("gen_setcover: vertex count mismatch");

    for (int i = 0; i < n; ++i)
        for (size_t q = 1; q < out.elem_chain[i].size(); ++q)
            g.add_edge(out.elem_chain[i][q - 1], out.elem_chain[i][q]);
    for (int j = 0; j < m; ++j)
        for (size_t q = 1; q < out.set_chain[j].size(); ++q)
            g.add_edge(out.set_chain[j][q - 1], out.set_chain[j][q]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            if (std::find(sc.sets[j].begin(), sc.sets[j].end(), i) != sc.sets[j].end())
                g.add_edge(out.elem_ids[i], out.set_ids[j]);
    for (int j = 0; j < m; ++j) g.add_edge(out.set_ids[j], out.t);

    out.instance.graph = std::move(g);
    out.instance.s = out.s;
    out.instance.t = out.t;
    out.instance.p = n + m;
    out.instance.k = l;
    out.instance.kind = RouteKind::walk;
    out.instance.alpha = directed ? std::optional<int>() : std::optional<int>(l + 3);
    out.instance.validate();
    return out;
}

// Routes realizing a given cover: one walk per set straight down its chain,
// one walk per element through its lowest covering set in the cover.  Shares
// exactly the (set, t) edges of cover sets that serve at least one element.
inline std::vector<Route> gen_setcover_witness(const SetCoverGen& gen,
                                               const std::vector<int>& cover) {
    const SetCoverInstance& sc = gen.source;
    int m = static_cast<int>(sc.sets.size());
    for (int j : cover)
        if (j < 0 || j >= m)
            throw std::invalid_argument("cover set index " + std::to_string(j) +
                                        " out of range");
    std::vector<Route> routes;
    for (int j = 0; j < m; ++j) {
        std::vector<int> vs = gen.set_chain[j];
        vs.push_back(gen.t);
        routes.push_back(Route::of(std::move(vs)));
    }
    for (int i = 0; i < sc.universe; ++i) {
        int serving = -1;
        for (int j : cover)
            if (std::find(sc.sets[j].begin(), sc.sets[j].end(), i) != sc.sets[j].end()) {
                if (serving < 0 || j < serving) serving = j;
            }
        if (serving < 0)
            throw std::invalid_argument("cover does not cover element " +
                                        std::to_string(i));
        std::vector<int> vs = gen.elem_chain[i];
        vs.push_back(gen.set_ids[serving]);
        vs.push_back(gen.t);
        routes.push_back(Route::of(std::move(vs)));
    }
    return routes;
}

// --- shared validation for cubic inputs -------------------------------------

namespace detail {

inline void require_cubic_simple(const Graph& g, const char* who) {
    if (g.is_directed())
        throw std::invalid_argument(std::string(who) + ": input must be undirected");
    int n = g.vertex_count();
    if (n < 4) throw std::invalid_argument(std::string(who) + ": need at least 4 vertices");
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 3)
            throw std::invalid_argument(std::string(who) + ": vertex " +
                                        std::to_string(v) + " has degree " +
                                        std::to_string(g.degree(v)) + ", expected 3");
    std::vector<std::pair<int, int>> seen;
    for (const Edge& e : g.edges()) seen.emplace_back(e.tail, e.head);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument(std::string(who) + ": input must be simple");
}

// A claimed Hamiltonian cycle must visit every base vertex exactly once.
inline void require_cycle_cover(const std::vector<int>& cycle, int n) {
    if (static_cast<int>(cycle.size()) != n)
        throw std::invalid_argument("cycle must list all base vertices");
    std::vector<char> seen(n, 0);
    for (int v : cycle) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument(
                "cycle must visit every base vertex exactly once");
        seen[v] = 1;
    }
}

}  // namespace detail

// --- cubic planar Hamiltonicity -> path routing -----------------------------
//
// A copy of the cubic graph hangs between v (wired to x1) and w (wired to x2
// and x3); n-2 chains of lengths 4..n+1 also run from s to w.  p = n-1 paths
// with zero sharing must put one long path through the copy — possible iff
// the copy has a Hamiltonian cycle through x1 arriving at x2 or x3.  The
// padding flag appends a chain of length pad at s (fresh source): all p paths
// cross it simultaneously, consuming exactly pad shared edges, which restates
// the question at k = pad.  The directed flag orients chains s->w, doubles
// every copy edge into antiparallel arcs, and orients the wiring arcs toward t.

struct PCHCPathGen {
    Instance instance;
    NameMap names;
    Graph source;
    bool directed = false;
    int pad = 0;
    int base_n = 0;
    int s = 0, v = 0, w = 0, t = 0, x1 = 0, x2 = 0, x3 = 0;
    int src = 0;                            // padded source (== s when pad == 0)
    std::vector<std::vector<int>> chains;   // vertex sequences s .. w
    std::vector<int> pad_chain;             // vertex sequence src .. s (empty if pad == 0)
};

inline PCHCPathGen gen_pchc_path(const Graph& g, int x1 = 0, int x2 = -1, int x3 = -1,
                                 int pad = 0, bool directed = false) {
    detail::require_cubic_simple(g, "gen_pchc_path");
    if (pad < 0) throw std::invalid_argument("gen_pchc_path: pad must be >= 0");
    int n = g.vertex_count();
    if (x1 < 0 || x1 >= n) throw std::invalid_argument("gen_pchc_path: x1 out of range");
    std::vector<int> nbrs;
    for (int id : g.incident(x1)) {
        const Edge& e = g.edge(id);
        nbrs.push_back(e.tail == x1 ? e.head : e.tail);
    }
    std::sort(nbrs.begin(), nbrs.end());
    if (x2 < 0) x2 = nbrs[0];
    if (x3 < 0) x3 = nbrs[1];
    auto is_nbr = [&](int y) {
        return std::find(nbrs.begin(), nbrs.end(), y) != nbrs.end();
    };
    if (x2 == x3 || !is_nbr(x2) || !is_nbr(x3))
        throw std::invalid_argument(
            "gen_pchc_path: x2 and x3 must be distinct neighbors of x1");

    PCHCPathGen out;
    out.source = g;
    out.directed = directed;
    out.pad = pad;
    out.base_n = n;
    out.x1 = x1;
    out.x2 = x2;
    out.x3 = x3;

    int total = n + 4;
    for (int len = 4; len <= n + 1; ++len) total += len - 1;
    if (pad > 0) total += pad;  // pad-1 internals + fresh source

    Graph h = directed ? Graph::directed(total) : Graph::undirected(total);
    int next = 0;
    for (int i = 0; i < n; ++i) out.names.add("copy:" + std::to_string(i), next++);
    out.s = next++;
    out.v = next++;
    out.w = next++;
    out.t = next++;
    out.names.add("s", out.s);
    out.names.add("v", out.v);
    out.names.add("w", out.w);
    out.names.add("t", out.t);
    for (int len = 4; len <= n + 1; ++len) {
        std::vector<int> chain{out.s};
        for (int pos = 1; pos <= len - 1; ++pos) {
            out.names.add("chain:" + std::to_string(len) + ":" + std::to_string(pos), next);
            chain.push_back(next++);
        }
        chain.push_back(out.w);
        out.chains.push_back(std::move(chain));
    }
    out.src = out.s;
    if (pad > 0) {
        out.pad_chain.clear();
        out.src = next++;
        out.names.add("src", out.src);
        out.pad_chain.push_back(out.src);
        for (int pos = 1; pos <= pad - 1; ++pos) {
            out.names.add("pad:" + std::to_string(pos), next);
            out.pad_chain.push_back(next++);
        }
        out.pad_chain.push_back(out.s);
    }
    if (next != total) throw std::logic_error("gen_pchc_path: vertex count mismatch");

    for (const Edge& e : g.edges()) {
        h.add_edge(e.tail, e.head);
        if (directed) h.add_edge(e.head, e.tail);
    }
    h.add_edge(out.s, out.v);
    h.add_edge(out.v, x1);
    h.add_edge(x2, out.w);
    h.add_edge(x3, out.w);
    h.add_edge(out.w, out.t);
    for (const auto& chain : out.chains)
        for (size_t q = 1; q < chain.size(); ++q) h.add_edge(chain[q - 1], chain[q]);
    for (size_t q = 1; q < out.pad_chain.size(); ++q)
        h.add_edge(out.pad_chain[q - 1], out.pad_chain[q]);

    out.instance.graph = std::move(h);
    out.instance.s = out.src;
    out.instance.t = out.t;
    out.instance.p = n - 1;
    out.instance.k = pad;
    out.instance.kind = RouteKind::path;
    out.instance.alpha = std::nullopt;
    out.instance.validate();
    return out;
}

// Paths realizing a Hamiltonian cycle of the source graph (given as a vertex
// order): one path per chain, plus the long path s,v,x1,<cycle>,w,t oriented
// so its last copy vertex is x2 or x3.  With padding, every path starts with
// the pad chain.
inline std::vector<Route> gen_pchc_path_witness(const PCHCPathGen& gen,
                                                const std::vector<int>& cycle) {
    int n = gen.base_n;
    detail::require_cycle_cover(cycle, n);
    // Rotate so the cycle starts at x1.
    auto it = std::find(cycle.begin(), cycle.end(), gen.x1);
    if (it == cycle.end()) throw std::invalid_argument("cycle does not contain x1");
    std::vector<int> rot(it, cycle.end());
    rot.insert(rot.end(), cycle.begin(), it);
    // Orient so the final vertex is wired to w.
    auto qualifies = [&](int y) { return y == gen.x2 || y == gen.x3; };
    if (!qualifies(rot.back())) {
        if (!qualifies(rot[1]))
            throw std::invalid_argument("cycle never leaves x1 toward x2/x3");
        std::reverse(rot.begin() + 1, rot.end());
    }

    std::vector<Route> routes;
    auto with_pad = [&](std::vector<int> vs) {
        if (gen.pad > 0) {
            std::vector<int> full = gen.pad_chain;
            full.insert(full.end(), vs.begin() + 1, vs.end());  // vs starts at s
            return Route::of(std::move(full));
        }
        return Route::of(std::move(vs));
    };
    for (const auto& chain : gen.chains) {
        std::vector<int> vs = chain;
        vs.push_back(gen.t);
        routes.push_back(with_pad(std::move(vs)));
    }
    std::vector<int> vs{gen.s, gen.v};
    vs.insert(vs.end(), rot.begin(), rot.end());
    vs.push_back(gen.w);
    vs.push_back(gen.t);
    routes.push_back(with_pad(std::move(vs)));
    return routes;
}

// --- cubic planar Hamiltonicity -> trail routing (undirected) ---------------
//
// The copy is the once-subdivided cubic graph (its Hamiltonian cycles have
// length 2n), wired s-x, s-v, v-w, w-t, x-w; n-1 extra vertices b_i hang off
// s by parallel edge pairs so that trails can burn time bouncing s-b_i-s on
// distinct copies.  p = 2n trails with zero sharing exist iff the source has
// a Hamiltonian cycle: n trails filter through v, n more traverse the
// subdivided cycle via x.  The raw gadget has parallel edges; subdividing
// every edge into a 3-path (subdivide3) restores simplicity without changing
// the answer, and is what the emitted instance contains.

struct PCHCTrailGen {
    Instance instance;  // subdivided, simple
    NameMap names;
    Graph source;       // the cubic input
    Graph pre;          // gadget before subdivide3 (has parallel edges)
    std::vector<std::array<int, 2>> internals;  // subdivide3 map: pre edge -> 2 vertices
    int base_n = 0;
    int s = 0, v = 0, w = 0, t = 0, x = 0;
    std::vector<int> sub_of_edge;               // source edge -> subdivision vertex (pre ids)
    std::vector<int> b_ids;                     // b_1..b_{n-1} (pre ids)
    std::vector<std::array<int, 2>> b_edges;    // per b: its two parallel pre edge ids
    int e_sx = 0, e_sv = 0, e_vw = 0, e_wt = 0, e_xw = 0;  // pre edge ids
};

inline PCHCTrailGen gen_pchc_trail(const Graph& g, int x = 0) {
    detail::require_cubic_simple(g, "gen_pchc_trail");
    int n = g.vertex_count();
    int mg = g.edge_count();
    if (x < 0 || x >= n)
        throw std::invalid_argument("gen_pchc_trail: x must be a source-graph vertex");

    PCHCTrailGen out;
    out.source = g;
    out.base_n = n;
    out.x = x;

    int total = n + mg + 4 + (n - 1);
    Graph pre = Graph::undirected(total);
    int next = 0;
    for (int i = 0; i < n; ++i) out.names.add("copy:" + std::to_string(i), next++);
    for (int e = 0; e < mg; ++e) {
        out.sub_of_edge.push_back(next);
        out.names.add("sub:" + std::to_string(e), next++);
    }
    out.s = next++;
    out.v = next++;
    out.w = next++;
    out.t = next++;
    out.names.add("s", out.s);
    out.names.add("v", out.v);
    out.names.add("w", out.w);
    out.names.add("t", out.t);
    for (int i = 1; i <= n - 1; ++i) {
        out.b_ids.push_back(next);
        out.names.add("b:" + std::to_string(i), next++);
    }
    if (next != total) throw std::logic_error("gen_pchc_trail: vertex count mismatch");

    for (int e = 0; e < mg; ++e) {
        pre.add_edge(g.edge(e).tail, out.sub_of_edge[e]);
        pre.add_edge(out.sub_of_edge[e], g.edge(e).head);
    }
    out.e_sx = pre.add_edge(out.s, x);
    out.e_sv = pre.add_edge(out.s, out.v);
    out.e_vw = pre.add_edge(out.v, out.w);
    out.e_wt = pre.add_edge(out.w, out.t);
    out.e_xw = pre.add_edge(x, out.w);
    for (int i = 0; i < n - 1; ++i) {
        int a = pre.add_edge(out.s, out.b_ids[i]);
        int b = pre.add_edge(out.s, out.b_ids[i]);
        out.b_edges.push_back({a, b});
    }

    Subdivide3Result sub = subdivide3(pre);
    for (int e = 0; e < pre.edge_count(); ++e) {
        out.names.add("mid:" + std::to_string(e) + ":1", sub.internals[e][0]);
        out.names.add("mid:" + std::to_string(e) + ":2", sub.internals[e][1]);
    }
    out.pre = std::move(pre);
    out.internals = std::move(sub.internals);

    out.instance.graph = std::move(sub.graph);
    out.instance.s = out.s;
    out.instance.t = out.t;
    out.instance.p = 2 * n;
    out.instance.k = 0;
    out.instance.kind = RouteKind::trail;
    out.instance.alpha = std::nullopt;
    out.instance.validate();
    return out;
}

namespace detail {

// Expands a route on a pre-subdivision graph into the subdivide3 output:
// every step u -> v over pinned edge e becomes u -> a -> b -> v (internals in
// traversal direction).  All steps must be pinned.
inline Route expand_through_subdivide3(const Graph& pre, const Route& r,
                                       const std::vector<std::array<int, 2>>& internals) {
    Route out;
    out.vertices.push_back(r.vertices.front());
    for (size_t i = 1; i < r.vertices.size(); ++i) {
        int u = r.vertices[i - 1], vtx = r.vertices[i];
        int e = r.pinned[i - 1];
        if (e < 0) throw std::invalid_argument("expand_through_subdivide3: unpinned step");
        int a = internals[e][0], b = internals[e][1];
        if (pre.edge(e).tail != u) std::swap(a, b);  // traversed head -> tail
        out.vertices.push_back(a);
        out.vertices.push_back(b);
        out.vertices.push_back(vtx);
        out.pinned.push_back(-1);
        out.pinned.push_back(-1);
        out.pinned.push_back(-1);
    }
    return out;
}

}  // namespace detail

// Trails realizing a Hamiltonian cycle (vertex order on the source graph).
// Group-1 trail j (j = 1..n) bounces s-b_j-s .. s-b_{n-1}-s then runs
// s,v,w,t; group-2 trail j bounces the same vertices with the parallel copies
// in the opposite order, then runs s,x,<subdivided cycle>,x,w,t.  The bounce
// ladder staggers arrival times so no two trails use an edge simultaneously.
inline std::vector<Route> gen_pchc_trail_witness(const PCHCTrailGen& gen,
                                                 const std::vector<int>& cycle) {
    int n = gen.base_n;
    const Graph& g = gen.source;
    detail::require_cycle_cover(cycle, n);
    auto it = std::find(cycle.begin(), cycle.end(), gen.x);
    if (it == cycle.end()) throw std::invalid_argument("cycle does not contain x");
    std::vector<int> rot(it, cycle.end());
    rot.insert(rot.end(), cycle.begin(), it);

    // The cycle in the once-subdivided copy: original vertices interleaved
    // with the subdivision vertex of each traversed edge.
    std::vector<std::pair<int, int>> cyc;  // (vertex, pinned pre-edge to it)
    {
        auto edge_between = [&](int a, int b) {
            int id = g.find_edge(a, b);
            if (id < 0)
                throw std::invalid_argument("cycle uses nonexistent edge " +
                                            std::to_string(a) + "-" + std::to_string(b));
            return id;
        };
        for (int i = 0; i < n; ++i) {
            int a = rot[i], b = rot[(i + 1) % n];
            int e = edge_between(a, b);
            int subv = gen.sub_of_edge[e];
            // pre-graph edge ids: source edge e maps to pre edges 2e (tail-sub)
            // and 2e+1 (sub-head).
            int first = (g.edge(e).tail == a) ? 2 * e : 2 * e + 1;
            int second = (g.edge(e).tail == a) ? 2 * e + 1 : 2 * e;
            cyc.emplace_back(subv, first);
            cyc.emplace_back(b, second);
        }
    }

    auto bounce_ladder = [&](int j, bool swap_copies, Route& r) {
        // Visit b_j .. b_{n-1} (1-based), each out on one parallel copy and
        // back on the other.
        for (int i = j; i <= n - 1; ++i) {
            const auto& pair = gen.b_edges[i - 1];
            int out_copy = swap_copies ? pair[1] : pair[0];
            int back_copy = swap_copies ? pair[0] : pair[1];
            r.vertices.push_back(gen.b_ids[i - 1]);
            r.pinned.push_back(out_copy);
            r.vertices.push_back(gen.s);
            r.pinned.push_back(back_copy);
        }
    };

    std::vector<Route> pre_routes;
    for (int j = 1; j <= n; ++j) {  // group 1: via v
        Route r;
        r.vertices.push_back(gen.s);
        bounce_ladder(j, false, r);
        r.vertices.push_back(gen.v);
        r.pinned.push_back(gen.e_sv);
        r.vertices.push_back(gen.w);
        r.pinned.push_back(gen.e_vw);
        r.vertices.push_back(gen.t);
        r.pinned.push_back(gen.e_wt);
        pre_routes.push_back(std::move(r));
    }
    for (int j = 1; j <= n; ++j) {  // group 2: via x around the cycle
        Route r;
        r.vertices.push_back(gen.s);
        bounce_ladder(j, true, r);
        r.vertices.push_back(gen.x);
        r.pinned.push_back(gen.e_sx);
        for (const auto& [vtx, pin] : cyc) {
            r.vertices.push_back(vtx);
            r.pinned.push_back(pin);
        }
        r.vertices.push_back(gen.w);
        r.pinned.push_back(gen.e_xw);
        r.vertices.push_back(gen.t);
        r.pinned.push_back(gen.e_wt);
        pre_routes.push_back(std::move(r));
    }

    std::vector<Route> routes;
    for (const Route& r : pre_routes)
        routes.push_back(detail::expand_through_subdivide3(gen.pre, r, gen.internals));
    return routes;
}

// --- degree-bounded directed Hamiltonicity -> trail routing -----------------
//
// Directed counterpart of the trail construction, for directed graphs with
// in- and out-degree at most 2 and total degree at most 3.  The copy hangs on
// the spine s -> v -> x -> w -> t; n chains of lengths 3..n+2 run s -> w.
// p = n+1 zero-shared trails need one trail through the copy, which must
// traverse a directed Hamiltonian cycle from x.  Already simple: no
// subdivision needed.

struct DP23HCTrailGen {
    Instance instance;
    NameMap names;
    Graph source;
    int base_n = 0;
    int s = 0, v = 0, w = 0, t = 0, x = 0;
    std::vector<std::vector<int>> chains;  // vertex sequences s .. w
};

inline DP23HCTrailGen gen_dp23hc_trail(const Graph& g) {
    if (!g.is_directed())
        throw std::invalid_argument("gen_dp23hc_trail: input must be directed");
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("gen_dp23hc_trail: empty input");
    std::vector<int> outd(n, 0), ind(n, 0);
    for (const Edge& e : g.edges()) {
        outd[e.tail]++;
        ind[e.head]++;
    }
    for (int u = 0; u < n; ++u) {
        if (outd[u] > 2 || ind[u] > 2)
            throw std::invalid_argument("gen_dp23hc_trail: vertex " + std::to_string(u) +
                                        " has in- or out-degree above 2");
        if (outd[u] + ind[u] > 3)
            throw std::invalid_argument("gen_dp23hc_trail: vertex " + std::to_string(u) +
                                        " has total degree above 3");
    }

    DP23HCTrailGen out;
    out.source = g;
    out.base_n = n;
    out.x = 0;

    int total = n + 4;
    for (int len = 3; len <= n + 2; ++len) total += len - 1;
    Graph h = Graph::directed(total);
    int next = 0;
    for (int i = 0; i < n; ++i) out.names.add("copy:" + std::to_string(i), next++);
    out.s = next++;
    out.v = next++;
    out.w = next++;
    out.t = next++;
    out.names.add("s", out.s);
    out.names.add("v", out.v);
    out.names.add("w", out.w);
    out.names.add("t", out.t);
    for (int len = 3; len <= n + 2; ++len) {
        std::vector<int> chain{out.s};
        for (int pos = 1; pos <= len - 1; ++pos) {
            out.names.add("chain:" + std::to_string(len) + ":" + std::to_string(pos), next);
            chain.push_back(next++);
        }
        chain.push_back(out.w);
        out.chains.push_back(std::move(chain));
    }
    if (next != total) throw std::logic_error("gen_dp23hc_trail: vertex count mismatch");

    for (const Edge& e : g.edges()) h.add_edge(e.tail, e.head);
    h.add_edge(out.s, out.v);
    h.add_edge(out.v, out.x);
    h.add_edge(out.x, out.w);
    h.add_edge(out.w, out.t);
    for (const auto& chain : out.chains)
        for (size_t q = 1; q < chain.size(); ++q) h.add_edge(chain[q - 1], chain[q]);

    out.instance.graph = std::move(h);
    out.instance.s = out.s;
    out.instance.t = out.t;
    out.instance.p = n + 1;
    out.instance.k = 0;
    out.instance.kind = RouteKind::trail;
    out.instance.alpha = std::nullopt;
    out.instance.validate();
    return out;
}

// Trails realizing a directed Hamiltonian cycle: one trail per chain, plus
// s,v,x,<cycle back to x>,w,t.
inline std::vector<Route> gen_dp23hc_trail_witness(const DP23HCTrailGen& gen,
                                                   const std::vector<int>& cycle) {
    int n = gen.base_n;
    detail::require_cycle_cover(cycle, n);
    auto it = std::find(cycle.begin(), cycle.end(), gen.x);
    if (it == cycle.end()) throw std::invalid_argument("cycle does not contain x");
    std::vector<int> rot(it, cycle.end());
    rot.insert(rot.end(), cycle.begin(), it);

    std::vector<Route> routes;
    for (const auto& chain : gen.chains) {
        std::vector<int> vs = chain;
        vs.push_back(gen.t);
        routes.push_back(Route::of(std::move(vs)));
    }
    std::vector<int> vs{gen.s, gen.v};
    vs.insert(vs.end(), rot.begin(), rot.end());
    vs.push_back(gen.x);
    vs.push_back(gen.w);
    vs.push_back(gen.t);
    routes.push_back(Route::of(std::move(vs)));
    return routes;
}

}  // namespace rca
