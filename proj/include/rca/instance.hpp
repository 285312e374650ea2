// Problem instances, the instance file format, and solution verification.
//
// An instance asks: do p routes of the given kind from s to t exist that
// collectively share at most k edges?  With a length bound alpha, every route
// must additionally have at most alpha steps.

#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rca/graph.hpp"
#include "rca/route.hpp"

namespace rca {

enum class RouteKind { path, trail, walk };

inline const char* to_string(RouteKind k) {
    switch (k) {
        case RouteKind::path: return "path";
        case RouteKind::trail: return "trail";
        case RouteKind::walk: return "walk";
    }
    return "?";
}

// True if a route classified as `cls` satisfies requirement `kind`
// (path => trail => walk).
inline bool satisfies(RouteClass cls, RouteKind kind) {
    switch (kind) {
        case RouteKind::walk: return cls != RouteClass::invalid;
        case RouteKind::trail:
            return cls == RouteClass::trail || cls == RouteClass::path;
        case RouteKind::path: return cls == RouteClass::path;
    }
    return false;
}

struct Instance {
    Graph graph;
    int s = 0;
    int t = 1;
    int p = 1;
    int k = 0;
    RouteKind kind = RouteKind::walk;
    std::optional<int> alpha;  // per-route length bound; nullopt = unrestricted

    void validate() const {
        int n = graph.vertex_count();
        if (s < 0 || s >= n || t < 0 || t >= n)
            throw std::invalid_argument("terminal out of range");
        if (s == t) throw std::invalid_argument("s and t must differ");
        if (p < 1) throw std::invalid_argument("p must be >= 1");
        if (k < 0) throw std::invalid_argument("k must be >= 0");
        if (alpha && *alpha < 1) throw std::invalid_argument("alpha must be >= 1");
    }
};

// Result of a solver or oracle run.
struct SolveResult {
    bool yes = false;
    std::vector<Route> witness;        // p routes when yes and a witness exists
    EdgeSet shared;                    // shared edges of the witness
    std::optional<int> min_shared;     // oracle runs: exact minimum
    std::string solver_used;           // dispatch label for reporting
    int horizon = 0;                   // time-expansion horizon used (0 = none)
};

// --- verification -----------------------------------------------------------

enum class RejectReason { none, count, endpoint, kind, length, budget };

inline const char* to_string(RejectReason r) {
    switch (r) {
        case RejectReason::none: return "none";
        case RejectReason::count: return "count";
        case RejectReason::endpoint: return "endpoint";
        case RejectReason::kind: return "kind";
        case RejectReason::length: return "length";
        case RejectReason::budget: return "budget";
    }
    return "?";
}

struct VerifyResult {
    bool accepted = false;
    RejectReason reason = RejectReason::none;
    std::string detail;
    EdgeSet shared;  // filled when all routes are valid
};

// Checks a claimed solution against an instance.  Checks run in a fixed
// order — count, endpoints, kind (invalid routes fail here), length, sharing
// budget — so the reported reason is deterministic.
inline VerifyResult verify_solution(const Instance& inst,
                                    const std::vector<Route>& routes) {
    inst.validate();
    VerifyResult res;
    if (static_cast<int>(routes.size()) != inst.p) {
        res.reason = RejectReason::count;
        res.detail = "expected " + std::to_string(inst.p) + " routes, got " +
                     std::to_string(routes.size());
        return res;
    }
    for (size_t i = 0; i < routes.size(); ++i) {
        const Route& r = routes[i];
        if (r.vertices.empty() || r.vertices.front() != inst.s ||
            r.vertices.back() != inst.t) {
            res.reason = RejectReason::endpoint;
            res.detail = "route " + std::to_string(i) + " does not run from " +
                         std::to_string(inst.s) + " to " + std::to_string(inst.t);
            return res;
        }
    }
    for (size_t i = 0; i < routes.size(); ++i) {
        RouteClass cls = classify(inst.graph, routes[i]);
        if (!satisfies(cls, inst.kind)) {
            res.reason = RejectReason::kind;
            res.detail = "route " + std::to_string(i) + " is " +
                         std::string(to_string(cls)) + ", instance requires " +
                         to_string(inst.kind);
            return res;
        }
    }
    if (inst.alpha)
        for (size_t i = 0; i < routes.size(); ++i)
            if (routes[i].length() > *inst.alpha) {
                res.reason = RejectReason::length;
                res.detail = "route " + std::to_string(i) + " has length " +
                             std::to_string(routes[i].length()) +
                             " > alpha = " + std::to_string(*inst.alpha);
                return res;
            }
    res.shared = shared_edges(inst.graph, routes);
    if (res.shared.size() > inst.k) {
        res.reason = RejectReason::budget;
        std::ostringstream d;
        d << res.shared.size() << " shared edges > k = " << inst.k << " (edges:";
        for (int id : res.shared.ids()) d << ' ' << id;
        d << ')';
        res.detail = d.str();
        return res;
    }
    res.accepted = true;
    return res;
}

// --- instance file format ---------------------------------------------------
//
//   rca 1
//   directed | undirected
//   n <vertex count>
//   e <tail> <head>          (one per edge; order defines edge ids)
//   s <id>
//   t <id>
//   p <count>
//   k <budget>
//   kind path|trail|walk
//   alpha <bound> | alpha none
//
// '#' starts a comment anywhere; blank lines are ignored.  Directives must
// appear in the order above.

namespace detail {

struct LineReader {
    std::istringstream in;
    int lineno = 0;
    std::string line;

    explicit LineReader(const std::string& text) : in(text) {}

    // Next non-empty line with comments stripped; false at end of input.
    bool next() {
        while (std::getline(in, line)) {
            ++lineno;
            if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
            std::istringstream probe(line);
            std::string w;
            if (probe >> w) return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
    }
};

inline int parse_int(LineReader& r, const std::string& what, const std::string& tok) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        r.fail("malformed " + what + " '" + tok + "'");
    }
}

// Reads "<key> <int>" from the current line.
inline int expect_int(LineReader& r, const std::string& key) {
    std::istringstream ls(r.line);
    std::string k, v, extra;
    if (!(ls >> k >> v) || k != key || (ls >> extra))
        r.fail("expected '" + key + " <value>', got '" + r.line + "'");
    return parse_int(r, key, v);
}

}  // namespace detail

inline Instance parse_instance(const std::string& text) {
    detail::LineReader r(text);
    if (!r.next()) throw std::runtime_error("empty instance file");
    {
        std::istringstream ls(r.line);
        std::string a, b;
        ls >> a >> b;
        if (a != "rca" || b != "1") r.fail("expected header 'rca 1'");
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
    if (n < 0) r.fail("negative vertex count");
    Graph g = (mode == "directed") ? Graph::directed(n) : Graph::undirected(n);

    // Edge lines, then the fixed scalar block.
    bool have_line = r.next();
    while (have_line) {
        std::istringstream ls(r.line);
        std::string key;
        ls >> key;
        if (key != "e") break;
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra)) r.fail("expected 'e <tail> <head>'");
        int u = detail::parse_int(r, "vertex", a);
        int v = detail::parse_int(r, "vertex", b);
        try {
            g.add_edge(u, v);
        } catch (const std::invalid_argument& ex) {
            r.fail(ex.what());
        }
        have_line = r.next();
    }

    Instance inst;
    inst.graph = std::move(g);
    auto take = [&](const std::string& key) {
        if (!have_line) r.fail("missing '" + key + "' line");
        int v = detail::expect_int(r, key);
        have_line = r.next();
        return v;
    };
    inst.s = take("s");
    inst.t = take("t");
    inst.p = take("p");
    inst.k = take("k");

    if (!have_line) r.fail("missing 'kind' line");
    {
        std::istringstream ls(r.line);
        std::string key, val, extra;
        if (!(ls >> key >> val) || key != "kind" || (ls >> extra))
            r.fail("expected 'kind path|trail|walk'");
        if (val == "path") inst.kind = RouteKind::path;
        else if (val == "trail") inst.kind = RouteKind::trail;
        else if (val == "walk") inst.kind = RouteKind::walk;
        else r.fail("unknown kind '" + val + "'");
        have_line = r.next();
    }
    if (!have_line) r.fail("missing 'alpha' line");
    {
        std::istringstream ls(r.line);
        std::string key, val, extra;
        if (!(ls >> key >> val) || key != "alpha" || (ls >> extra))
            r.fail("expected 'alpha <bound>|none'");
        if (val == "none") inst.alpha = std::nullopt;
        else inst.alpha = detail::parse_int(r, "alpha", val);
        have_line = r.next();
    }
    if (have_line) r.fail("unexpected trailing line '" + r.line + "'");
    try {
        inst.validate();
    } catch (const std::invalid_argument& ex) {
        throw std::runtime_error(std::string("invalid instance: ") + ex.what());
    }
    return inst;
}

inline std::string format_instance(const Instance& inst) {
    std::ostringstream out;
    out << "rca 1\n"
        << (inst.graph.is_directed() ? "directed" : "undirected") << "\n"
        << "n " << inst.graph.vertex_count() << "\n";
    for (const Edge& e : inst.graph.edges())
        out << "e " << e.tail << ' ' << e.head << "\n";
    out << "s " << inst.s << "\n"
        << "t " << inst.t << "\n"
        << "p " << inst.p << "\n"
        << "k " << inst.k << "\n"
        << "kind " << to_string(inst.kind) << "\n";
    if (inst.alpha) out << "alpha " << *inst.alpha << "\n";
    else out << "alpha none\n";
    return out.str();
}

}  // namespace rca
