// Routes and collision semantics.
//
// A route is a timed vertex sequence: step i (1-based) moves along an edge
// from vertices[i-1] to vertices[i] at time i.  Each step may pin a specific
// parallel copy (edge id); unpinned steps resolve to the lowest-id copy.  Two
// routes share an edge when they traverse the *same copy* at the *same step*
// (for undirected edges, either direction).  Sharing is counted with set
// semantics over edge ids.

#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rca/graph.hpp"

namespace rca {

struct Route {
    std::vector<int> vertices;  // at least the start vertex
    std::vector<int> pinned;    // per step: edge id or -1; size vertices.size()-1

    int length() const { return static_cast<int>(vertices.size()) - 1; }

    static Route of(std::vector<int> vs) {
        Route r;
        r.pinned.assign(vs.empty() ? 0 : vs.size() - 1, -1);
        r.vertices = std::move(vs);
        return r;
    }

    bool operator==(const Route& o) const {
        return vertices == o.vertices && pinned == o.pinned;
    }
};

enum class RouteClass { invalid, walk, trail, path };

inline const char* to_string(RouteClass c) {
    switch (c) {
        case RouteClass::invalid: return "invalid";
        case RouteClass::walk: return "walk";
        case RouteClass::trail: return "trail";
        case RouteClass::path: return "path";
    }
    return "?";
}

// Resolves each step of the route to a concrete edge id.  Returns false (and
// a diagnostic) if some step has no usable edge or a pin does not fit.
inline bool resolve_route(const Graph& g, const Route& r,
                          std::vector<int>* out, std::string* why = nullptr) {
    out->clear();
    if (r.vertices.empty()) {
        if (why) *why = "route has no vertices";
        return false;
    }
    if (r.pinned.size() != r.vertices.size() - 1) {
        if (why) *why = "pin list size does not match step count";
        return false;
    }
    for (int v : r.vertices)
        if (v < 0 || v >= g.vertex_count()) {
            if (why) *why = "vertex " + std::to_string(v) + " out of range";
            return false;
        }
    for (size_t i = 1; i < r.vertices.size(); ++i) {
        int u = r.vertices[i - 1], v = r.vertices[i];
        int pin = r.pinned[i - 1];
        int id;
        if (pin >= 0) {
            if (pin >= g.edge_count() || !g.connects(pin, u, v)) {
                if (why)
                    *why = "step " + std::to_string(i) + ": pinned edge " +
                           std::to_string(pin) + " does not join " +
                           std::to_string(u) + " and " + std::to_string(v);
                return false;
            }
            id = pin;
        } else {
            id = g.find_edge(u, v);
            if (id < 0) {
                if (why)
                    *why = "step " + std::to_string(i) + ": no edge from " +
                           std::to_string(u) + " to " + std::to_string(v);
                return false;
            }
        }
        out->push_back(id);
    }
    return true;
}

// Classifies a route: path (all vertices distinct), trail (some assignment of
// parallel copies makes all traversed copies distinct), walk (merely valid),
// or invalid.  Pinned steps constrain the copy assignment; unpinned steps of
// a trail may use any copy, so trail-feasibility per endpoint pair reduces to
// "steps on this pair <= copy count, and pins pairwise distinct".
inline RouteClass classify(const Graph& g, const Route& r) {
    std::vector<int> resolved;
    if (!resolve_route(g, r, &resolved)) return RouteClass::invalid;

    bool vertices_distinct = true;
    {
        std::vector<int> vs = r.vertices;
        std::sort(vs.begin(), vs.end());
        vertices_distinct = std::adjacent_find(vs.begin(), vs.end()) == vs.end();
    }
    if (vertices_distinct) return RouteClass::path;

    // Group steps by endpoint pair (ordered for directed, canonical for
    // undirected; parallel copies of a pair are interchangeable up to pins).
    std::map<std::pair<int, int>, std::pair<int, std::vector<int>>> groups;
    for (size_t i = 1; i < r.vertices.size(); ++i) {
        int u = r.vertices[i - 1], v = r.vertices[i];
        std::pair<int, int> key =
            g.is_directed() ? std::make_pair(u, v)
                            : std::make_pair(std::min(u, v), std::max(u, v));
        auto& grp = groups[key];
        grp.first++;
        if (r.pinned[i - 1] >= 0) grp.second.push_back(r.pinned[i - 1]);
    }
    bool trail = true;
    for (auto& [key, grp] : groups) {
        int copies = static_cast<int>(g.edges_between(key.first, key.second).size());
        auto& pins = grp.second;
        std::sort(pins.begin(), pins.end());
        if (std::adjacent_find(pins.begin(), pins.end()) != pins.end() ||
            grp.first > copies) {
            trail = false;
            break;
        }
    }
    return trail ? RouteClass::trail : RouteClass::walk;
}

// Set of edge ids traversed (same copy) by two or more routes at the same
// step.  Routes are a list: identical routes at two positions collide with
// each other.  Throws if any route is invalid, identifying which.
inline EdgeSet shared_edges(const Graph& g, const std::vector<Route>& routes) {
    std::vector<std::vector<int>> resolved(routes.size());
    for (size_t i = 0; i < routes.size(); ++i) {
        std::string why;
        if (!resolve_route(g, routes[i], &resolved[i], &why))
            throw std::invalid_argument("route " + std::to_string(i) +
                                        " invalid: " + why);
    }
    EdgeSet shared;
    std::map<std::pair<int, int>, int> seen;  // (step, edge id) -> count
    for (size_t i = 0; i < routes.size(); ++i)
        for (size_t s = 0; s < resolved[i].size(); ++s)
            if (++seen[{static_cast<int>(s), resolved[i][s]}] == 2)
                shared.insert(resolved[i][s]);
    return shared;
}

// --- route file format ------------------------------------------------------
//
// One route per line: space-separated vertex ids, each id after the first
// optionally suffixed with @<edge-id> to pin the copy used by the step ending
// at that vertex.  '#' starts a comment; blank lines are skipped.

inline std::vector<Route> parse_routes(const std::string& text) {
    std::vector<Route> routes;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string tok;
        Route r;
        while (ls >> tok) {
            std::string vpart = tok, epart;
            if (auto at = tok.find('@'); at != std::string::npos) {
                vpart = tok.substr(0, at);
                epart = tok.substr(at + 1);
            }
            try {
                size_t used = 0;
                int v = std::stoi(vpart, &used);
                if (used != vpart.size() || v < 0) throw std::invalid_argument("");
                r.vertices.push_back(v);
                if (!epart.empty()) {
                    if (r.vertices.size() == 1)
                        throw std::runtime_error(
                            "line " + std::to_string(lineno) +
                            ": @ annotation on first vertex (no step ends there)");
                    int e = std::stoi(epart, &used);
                    if (used != epart.size() || e < 0) throw std::invalid_argument("");
                    r.pinned.push_back(e);
                } else if (r.vertices.size() > 1) {
                    r.pinned.push_back(-1);
                }
            } catch (const std::invalid_argument&) {
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": malformed token '" + tok + "'");
            } catch (const std::out_of_range&) {
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": number out of range in '" + tok + "'");
            }
        }
        if (!r.vertices.empty()) routes.push_back(std::move(r));
    }
    return routes;
}

// Emits a route in the file format.  A pin is written only when it deviates
// from the default (lowest-id) resolution, so output round-trips bit-exactly
// through parse_routes + resolve_route.
inline std::string format_route(const Graph& g, const Route& r) {
    std::ostringstream out;
    for (size_t i = 0; i < r.vertices.size(); ++i) {
        if (i) out << ' ';
        out << r.vertices[i];
        if (i > 0 && r.pinned[i - 1] >= 0 &&
            r.pinned[i - 1] != g.find_edge(r.vertices[i - 1], r.vertices[i]))
            out << '@' << r.pinned[i - 1];
    }
    return out.str();
}

inline std::string format_routes(const Graph& g, const std::vector<Route>& routes) {
    std::string out;
    for (const Route& r : routes) {
        out += format_route(g, r);
        out += '\n';
    }
    return out;
}

}  // namespace rca
