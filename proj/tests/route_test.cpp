#include <catch2/catch_amalgamated.hpp>

#include "rca/graph.hpp"
#include "rca/route.hpp"

using namespace rca;

namespace {

Graph triangle_with_tail() {
    // 0 - 1 - 2 - 0 plus pendant 2 - 3, undirected simple.
    Graph g = Graph::undirected(4);
    g.add_edge(0, 1);  // 0
    g.add_edge(1, 2);  // 1
    g.add_edge(0, 2);  // 2
    g.add_edge(2, 3);  // 3
    return g;
}

}  // namespace

TEST_CASE("resolve_route picks lowest copy unless pinned") {
    Graph g = Graph::undirected(2);
    g.add_edge(0, 1);  // copy 0
    g.add_edge(0, 1);  // copy 1
    std::vector<int> ids;

    Route r = Route::of({0, 1, 0});
    REQUIRE(resolve_route(g, r, &ids));
    CHECK(ids == std::vector<int>{0, 0});

    r.pinned = {1, 0};
    REQUIRE(resolve_route(g, r, &ids));
    CHECK(ids == std::vector<int>{1, 0});

    std::string why;
    r.pinned = {2, 0};  // edge 2 does not exist
    CHECK_FALSE(resolve_route(g, r, &ids, &why));
    CHECK(why.find("step 1") != std::string::npos);

    Route gap = Route::of({0, 1});
    Graph h = Graph::directed(2);
    CHECK_FALSE(resolve_route(h, gap, &ids, &why));
    CHECK(why.find("no edge") != std::string::npos);
}

TEST_CASE("classify: path, trail, walk, invalid") {
    Graph g = triangle_with_tail();

    CHECK(classify(g, Route::of({0, 1, 2, 3})) == RouteClass::path);
    CHECK(classify(g, Route::of({0})) == RouteClass::path);
    // Closed triangle: revisits vertex 0 but each edge once.
    CHECK(classify(g, Route::of({0, 1, 2, 0})) == RouteClass::trail);
    // Backtracking reuses the single copy of {0,1}.
    CHECK(classify(g, Route::of({0, 1, 0})) == RouteClass::walk);
    // Step with no edge.
    CHECK(classify(g, Route::of({0, 3})) == RouteClass::invalid);
    CHECK(classify(g, Route::of({})) == RouteClass::invalid);
}

TEST_CASE("classify with parallel copies consults the copy pool") {
    Graph g = Graph::undirected(2);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    // Two steps over the pair {0,1}, two copies available: a trail exists.
    CHECK(classify(g, Route::of({0, 1, 0})) == RouteClass::trail);
    // Three steps cannot use three distinct copies.
    CHECK(classify(g, Route::of({0, 1, 0, 1})) == RouteClass::walk);
    // Pinning both steps to the same copy forces a walk.
    Route pinned = Route::of({0, 1, 0});
    pinned.pinned = {0, 0};
    CHECK(classify(g, pinned) == RouteClass::walk);
    // Distinct pins keep it a trail.
    pinned.pinned = {0, 1};
    CHECK(classify(g, pinned) == RouteClass::trail);
}

TEST_CASE("directed classification distinguishes arc directions") {
    Graph g = Graph::directed(2);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    // Uses arc (0,1) then arc (1,0): different pairs, a trail.
    CHECK(classify(g, Route::of({0, 1, 0})) == RouteClass::trail);
    // Reusing arc (0,1) twice is only a walk.
    CHECK(classify(g, Route::of({0, 1, 0, 1})) == RouteClass::walk);
}

TEST_CASE("shared_edges counts same copy at same step") {
    Graph g = triangle_with_tail();
    // Same route twice: every step collides.
    auto shared = shared_edges(g, {Route::of({0, 1, 2}), Route::of({0, 1, 2})});
    CHECK(shared.ids() == std::vector<int>{0, 1});
    // Different first steps, both reach 2 at step 2 via different edges.
    shared = shared_edges(g, {Route::of({0, 1, 2}), Route::of({0, 2, 3})});
    CHECK(shared.empty());
    // Same edge at different steps is not a collision.
    shared = shared_edges(g, {Route::of({0, 1, 2}), Route::of({2, 1, 0})});
    CHECK(shared.empty());
    // Three routes over one edge still report it once.
    shared = shared_edges(
        g, {Route::of({0, 1}), Route::of({0, 1}), Route::of({0, 1})});
    CHECK(shared.ids() == std::vector<int>{0});
}

TEST_CASE("opposite directions over one undirected edge at the same step collide") {
    Graph g = Graph::undirected(2);
    g.add_edge(0, 1);
    auto shared = shared_edges(g, {Route::of({0, 1}), Route::of({1, 0})});
    CHECK(shared.ids() == std::vector<int>{0});
}

TEST_CASE("parallel copies separate traffic unless pinned together") {
    Graph g = Graph::undirected(2);
    g.add_edge(0, 1);  // copy 0
    g.add_edge(0, 1);  // copy 1
    Route a = Route::of({0, 1});
    Route b = Route::of({0, 1});
    // Default resolution funnels both onto copy 0.
    CHECK(shared_edges(g, {a, b}).ids() == std::vector<int>{0});
    b.pinned = {1};
    CHECK(shared_edges(g, {a, b}).empty());
}

TEST_CASE("shared_edges rejects invalid routes, naming the culprit") {
    Graph g = Graph::directed(2);
    g.add_edge(0, 1);
    CHECK_THROWS_WITH(shared_edges(g, {Route::of({0, 1}), Route::of({1, 0})}),
                      Catch::Matchers::ContainsSubstring("route 1"));
}

TEST_CASE("parse_routes: pins, comments, errors") {
    auto routes = parse_routes("0 1 2\n\n# a comment\n0 2@2 1 # trailing\n");
    REQUIRE(routes.size() == 2);
    CHECK(routes[0].vertices == std::vector<int>{0, 1, 2});
    CHECK(routes[0].pinned == std::vector<int>{-1, -1});
    CHECK(routes[1].vertices == std::vector<int>{0, 2, 1});
    CHECK(routes[1].pinned == std::vector<int>{2, -1});

    CHECK(parse_routes("").empty());
    CHECK_THROWS_WITH(parse_routes("0 1\nx 1\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_routes("0@1 1\n"),
                      Catch::Matchers::ContainsSubstring("first vertex"));
    CHECK_THROWS_WITH(parse_routes("0 -1\n"),
                      Catch::Matchers::ContainsSubstring("malformed"));
}

TEST_CASE("format_route emits pins only when they deviate from the default") {
    Graph g = Graph::undirected(2);
    g.add_edge(0, 1);  // copy 0
    g.add_edge(0, 1);  // copy 1

    Route r = Route::of({0, 1, 0});
    r.pinned = {0, 1};
    CHECK(format_route(g, r) == "0 1 0@1");  // copy 0 is the default, elided

    Route plain = Route::of({0, 1});
    CHECK(format_route(g, plain) == "0 1");
}

TEST_CASE("format/parse/resolve round-trips the resolved edges") {
    Graph g = Graph::undirected(3);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    Route r = Route::of({0, 1, 0, 1, 2});
    r.pinned = {1, 1, 0, 2};

    std::string text = format_routes(g, {r});
    auto back = parse_routes(text);
    REQUIRE(back.size() == 1);

    std::vector<int> ids_a, ids_b;
    REQUIRE(resolve_route(g, r, &ids_a));
    REQUIRE(resolve_route(g, back[0], &ids_b));
    CHECK(ids_a == ids_b);
    CHECK(format_routes(g, back) == text);  // formatting is a fixed point
}
