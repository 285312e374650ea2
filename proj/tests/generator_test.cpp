#include <catch2/catch_amalgamated.hpp>

#include "rca/generators.hpp"
#include "rca/solver.hpp"
#include "support.hpp"

using namespace rca;

namespace {

SetCoverInstance miniature_cover() {
    SetCoverInstance sc;
    sc.universe = 3;
    sc.sets = {{0, 1}, {2}, {0, 2}};
    sc.budget = 2;
    return sc;
}

Graph k4() {
    Graph g = Graph::undirected(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
    return g;
}

Graph prism() {
    Graph g = Graph::undirected(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    for (int i = 0; i < 3; ++i) g.add_edge(i, i + 3);
    return g;
}

Graph directed_triangle() {
    Graph g = Graph::directed(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    return g;
}

}  // namespace

TEST_CASE("name maps round-trip and look up roles") {
    NameMap nm;
    nm.add("s", 4);
    nm.add("chain:4:1", 8);
    CHECK(nm.lookup("s") == 4);
    CHECK(nm.has("chain:4:1"));
    CHECK_FALSE(nm.has("nope"));
    std::string text = format_name_map(nm);
    NameMap back = parse_name_map(text);
    CHECK(back.entries == nm.entries);
    CHECK(format_name_map(back) == text);
}

TEST_CASE("graph files round-trip") {
    Graph g = Graph::directed(3);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    std::string text = format_graph_file(g);
    Graph back = parse_graph_file(text);
    CHECK(back.is_directed());
    CHECK(back.vertex_count() == 3);
    REQUIRE(back.edge_count() == 2);
    CHECK(back.edge(1).tail == 2);
    CHECK(format_graph_file(back) == text);
    CHECK_THROWS(parse_graph_file("graph 2\ndirected\nn 1\n"));
}

TEST_CASE("set cover reduction: structure of the miniature") {
    SetCoverGen gen = gen_setcover(miniature_cover(), /*directed=*/true);
    const Instance& inst = gen.instance;
    // 2 terminals + 3 elements + 3 sets + 3 * 3 set-chain + 3 * 2 elem-chain.
    CHECK(inst.graph.vertex_count() == 23);
    // Elem chains 3 * 3, set chains 3 * 4, memberships 5, sink arcs 3.
    CHECK(inst.graph.edge_count() == 29);
    CHECK(inst.p == 6);
    CHECK(inst.k == 2);
    CHECK(inst.kind == RouteKind::walk);
    CHECK_FALSE(inst.alpha.has_value());
    CHECK(inst.graph.is_directed());
    CHECK(is_dag(inst.graph));
    // Every vertex is named.
    CHECK(static_cast<int>(gen.names.entries.size()) == inst.graph.vertex_count());
    CHECK(gen.names.lookup("s") == inst.s);
    CHECK(gen.names.lookup("t") == inst.t);
    CHECK(gen.names.has("elem:2"));
    CHECK(gen.names.has("set:2"));
    CHECK(gen.names.has("chainU:0:1"));
    CHECK(gen.names.has("chainF:2:3"));

    SetCoverGen undir = gen_setcover(miniature_cover(), /*directed=*/false);
    CHECK_FALSE(undir.instance.graph.is_directed());
    REQUIRE(undir.instance.alpha.has_value());
    CHECK(*undir.instance.alpha == 5);  // budget + 3
}

TEST_CASE("set cover reduction: cover in, accepted witness out") {
    SetCoverInstance sc = miniature_cover();
    auto cover = brute_force_set_cover(sc);
    REQUIRE(cover.has_value());
    REQUIRE(cover->size() == 2);

    for (bool directed : {true, false}) {
        CAPTURE(directed);
        SetCoverGen gen = gen_setcover(sc, directed);
        auto witness = gen_setcover_witness(gen, *cover);
        REQUIRE(static_cast<int>(witness.size()) == gen.instance.p);
        VerifyResult v = verify_solution(gen.instance, witness);
        CHECK(v.accepted);
        // Sharing concentrates on the sink edges of the chosen sets.
        CHECK(static_cast<int>(v.shared.size()) == static_cast<int>(cover->size()));
    }

    CHECK_THROWS_AS(gen_setcover_witness(gen_setcover(sc, true), {1}),
                    std::invalid_argument);  // {2} alone covers nothing like U
}

TEST_CASE("set cover reduction: decision matches coverability") {
    // With budget 2 a cover exists; the routing instance is a yes.
    SetCoverGen two = gen_setcover(miniature_cover(), true);
    SolveResult r2 = solve(two.instance);
    CHECK(r2.yes);
    CHECK(r2.solver_used == "k-subset-flow");
    CHECK(verify_solution(two.instance, r2.witness).accepted);

    // With budget 1 no cover exists; both variants must say no.
    SetCoverInstance sc1 = miniature_cover();
    sc1.budget = 1;
    CHECK_FALSE(brute_force_set_cover(sc1).has_value());
    SetCoverGen d1 = gen_setcover(sc1, true);
    CHECK_FALSE(solve(d1.instance).yes);
    SetCoverGen u1 = gen_setcover(sc1, false);
    SolveResult ru = solve(u1.instance);
    CHECK(ru.solver_used == "oracle");
    CHECK_FALSE(ru.yes);
    REQUIRE(ru.min_shared.has_value());
    CHECK(*ru.min_shared > sc1.budget);

    // And the undirected yes-side minimum equals the cover size.
    SetCoverGen u2 = gen_setcover(miniature_cover(), false);
    SolveResult ru2 = solve(u2.instance);
    CHECK(ru2.yes);
    REQUIRE(ru2.min_shared.has_value());
    CHECK(*ru2.min_shared == 2);
}

TEST_CASE("set cover reduction rejects an empty family-and-universe") {
    SetCoverInstance sc;
    CHECK_THROWS_AS(gen_setcover(sc, true), std::invalid_argument);
}

TEST_CASE("path reduction on K4") {
    PCHCPathGen gen = gen_pchc_path(k4());
    const Instance& inst = gen.instance;
    CHECK(inst.graph.vertex_count() == 15);
    CHECK(inst.graph.edge_count() == 20);
    CHECK(inst.p == 3);
    CHECK(inst.k == 0);
    CHECK(inst.kind == RouteKind::path);
    CHECK_FALSE(inst.graph.is_directed());
    CHECK(gen.x1 == 0);
    CHECK(gen.x2 == 1);  // two lowest neighbors of x1 by default
    CHECK(gen.x3 == 2);
    CHECK(static_cast<int>(gen.names.entries.size()) == 15);

    auto cycle = brute_force_hamiltonian(k4());
    REQUIRE(cycle.has_value());
    auto witness = gen_pchc_path_witness(gen, *cycle);
    REQUIRE(witness.size() == 3);
    VerifyResult v = verify_solution(inst, witness);
    CHECK(v.accepted);
    CHECK(v.shared.empty());
    // The long route walks s, v, the Hamiltonian cycle from x1, then w, t.
    CHECK(format_route(inst.graph, witness.back()) == "4 5 0 3 2 1 6 7");
}

TEST_CASE("path reduction witness rejects a non-cycle") {
    PCHCPathGen gen = gen_pchc_path(k4());
    CHECK_THROWS_AS(gen_pchc_path_witness(gen, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(gen_pchc_path_witness(gen, {0, 0, 1, 2}), std::invalid_argument);
}

TEST_CASE("path reduction: padding and direction") {
    auto cycle = brute_force_hamiltonian(prism());
    REQUIRE(cycle.has_value());

    PCHCPathGen plain = gen_pchc_path(prism());
    CHECK(plain.instance.graph.vertex_count() == 28);
    CHECK(plain.instance.p == 5);

    // Padding prepends a shared approach chain and pays for it in k.
    PCHCPathGen padded = gen_pchc_path(prism(), 0, -1, -1, /*pad=*/2);
    CHECK(padded.instance.graph.vertex_count() == 30);
    CHECK(padded.instance.k == 2);
    CHECK(padded.instance.s == padded.src);
    CHECK(padded.names.has("pad:1"));
    auto witness = gen_pchc_path_witness(padded, *cycle);
    VerifyResult v = verify_solution(padded.instance, witness);
    CHECK(v.accepted);
    CHECK(static_cast<int>(v.shared.size()) == 2);  // exactly the pad chain

    // Directed variant doubles the base edges and is not acyclic.
    PCHCPathGen dir = gen_pchc_path(prism(), 0, -1, -1, 0, /*directed=*/true);
    CHECK(dir.instance.graph.is_directed());
    CHECK_FALSE(is_dag(dir.instance.graph));
    // Each of the prism's 9 base edges gains an antiparallel twin.
    CHECK(dir.instance.graph.edge_count() == plain.instance.graph.edge_count() + 9);
    auto dwitness = gen_pchc_path_witness(dir, *cycle);
    CHECK(verify_solution(dir.instance, dwitness).accepted);
}

TEST_CASE("path reduction: random cubic inputs keep their promised shape") {
    auto r = testsupport::rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 * testsupport::pick(r, 3, 5);  // 6, 8 or 10
        Graph g = testsupport::random_cubic(r, n);
        PCHCPathGen gen = gen_pchc_path(g);
        CAPTURE(trial, n);
        int chain_internals = n * (n + 1) / 2 - 3;
        CHECK(gen.instance.graph.vertex_count() == n + 4 + chain_internals);
        int chain_edges = (n + 1) * (n + 2) / 2 - 6;
        CHECK(gen.instance.graph.edge_count() == 3 * n / 2 + 5 + chain_edges);
        CHECK(gen.instance.p == n - 1);
        CHECK(static_cast<int>(gen.names.entries.size()) ==
              gen.instance.graph.vertex_count());
        gen.instance.validate();

        auto cycle = brute_force_hamiltonian(g);
        if (cycle) {
            auto witness = gen_pchc_path_witness(gen, *cycle);
            VerifyResult v = verify_solution(gen.instance, witness);
            CHECK(v.accepted);
            CHECK(v.shared.empty());
        }
    }
}

TEST_CASE("path reduction rejects non-cubic input") {
    Graph g = Graph::undirected(4);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(gen_pchc_path(g), std::invalid_argument);
    Graph multi = Graph::undirected(4);
    for (int i = 0; i < 3; ++i) multi.add_edge(0, 1);
    multi.add_edge(2, 3);
    multi.add_edge(2, 3);
    multi.add_edge(2, 3);
    CHECK_THROWS_AS(gen_pchc_path(multi), std::invalid_argument);
}

TEST_CASE("trail reduction on K4") {
    PCHCTrailGen gen = gen_pchc_trail(k4());
    CHECK(gen.pre.vertex_count() == 17);
    CHECK(gen.pre.edge_count() == 23);
    const Instance& inst = gen.instance;
    CHECK(inst.graph.vertex_count() == 63);  // 17 + 2 * 23
    CHECK(inst.graph.edge_count() == 69);    // 3 * 23
    CHECK(inst.p == 8);
    CHECK(inst.k == 0);
    CHECK(inst.kind == RouteKind::trail);
    // Subdividing removed all parallel edges.
    for (int u = 0; u < inst.graph.vertex_count(); ++u)
        for (int id : inst.graph.incident(u)) {
            const Edge& e = inst.graph.edge(id);
            CHECK(inst.graph.edges_between(e.tail, e.head).size() == 1);
        }

    auto cycle = brute_force_hamiltonian(k4());
    REQUIRE(cycle.has_value());
    auto witness = gen_pchc_trail_witness(gen, *cycle);
    REQUIRE(static_cast<int>(witness.size()) == inst.p);
    VerifyResult v = verify_solution(inst, witness);
    CHECK(v.accepted);
    CHECK(v.shared.empty());
}

TEST_CASE("trail reduction on random cubic inputs") {
    auto r = testsupport::rng(56);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 2 * testsupport::pick(r, 3, 4);  // 6 or 8
        Graph g = testsupport::random_cubic(r, n);
        PCHCTrailGen gen = gen_pchc_trail(g);
        CAPTURE(trial, n);
        int mg = 3 * n / 2;
        int pre_v = n + mg + 4 + (n - 1);
        int pre_e = 2 * mg + 5 + 2 * (n - 1);
        CHECK(gen.pre.vertex_count() == pre_v);
        CHECK(gen.pre.edge_count() == pre_e);
        CHECK(gen.instance.graph.vertex_count() == pre_v + 2 * pre_e);
        CHECK(gen.instance.graph.edge_count() == 3 * pre_e);
        CHECK(gen.instance.p == 2 * n);
        gen.instance.validate();

        auto cycle = brute_force_hamiltonian(g);
        if (cycle) {
            auto witness = gen_pchc_trail_witness(gen, *cycle);
            VerifyResult v = verify_solution(gen.instance, witness);
            CHECK(v.accepted);
            CHECK(v.shared.empty());
        }
    }
}

TEST_CASE("degree-bounded trail reduction on the directed triangle") {
    DP23HCTrailGen gen = gen_dp23hc_trail(directed_triangle());
    const Instance& inst = gen.instance;
    CHECK(inst.graph.vertex_count() == 16);
    CHECK(inst.graph.edge_count() == 19);
    CHECK(inst.p == 4);
    CHECK(inst.k == 0);
    CHECK(inst.kind == RouteKind::trail);
    CHECK(inst.graph.is_directed());
    CHECK_FALSE(is_dag(inst.graph));

    auto witness = gen_dp23hc_trail_witness(gen, {0, 1, 2});
    REQUIRE(static_cast<int>(witness.size()) == inst.p);
    VerifyResult v = verify_solution(inst, witness);
    CHECK(v.accepted);
    CHECK(v.shared.empty());

    // The whole instance is oracle-sized: the decision really is yes at k=0.
    SolveResult r = solve(inst);
    CHECK(r.solver_used == "oracle");
    CHECK(r.yes);
    CHECK(*r.min_shared == 0);
}

TEST_CASE("degree-bounded trail reduction on random inputs") {
    auto r = testsupport::rng(57);
    for (int trial = 0; trial < 10; ++trial) {
        auto sample = testsupport::random_dp23(r, testsupport::pick(r, 3, 7), 6);
        DP23HCTrailGen gen = gen_dp23hc_trail(sample.graph);
        int n = sample.graph.vertex_count();
        CAPTURE(trial, n);
        CHECK(gen.instance.graph.vertex_count() == n + 4 + ((n + 1) * (n + 2) / 2 - 1));
        CHECK(gen.instance.graph.edge_count() ==
              sample.graph.edge_count() + 4 + ((n + 2) * (n + 3) / 2 - 3));
        CHECK(gen.instance.p == n + 1);
        gen.instance.validate();
        auto witness = gen_dp23hc_trail_witness(gen, sample.cycle);
        VerifyResult v = verify_solution(gen.instance, witness);
        CHECK(v.accepted);
        CHECK(v.shared.empty());
    }
}

TEST_CASE("degree-bounded trail reduction rejects out-of-bounds degrees") {
    Graph g = Graph::directed(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);  // out-degree 3 at vertex 0
    CHECK_THROWS_AS(gen_dp23hc_trail(g), std::invalid_argument);

    Graph h = Graph::directed(4);
    h.add_edge(1, 0);
    h.add_edge(2, 0);
    h.add_edge(0, 3);
    h.add_edge(3, 0);  // total degree 4 at vertex 0
    CHECK_THROWS_AS(gen_dp23hc_trail(h), std::invalid_argument);
}

TEST_CASE("generators are deterministic") {
    std::string a = format_instance(gen_setcover(miniature_cover(), true).instance);
    std::string b = format_instance(gen_setcover(miniature_cover(), true).instance);
    CHECK(a == b);
    std::string c = format_instance(gen_pchc_path(k4()).instance);
    std::string d = format_instance(gen_pchc_path(k4()).instance);
    CHECK(c == d);
}
