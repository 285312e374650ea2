// Command-line front end: solve / verify / generate / oracle / expand.
//
// Exit codes: 0 = yes/accept, 1 = no/reject, 2 = error or refusal (bad input,
// oracle budget exceeded, guard tripped).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rca/generators.hpp"
#include "rca/instance.hpp"
#include "rca/oracle.hpp"
#include "rca/solver.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

long long oracle_budget_default() {
    if (const char* env = std::getenv("RCA_ORACLE_BUDGET")) {
        try {
            long long v = std::stoll(env);
            if (v > 0) return v;
        } catch (...) {
        }
        throw std::runtime_error("RCA_ORACLE_BUDGET must be a positive integer");
    }
    return rca::kDefaultOracleBudget;
}

nlohmann::json result_json(const rca::Instance& inst, const rca::SolveResult& res) {
    nlohmann::json j;
    j["decision"] = res.yes ? "yes" : "no";
    j["solverUsed"] = res.solver_used;
    j["horizon"] = res.horizon;
    j["sharedEdges"] = res.shared.ids();
    nlohmann::json routes = nlohmann::json::array();
    for (const rca::Route& r : res.witness)
        routes.push_back(rca::format_route(inst.graph, r));
    j["routes"] = routes;
    if (res.min_shared) j["minShared"] = *res.min_shared;
    return j;
}

void print_result_text(const rca::Instance& inst, const rca::SolveResult& res,
                       bool witness) {
    std::cout << (res.yes ? "yes" : "no") << " (solver: " << res.solver_used;
    if (res.horizon > 0) std::cout << ", horizon " << res.horizon;
    if (res.min_shared) std::cout << ", min shared " << *res.min_shared;
    std::cout << ")\n";
    if (witness && !res.witness.empty()) {
        std::cout << "shared edges:";
        for (int id : res.shared.ids()) std::cout << ' ' << id;
        std::cout << "\n" << rca::format_routes(inst.graph, res.witness);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"routing with collision avoidance: solver, verifier, generators"};
    app.require_subcommand(1);

    std::string instance_path, routes_path, source_path, out_path, name_map_path;
    std::string construction;
    bool want_witness = false, want_json = false;
    int jobs = 1;
    long long budget = -1;
    int x1 = 0, x2 = -1, x3 = -1, x = 0, pad = 0;
    int tau = 0;

    CLI::App* solve = app.add_subcommand("solve", "decide an instance");
    solve->add_option("instance", instance_path, "instance file")->required();
    solve->add_flag("--witness", want_witness, "print witness routes");
    solve->add_flag("--json", want_json, "machine-readable output");
    solve->add_option("--jobs", jobs, "parallel subset evaluation")->check(CLI::PositiveNumber);
    solve->add_option("--budget", budget, "oracle combination budget");

    CLI::App* verify = app.add_subcommand("verify", "check routes against an instance");
    verify->add_option("instance", instance_path, "instance file")->required();
    verify->add_option("routes", routes_path, "route file")->required();
    verify->add_flag("--json", want_json, "machine-readable output");

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive minimum-sharing search");
    oracle->add_option("instance", instance_path, "instance file")->required();
    oracle->add_flag("--witness", want_witness, "print witness routes");
    oracle->add_flag("--json", want_json, "machine-readable output");
    oracle->add_option("--budget", budget, "combination budget");

    CLI::App* generate = app.add_subcommand("generate", "build an instance from a reduction");
    generate->add_option("construction", construction,
                         "setcover-dag | setcover-undirected | pchc-path | "
                         "pchc-path-directed | pchc-trail | dp23hc-trail")
        ->required();
    generate->add_option("source", source_path, "source problem file")->required();
    generate->add_option("-o,--out", out_path, "instance output path (default stdout)");
    generate->add_option("--name-map", name_map_path,
                         "name map output path (default <out>.names)");
    generate->add_option("--x1", x1, "wiring vertex x1 (pchc-path)");
    generate->add_option("--x2", x2, "wiring vertex x2 (pchc-path)");
    generate->add_option("--x3", x3, "wiring vertex x3 (pchc-path)");
    generate->add_option("--x", x, "wiring vertex x (pchc-trail)");
    generate->add_option("--pad", pad, "padding chain length (pchc-path)")
        ->check(CLI::NonNegativeNumber);

    CLI::App* expand_cmd = app.add_subcommand("expand", "dump the time-expanded network");
    expand_cmd->add_option("instance", instance_path, "instance file")->required();
    expand_cmd->add_option("--tau", tau, "horizon override (default: dispatch rule)")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (budget < 0) budget = oracle_budget_default();

        if (solve->parsed()) {
            rca::Instance inst = rca::parse_instance(read_file(instance_path));
            rca::SolveResult res = rca::solve(inst, budget, jobs);
            if (want_json) std::cout << result_json(inst, res).dump(2) << "\n";
            else print_result_text(inst, res, want_witness);
            return res.yes ? 0 : 1;
        }

        if (verify->parsed()) {
            rca::Instance inst = rca::parse_instance(read_file(instance_path));
            std::vector<rca::Route> routes = rca::parse_routes(read_file(routes_path));
            rca::VerifyResult vr = rca::verify_solution(inst, routes);
            if (want_json) {
                nlohmann::json j;
                j["accepted"] = vr.accepted;
                j["reason"] = rca::to_string(vr.reason);
                j["detail"] = vr.detail;
                j["sharedEdges"] = vr.shared.ids();
                std::cout << j.dump(2) << "\n";
            } else if (vr.accepted) {
                std::cout << "accept (" << vr.shared.size() << " shared edges)\n";
            } else {
                std::cout << "reject (" << rca::to_string(vr.reason) << "): " << vr.detail
                          << "\n";
            }
            return vr.accepted ? 0 : 1;
        }

        if (oracle->parsed()) {
            rca::Instance inst = rca::parse_instance(read_file(instance_path));
            rca::SolveResult res = rca::min_shared(inst, budget);
            if (want_json) {
                std::cout << result_json(inst, res).dump(2) << "\n";
            } else {
                if (res.min_shared)
                    std::cout << "min shared " << *res.min_shared << ", decision "
                              << (res.yes ? "yes" : "no") << " (k = " << inst.k << ")\n";
                else
                    std::cout << "no admissible routes, decision no\n";
                if (want_witness && !res.witness.empty())
                    std::cout << rca::format_routes(inst.graph, res.witness);
            }
            return res.yes ? 0 : 1;
        }

        if (generate->parsed()) {
            rca::Instance inst;
            rca::NameMap names;
            if (construction == "setcover-dag" || construction == "setcover-undirected") {
                rca::SetCoverInstance sc = rca::parse_set_cover(read_file(source_path));
                rca::SetCoverGen gen = rca::gen_setcover(sc, construction == "setcover-dag");
                inst = std::move(gen.instance);
                names = std::move(gen.names);
            } else if (construction == "pchc-path" || construction == "pchc-path-directed") {
                rca::Graph g = rca::parse_graph_file(read_file(source_path));
                rca::PCHCPathGen gen = rca::gen_pchc_path(
                    g, x1, x2, x3, pad, construction == "pchc-path-directed");
                inst = std::move(gen.instance);
                names = std::move(gen.names);
            } else if (construction == "pchc-trail") {
                rca::Graph g = rca::parse_graph_file(read_file(source_path));
                rca::PCHCTrailGen gen = rca::gen_pchc_trail(g, x);
                inst = std::move(gen.instance);
                names = std::move(gen.names);
            } else if (construction == "dp23hc-trail") {
                rca::Graph g = rca::parse_graph_file(read_file(source_path));
                rca::DP23HCTrailGen gen = rca::gen_dp23hc_trail(g);
                inst = std::move(gen.instance);
                names = std::move(gen.names);
            } else {
                throw std::runtime_error("unknown construction '" + construction + "'");
            }
            std::string text = rca::format_instance(inst);
            if (out_path.empty()) std::cout << text;
            else write_file(out_path, text);
            if (name_map_path.empty() && !out_path.empty())
                name_map_path = out_path + ".names";
            if (!name_map_path.empty())
                write_file(name_map_path, rca::format_name_map(names));
            return 0;
        }

        if (expand_cmd->parsed()) {
            rca::Instance inst = rca::parse_instance(read_file(instance_path));
            long long horizon = tau > 0
                                    ? tau
                                    : rca::dispatch_horizon(inst.graph, inst.t, inst.p,
                                                            inst.alpha);
            if (horizon < 1)
                throw std::runtime_error("horizon is 0: no vertex reaches t");
            rca::TimeExpandedNetwork net =
                rca::expand(inst.graph, inst.s, inst.t, static_cast<int>(horizon), inst.p);
            std::cout << rca::format_network(net);
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
