// Command-line front end: run the exchange engine on an instance file, search
// for beneficial misreports, build reduction instances, run the brute-force
// property oracles, and benchmark the misreport search.
//
// Exit codes: 0 success / witness found, 1 legitimate negative answer,
// 2 invalid input or exceeded brute-force bound. Standard output carries only
// JSON or CSV; diagnostics and traces go to standard error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ttcx/axioms.hpp"
#include "ttcx/manip.hpp"
#include "ttcx/model.hpp"
#include "ttcx/random_markets.hpp"
#include "ttcx/reduce.hpp"
#include "ttcx/ttc.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitFound = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

int env_bound(int fallback) {
    if (const char* raw = std::getenv("TTCX_BRUTE_BOUND")) {
        const int v = std::atoi(raw);
        if (v > 0) return v;
    }
    return fallback;
}

std::vector<std::string> tiebreak_sorted(const ttcx::Economy& economy,
                                         const ttcx::Bundle& bundle) {
    std::vector<std::string> out;
    for (const auto& g : economy.goods)
        if (bundle.count(g)) out.push_back(g);
    return out;
}

ordered_json allocation_json(const ttcx::Economy& economy, const ttcx::Allocation& z) {
    ordered_json j;
    for (const auto& [agent, bundle] : z.bundles)
        j[std::to_string(agent)] = tiebreak_sorted(economy, bundle);
    return j;
}

int cmd_run_ttc(const std::string& path, bool trace) {
    const ttcx::Economy economy = ttcx::load_economy_file(path);
    const ttcx::TradeRecord record = ttcx::run_ttc(economy);
    if (trace) {
        for (std::size_t t = 0; t < record.cycles.size(); ++t) {
            std::cerr << "t=" << t + 1 << " cycle=[";
            for (std::size_t i = 0; i < record.cycles[t].size(); ++i)
                std::cerr << (i ? "," : "") << record.cycles[t][i];
            std::cerr << "]\n";
        }
    }
    std::cout << allocation_json(economy, record.allocation).dump() << "\n";
    return kExitFound;
}

int cmd_manipulate(const std::string& path, bool oracle, int jobs, int bound) {
    const ttcx::Economy economy = ttcx::load_economy_file(path);
    const ttcx::ManipSearch search = oracle ? ttcx::bruteforce_misreport(economy, bound)
                                            : ttcx::algorithm_a(economy, jobs);
    ordered_json j;
    j["found"] = search.result.has_value();
    j["ttc_calls"] = search.ttc_calls;
    if (search.result) {
        j["report"] = search.result->report;
        j["bundle"] = tiebreak_sorted(economy, search.result->bundle);
    }
    std::cout << j.dump() << "\n";
    return search.result ? kExitFound : kExitNegative;
}

int cmd_reduce_clique(const std::string& path) {
    const ttcx::ColoredGraph graph = ttcx::load_colored_graph_file(path);
    std::cout << ttcx::save_colored_graph(ttcx::clique_to_snakeless(graph));
    return kExitFound;
}

int cmd_reduce_ladder(const std::string& path) {
    const ttcx::ColoredGraph graph = ttcx::load_colored_graph_file(path);
    std::cout << ttcx::save_economy(ttcx::build_economy(graph));
    return kExitFound;
}

int cmd_verify_ladder(const std::string& path, long long bound) {
    const ttcx::ColoredGraph graph = ttcx::load_colored_graph_file(path);
    const auto ladder = ttcx::has_snakeless_ladder_bruteforce(graph, bound);
    ordered_json j;
    j["found"] = ladder.has_value();
    if (ladder) j["ladder"] = ladder->vertices;
    std::cout << j.dump() << "\n";
    return ladder ? kExitFound : kExitNegative;
}

ordered_json axiom_json(const ttcx::Economy& economy, const ttcx::AxiomReport& report) {
    ordered_json j;
    j["holds"] = report.holds;
    if (report.witness) {
        ordered_json w;
        w["agent"] = report.witness->agent;
        if (!report.witness->misreport.empty()) w["misreport"] = report.witness->misreport;
        if (report.witness->allocation)
            w["allocation"] = allocation_json(economy, *report.witness->allocation);
        j["witness"] = w;
    }
    return j;
}

int cmd_audit(const std::string& path, const std::string& property, int agent,
              int pe_bound, int sp_bound) {
    const ttcx::Economy economy = ttcx::load_economy_file(path);
    ordered_json j;
    bool all_hold = true;

    if (property == "all" || property == "ir") {
        const auto report =
            ttcx::is_individually_rational(economy, ttcx::run_ttc(economy).allocation);
        j["ir"] = axiom_json(economy, report);
        all_hold = all_hold && report.holds;
    }
    if (property == "all" || property == "pe") {
        const auto report =
            ttcx::is_pareto_optimal(economy, ttcx::run_ttc(economy).allocation, pe_bound);
        j["pe"] = axiom_json(economy, report);
        all_hold = all_hold && report.holds;
    }
    if (property == "all" || property == "sp") {
        const auto report = ttcx::audit_rule_sp(economy, agent, sp_bound);
        j["sp"] = axiom_json(economy, report);
        j["sp"]["agent"] = agent;
        all_hold = all_hold && report.holds;
    }
    std::cout << j.dump() << "\n";
    return all_hold ? kExitFound : kExitNegative;
}

int cmd_bench(int n, int k, std::uint64_t seed, int trials, int jobs) {
    std::cout << "n,k,seed,trial,ttc_calls,elapsed_ms\n";
    ttcx::SplitMix64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        const ttcx::Economy economy = ttcx::random_generalized_market(n, k, rng);
        const auto start = std::chrono::steady_clock::now();
        const ttcx::ManipSearch search = ttcx::algorithm_a(economy, jobs, /*audit=*/false);
        const auto elapsed = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        std::cout << n << "," << k << "," << seed << "," << trial << ","
                  << search.ttc_calls << "," << elapsed << "\n";
    }
    return kExitFound;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"top-trading-cycles workbench"};
    app.require_subcommand(1);

    std::string instance, graph;
    bool trace = false, oracle = false;
    int jobs = 0;
    int oracle_bound = env_bound(7);
    int pe_bound = env_bound(8);
    int sp_bound = env_bound(7);
    long long ladder_bound = 1'000'000;
    std::string property = "all";
    int agent = 1;
    int bench_n = 6, bench_k = 2, bench_trials = 10;
    std::uint64_t seed = 1;

    auto* run = app.add_subcommand("run-ttc", "run the engine on an instance");
    run->add_option("instance", instance)->required();
    run->add_flag("--trace", trace, "per-step cycle trace on stderr");

    auto* manip = app.add_subcommand("manipulate", "search for a beneficial misreport");
    manip->add_option("instance", instance)->required();
    manip->add_flag("--oracle", oracle, "exhaustive n! search instead of the bundle scan");
    manip->add_option("--jobs", jobs, "worker cap (0 = hardware)");
    manip->add_option("--bound", oracle_bound, "good-count bound for --oracle");

    auto* orc = app.add_subcommand("oracle", "exhaustive misreport search");
    orc->add_option("instance", instance)->required();
    orc->add_option("--bound", oracle_bound, "good-count bound");

    auto* redc = app.add_subcommand("reduce-clique", "undirected colored graph -> rung/snake digraph");
    redc->add_option("graph", graph)->required();

    auto* redl = app.add_subcommand("reduce-ladder", "rung/snake digraph -> gadget economy");
    redl->add_option("graph", graph)->required();

    auto* verify = app.add_subcommand("verify-ladder", "snakeless-ladder oracle");
    verify->add_option("graph", graph)->required();
    verify->add_option("--bound", ladder_bound, "class-product bound");

    auto* audit = app.add_subcommand("audit", "brute-force IR/PE/SP checks");
    audit->add_option("instance", instance)->required();
    audit->add_option("--property", property)->check(CLI::IsMember({"all", "ir", "pe", "sp"}));
    audit->add_option("--agent", agent, "agent for the SP audit");
    audit->add_option("--pe-bound", pe_bound);
    audit->add_option("--sp-bound", sp_bound);

    auto* bench = app.add_subcommand("bench", "misreport-search timing on random instances");
    bench->add_option("--n", bench_n, "goods per instance");
    bench->add_option("--k", bench_k, "agent-1 endowment size");
    bench->add_option("--seed", seed);
    bench->add_option("--trials", bench_trials);
    bench->add_option("--jobs", jobs);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run_ttc(instance, trace);
        if (manip->parsed()) return cmd_manipulate(instance, oracle, jobs, oracle_bound);
        if (orc->parsed()) return cmd_manipulate(instance, true, jobs, oracle_bound);
        if (redc->parsed()) return cmd_reduce_clique(graph);
        if (redl->parsed()) return cmd_reduce_ladder(graph);
        if (verify->parsed()) return cmd_verify_ladder(graph, ladder_bound);
        if (audit->parsed()) return cmd_audit(instance, property, agent, pe_bound, sp_bound);
        if (bench->parsed()) return cmd_bench(bench_n, bench_k, seed, bench_trials, jobs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
