#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamcycle/bench.hpp"
#include "hamcycle/graph_io.hpp"
#include "hamcycle/oracle.hpp"
#include "hamcycle/phase.hpp"
#include "hamcycle/solver.hpp"

namespace {

using nlohmann::ordered_json;

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

uint64_t limit_or_unlimited(uint64_t flag_value) {
    return flag_value == 0 ? hamcycle::Budget::kUnlimited : flag_value;
}

hamcycle::AlgorithmConfig named_preset(const std::string& name) {
    try {
        return hamcycle::preset(name);
    } catch (const std::invalid_argument& ex) {
        throw CLI::ValidationError("--algo", ex.what());
    }
}

hamcycle::AlgorithmConfig config_from_flags(const std::string& algo,
                                            const std::string& heuristic,
                                            const std::string& prune,
                                            const std::string& check) {
    if (algo != "custom") return named_preset(algo);
    hamcycle::AlgorithmConfig cfg;
    try {
        cfg.heuristic = hamcycle::heuristic_from_string(heuristic);
    } catch (const std::invalid_argument& ex) {
        throw CLI::ValidationError("--heuristic", ex.what());
    }
    for (const std::string& p : split_csv(prune)) {
        if (p == "neighbour") cfg.prune_neighbour = true;
        else if (p == "path") cfg.prune_path = true;
        else if (p == "solution") cfg.prune_solution = true;
        else throw CLI::ValidationError("--prune", "unknown routine " + p);
    }
    for (const std::string& c : split_csv(check)) {
        if (c == "degree") cfg.check_degree = true;
        else if (c == "premature-closure") cfg.check_premature_closure = true;
        else if (c == "disconnected") cfg.check_disconnected = true;
        else if (c == "one-connected") cfg.check_one_connected = true;
        else throw CLI::ValidationError("--check", "unknown check " + c);
    }
    return cfg;
}

std::vector<hamcycle::AlgorithmConfig> algorithms_from_flag(const std::string& algos) {
    if (algos == "all") return hamcycle::all_presets();
    std::vector<hamcycle::AlgorithmConfig> configs;
    for (const std::string& name : split_csv(algos)) configs.push_back(named_preset(name));
    if (configs.empty()) throw CLI::ValidationError("--algos", "no algorithms selected");
    return configs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian cycle backtracking toolkit"};
    app.require_subcommand(1);

    // phase
    int phase_v = 0;
    double phase_e = 0.0;
    auto* phase_cmd = app.add_subcommand("phase", "Evaluate the Hamiltonicity phase model");
    phase_cmd->add_option("--v", phase_v, "vertex count (>= 3)")->required();
    phase_cmd->add_option("--e", phase_e, "edge count (real-valued accepted)")->required();

    // solve
    std::string solve_graph, solve_algo = "vacul", solve_heuristic = "none";
    std::string solve_prune, solve_check;
    uint64_t solve_max_rec = 100'000, solve_max_time = 100'000'000;
    auto* solve_cmd = app.add_subcommand("solve", "Decide one graph");
    solve_cmd->add_option("--graph", solve_graph, "graph file (JSON or edge list)")->required();
    solve_cmd->add_option("--algo", solve_algo,
                          "preset (depth_first|cetal|van_horn|martello|rubin|vacul) or custom");
    solve_cmd->add_option("--heuristic", solve_heuristic, "custom: none|high|low");
    solve_cmd->add_option("--prune", solve_prune, "custom: comma list of neighbour,path,solution");
    solve_cmd->add_option("--check", solve_check,
                          "custom: comma list of degree,premature-closure,disconnected,"
                          "one-connected");
    solve_cmd->add_option("--max-recursions", solve_max_rec, "recursion budget, 0 = unlimited");
    solve_cmd->add_option("--max-time-ns", solve_max_time, "time budget in ns, 0 = unlimited");

    // oracle
    std::string oracle_graph;
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force decision and cycle count");
    oracle_cmd->add_option("--graph", oracle_graph, "graph file")->required();

    // gen
    int gen_v = 32, gen_per_edge = 20;
    uint64_t gen_seed = 0;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random-graph ensemble");
    gen_cmd->add_option("--v", gen_v, "vertex count")->required();
    gen_cmd->add_option("--per-edge", gen_per_edge, "instances per edge count");
    gen_cmd->add_option("--seed", gen_seed, "master seed")->required();
    gen_cmd->add_option("--out", gen_out, "output directory")->required();

    // run
    std::string run_manifest, run_algos = "all", run_metric = "recursions", run_out;
    uint64_t run_max_rec = 100'000, run_max_time = 100'000'000;
    int run_jobs = 0;
    bool run_parallel_timing = false;
    auto* run_cmd = app.add_subcommand("run", "Run an experiment over an ensemble");
    run_cmd->add_option("--manifest", run_manifest, "manifest.json of a generated ensemble")
        ->required();
    run_cmd->add_option("--algos", run_algos, "all or comma list of presets");
    run_cmd->add_option("--metric", run_metric, "recursions|time");
    run_cmd->add_option("--max-recursions", run_max_rec, "recursion budget, 0 = unlimited");
    run_cmd->add_option("--max-time-ns", run_max_time, "time budget in ns, 0 = unlimited");
    run_cmd->add_option("--out", run_out, "results CSV path")->required();
    run_cmd->add_option("--jobs", run_jobs, "worker threads (recursion metric only)");
    run_cmd->add_flag("--parallel-timing", run_parallel_timing,
                      "allow parallel timed runs (skews wall times)");

    // report
    std::string report_in, report_out;
    uint64_t report_max_rec = 100'000, report_max_time = 100'000'000;
    auto* report_cmd = app.add_subcommand("report", "Aggregate results and emit figure data");
    report_cmd->add_option("--in", report_in, "results CSV from run")->required();
    report_cmd->add_option("--out", report_out, "output directory")->required();
    report_cmd->add_option("--max-recursions", report_max_rec,
                           "recursion ceiling used for cutoff points");
    report_cmd->add_option("--max-time-ns", report_max_time,
                           "time ceiling used for cutoff points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*phase_cmd) {
            ordered_json j;
            j["v"] = phase_v;
            j["e"] = phase_e;
            j["c"] = hamcycle::phase::c_of(phase_v, phase_e);
            j["p_hamiltonian"] = hamcycle::phase::p_hamiltonian(phase_v, phase_e);
            j["threshold_degree"] = hamcycle::phase::threshold_degree(phase_v);
            std::cout << j.dump() << '\n';
        } else if (*solve_cmd) {
            hamcycle::Graph g = hamcycle::read_graph_file(solve_graph);
            const hamcycle::AlgorithmConfig cfg =
                config_from_flags(solve_algo, solve_heuristic, solve_prune, solve_check);
            hamcycle::Budget budget{limit_or_unlimited(solve_max_rec),
                                    limit_or_unlimited(solve_max_time)};
            const hamcycle::SolveOutcome outcome = hamcycle::solve(g, cfg, budget);
            ordered_json j;
            j["decision"] = hamcycle::to_string(outcome.decision);
            j["witness"] = outcome.witness ? ordered_json(*outcome.witness) : ordered_json();
            j["recursions"] = outcome.recursions;
            j["elapsed_ns"] = outcome.elapsed_ns;
            j["cutoff"] = hamcycle::to_string(outcome.cutoff);
            std::cout << j.dump() << '\n';
        } else if (*oracle_cmd) {
            hamcycle::Graph g = hamcycle::read_graph_file(oracle_graph);
            ordered_json j;
            j["hamiltonian"] = hamcycle::oracle::is_hamiltonian_bruteforce(g);
            j["cycle_count"] = hamcycle::oracle::count_hamiltonian_cycles(g);
            std::cout << j.dump() << '\n';
        } else if (*gen_cmd) {
            hamcycle::bench::EnsembleSpec spec{gen_v, gen_per_edge, gen_seed};
            const auto manifest = hamcycle::bench::generate_ensemble(spec, gen_out);
            ordered_json j;
            j["manifest"] = (manifest.base_dir / "manifest.json").string();
            j["instances"] = manifest.instances.size();
            std::cout << j.dump() << '\n';
        } else if (*run_cmd) {
            const auto manifest = hamcycle::bench::load_manifest(run_manifest);
            const auto algorithms = algorithms_from_flag(run_algos);
            hamcycle::bench::RunOptions options;
            options.max_recursions = limit_or_unlimited(run_max_rec);
            options.max_time_ns = limit_or_unlimited(run_max_time);
            options.jobs = run_jobs;
            options.parallel_timing = run_parallel_timing;
            const auto records = hamcycle::bench::run_experiment(
                manifest, algorithms, hamcycle::bench::metric_from_string(run_metric), options);
            hamcycle::bench::write_records_csv(std::filesystem::path(run_out), records);
            ordered_json j;
            j["out"] = run_out;
            j["records"] = records.size();
            std::cout << j.dump() << '\n';
        } else if (*report_cmd) {
            const auto records = hamcycle::bench::read_records_csv(report_in);
            const auto rows = hamcycle::bench::aggregate(records);
            std::filesystem::create_directories(report_out);
            {
                std::ofstream out(std::filesystem::path(report_out) / "aggregate.csv");
                if (!out) throw std::runtime_error("cannot write aggregate.csv");
                hamcycle::bench::write_aggregate_csv(out, rows);
            }
            hamcycle::bench::FigureOptions fig;
            fig.recursion_ceiling = limit_or_unlimited(report_max_rec);
            fig.time_ceiling_ns = limit_or_unlimited(report_max_time);
            hamcycle::bench::emit_figure_data(records, report_out, fig);
            ordered_json j;
            j["out"] = report_out;
            j["algorithms"] = rows.size();
            j["records"] = records.size();
            std::cout << j.dump() << '\n';
        }
    } catch (const CLI::ParseError& ex) {
        std::cerr << "usage error: " << ex.what() << '\n';
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
    return 0;
}
