#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "hamcycle/graph.hpp"
#include "hamcycle/solver.hpp"

namespace hamcycle::bench {

// A seeded set of random graphs: per_edge_count instances for every edge
// count in 1..v(v-1)/2. Instance seeds derive deterministically from
// (master_seed, v, e, instance_id), so the ensemble is reproducible with or
// without files on disk.
struct EnsembleSpec {
    int v = 32;
    int per_edge_count = 20;
    uint64_t master_seed = 0;

    long long max_edges() const { return max_edge_count(v); }
    long long instance_count() const { return per_edge_count * max_edges(); }
};

struct InstanceRef {
    int v = 0;
    long long e = 0;
    int instance_id = 0;
    uint64_t seed = 0;
    std::string file;  // empty: regenerate from seed
};

uint64_t instance_seed(uint64_t master_seed, int v, long long e, int instance_id);
std::vector<InstanceRef> ensemble_instances(const EnsembleSpec& spec);
Graph instance_graph(const InstanceRef& ref);

struct Manifest {
    EnsembleSpec spec;
    std::filesystem::path base_dir;  // instance files resolve against this
    std::vector<InstanceRef> instances;
};

// Writes every graph in canonical JSON plus manifest.json; idempotent for a
// fixed master seed.
Manifest generate_ensemble(const EnsembleSpec& spec, const std::filesystem::path& out_dir);
Manifest load_manifest(const std::filesystem::path& manifest_file);

enum class Metric { recursions, time };
std::string_view to_string(Metric m);
Metric metric_from_string(std::string_view s);

// One benchmark row per (graph, algorithm, metric).
struct RunRecord {
    std::string algorithm;
    int v = 0;
    long long e = 0;
    int instance_id = 0;
    uint64_t seed = 0;
    Metric metric = Metric::recursions;
    Decision decision = Decision::undecided;
    uint64_t recursions = 0;
    uint64_t elapsed_ns = 0;
    Cutoff cutoff = Cutoff::none;
    std::string error;  // non-empty: the run failed (e.g. missing graph file)

    bool solved() const { return error.empty() && decision != Decision::undecided; }
};

struct RunOptions {
    // The metric picks the budget side that applies: recursion runs get an
    // unlimited clock, timed runs an unlimited recursion count.
    uint64_t max_recursions = 100'000;
    uint64_t max_time_ns = 100'000'000;
    int jobs = 0;  // 0: hardware concurrency (timed runs stay sequential)
    bool parallel_timing = false;
    bool verify_restoration = true;
};

// One record per (instance, algorithm), ordered by (algorithm, e,
// instance_id) regardless of execution order.
std::vector<RunRecord> run_experiment(const Manifest& manifest,
                                      const std::vector<AlgorithmConfig>& algorithms,
                                      Metric metric, const RunOptions& options = {});

struct AggregateRow {
    std::string algorithm;
    long long total = 0;
    long long unsolved = 0;
    double unsolved_fraction = 0.0;
    double mean_recursions_solved = 0.0;
    double mean_time_solved_ns = 0.0;
    int rank_recursions = 0;
    int rank_time = 0;
};

// Fractions over all records, means over solved instances only. Ranks order
// by fewest unsolved, ties broken by lower mean cost over solved instances.
std::vector<AggregateRow> aggregate(const std::vector<RunRecord>& records);

inline constexpr std::string_view kRecordCsvHeader =
    "algorithm,v,e,instance_id,seed,metric,decision,recursions,elapsed_ns,cutoff";

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records);
void write_records_csv(const std::filesystem::path& file, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_records_csv(const std::filesystem::path& file);
void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows);

struct FigureOptions {
    // Cutoff records are plotted at the budget ceiling.
    uint64_t recursion_ceiling = 100'000;
    uint64_t time_ceiling_ns = 100'000'000;
};

// Per algorithm: a (mean_degree, cost, decision) scatter CSV and an SVG
// scatter colored by decision; plus one summary CSV of per-degree-bin median
// costs (one bin per edge count, width 2/v in mean degree).
void emit_figure_data(const std::vector<RunRecord>& records,
                      const std::filesystem::path& out_dir, const FigureOptions& options = {});

}  // namespace hamcycle::bench
