#include "hamcycle/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "hamcycle/graph_io.hpp"
#include "hamcycle/rng.hpp"

namespace hamcycle::bench {

namespace fs = std::filesystem;

uint64_t instance_seed(uint64_t master_seed, int v, long long e, int instance_id) {
    return mix_seed({master_seed, static_cast<uint64_t>(v), static_cast<uint64_t>(e),
                     static_cast<uint64_t>(instance_id)});
}

std::vector<InstanceRef> ensemble_instances(const EnsembleSpec& spec) {
    if (spec.v < 2 || spec.per_edge_count < 1)
        throw std::invalid_argument("ensemble spec needs v >= 2 and per_edge_count >= 1");
    std::vector<InstanceRef> refs;
    refs.reserve(static_cast<size_t>(spec.instance_count()));
    for (long long e = 1; e <= spec.max_edges(); ++e)
        for (int i = 0; i < spec.per_edge_count; ++i)
            refs.push_back({spec.v, e, i, instance_seed(spec.master_seed, spec.v, e, i), {}});
    return refs;
}

Graph instance_graph(const InstanceRef& ref) {
    return random_graph(ref.v, ref.e, ref.seed);
}

namespace {

std::string instance_file_name(const InstanceRef& ref) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "v%d_e%05lld_i%02d.json", ref.v, ref.e, ref.instance_id);
    return buf;
}

}  // namespace

Manifest generate_ensemble(const EnsembleSpec& spec, const fs::path& out_dir) {
    Manifest manifest;
    manifest.spec = spec;
    manifest.base_dir = out_dir;
    manifest.instances = ensemble_instances(spec);

    std::error_code ec;
    fs::create_directories(out_dir / "graphs", ec);
    if (ec) throw std::runtime_error("cannot create " + (out_dir / "graphs").string());

    nlohmann::ordered_json j;
    j["v"] = spec.v;
    j["per_edge_count"] = spec.per_edge_count;
    j["master_seed"] = spec.master_seed;
    auto& arr = j["instances"] = nlohmann::ordered_json::array();
    for (InstanceRef& ref : manifest.instances) {
        ref.file = "graphs/" + instance_file_name(ref);
        write_graph_json(instance_graph(ref), out_dir / ref.file);
        arr.push_back({{"e", ref.e},
                       {"instance_id", ref.instance_id},
                       {"seed", ref.seed},
                       {"file", ref.file}});
    }
    std::ofstream out(out_dir / "manifest.json");
    if (!out) throw std::runtime_error("cannot write manifest in " + out_dir.string());
    out << j.dump() << '\n';
    return manifest;
}

Manifest load_manifest(const fs::path& manifest_file) {
    std::ifstream in(manifest_file);
    if (!in) throw std::runtime_error("cannot open " + manifest_file.string());
    nlohmann::json j = nlohmann::json::parse(in);

    Manifest manifest;
    manifest.spec.v = j.at("v").get<int>();
    manifest.spec.per_edge_count = j.at("per_edge_count").get<int>();
    manifest.spec.master_seed = j.at("master_seed").get<uint64_t>();
    manifest.base_dir = manifest_file.parent_path();
    for (const auto& item : j.at("instances")) {
        InstanceRef ref;
        ref.v = manifest.spec.v;
        ref.e = item.at("e").get<long long>();
        ref.instance_id = item.at("instance_id").get<int>();
        ref.seed = item.at("seed").get<uint64_t>();
        ref.file = item.value("file", std::string{});
        manifest.instances.push_back(std::move(ref));
    }
    return manifest;
}

std::string_view to_string(Metric m) {
    return m == Metric::recursions ? "recursions" : "time";
}

Metric metric_from_string(std::string_view s) {
    if (s == "recursions") return Metric::recursions;
    if (s == "time") return Metric::time;
    throw std::invalid_argument("unknown metric " + std::string(s));
}

namespace {

Budget budget_for(Metric metric, const RunOptions& options) {
    if (metric == Metric::recursions) return Budget::recursions_only(options.max_recursions);
    return Budget::time_only(options.max_time_ns);
}

// Broken invariants abort the experiment; per-instance input problems become
// error records and the run continues.
struct InvariantFailure : std::logic_error {
    using std::logic_error::logic_error;
};

RunRecord run_one(const InstanceRef& ref, const fs::path& base_dir,
                  const AlgorithmConfig& algorithm, Metric metric, const Budget& budget,
                  bool verify_restoration) {
    RunRecord rec;
    rec.algorithm = algorithm.name;
    rec.v = ref.v;
    rec.e = ref.e;
    rec.instance_id = ref.instance_id;
    rec.seed = ref.seed;
    rec.metric = metric;
    try {
        Graph g = ref.file.empty() ? instance_graph(ref) : read_graph_file(base_dir / ref.file);
        const uint64_t before = verify_restoration ? g.fingerprint() : 0;
        const SolveOutcome outcome = solve(g, algorithm, budget);
        if (verify_restoration && g.fingerprint() != before)
            throw InvariantFailure("solve failed to restore its input graph");
        rec.decision = outcome.decision;
        rec.recursions = outcome.recursions;
        rec.elapsed_ns = outcome.elapsed_ns;
        rec.cutoff = outcome.cutoff;
    } catch (const InvariantFailure&) {
        throw;
    } catch (const std::exception& ex) {
        rec.error = ex.what();
    }
    return rec;
}

}  // namespace

std::vector<RunRecord> run_experiment(const Manifest& manifest,
                                      const std::vector<AlgorithmConfig>& algorithms,
                                      Metric metric, const RunOptions& options) {
    const Budget budget = budget_for(metric, options);
    const size_t per_algo = manifest.instances.size();
    std::vector<RunRecord> records(per_algo * algorithms.size());

    int jobs = options.jobs > 0 ? options.jobs
                                : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (metric == Metric::time && jobs > 1) {
        if (options.parallel_timing) {
            std::cerr << "warning: timing runs in parallel; wall times may skew under"
                         " contention\n";
        } else {
            jobs = 1;
        }
    }

    auto work = [&](size_t task) {
        const size_t a = task / per_algo;
        const size_t i = task % per_algo;
        records[task] = run_one(manifest.instances[i], manifest.base_dir, algorithms[a], metric,
                                budget, options.verify_restoration);
    };

    const size_t total = records.size();
    if (jobs == 1) {
        for (size_t t = 0; t < total; ++t) work(t);
    } else {
        std::atomic<size_t> next{0};
        std::mutex failure_mutex;
        std::string failure;
        std::vector<std::thread> workers;
        workers.reserve(static_cast<size_t>(jobs));
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (;;) {
                    const size_t t = next.fetch_add(1);
                    if (t >= total) return;
                    try {
                        work(t);
                    } catch (const std::exception& ex) {
                        std::lock_guard<std::mutex> lock(failure_mutex);
                        if (failure.empty()) failure = ex.what();
                        return;
                    }
                }
            });
        }
        for (auto& w : workers) w.join();
        if (!failure.empty()) throw std::logic_error(failure);
    }
    return records;
}

std::vector<AggregateRow> aggregate(const std::vector<RunRecord>& records) {
    if (records.empty()) throw std::invalid_argument("aggregate needs at least one record");

    std::vector<AggregateRow> rows;
    std::map<std::string, size_t> index;
    struct Sums {
        long long solved = 0;
        double recursions = 0;
        double time_ns = 0;
    };
    std::vector<Sums> sums;

    for (const RunRecord& rec : records) {
        if (!rec.error.empty()) continue;
        auto [it, inserted] = index.try_emplace(rec.algorithm, rows.size());
        if (inserted) {
            rows.push_back({});
            rows.back().algorithm = rec.algorithm;
            sums.push_back({});
        }
        AggregateRow& row = rows[it->second];
        Sums& s = sums[it->second];
        ++row.total;
        if (rec.decision == Decision::undecided) {
            ++row.unsolved;
        } else {
            ++s.solved;
            s.recursions += static_cast<double>(rec.recursions);
            s.time_ns += static_cast<double>(rec.elapsed_ns);
        }
    }
    if (rows.empty()) throw std::invalid_argument("aggregate saw only error records");

    for (size_t i = 0; i < rows.size(); ++i) {
        rows[i].unsolved_fraction =
            rows[i].total ? static_cast<double>(rows[i].unsolved) / rows[i].total : 0.0;
        if (sums[i].solved > 0) {
            rows[i].mean_recursions_solved = sums[i].recursions / sums[i].solved;
            rows[i].mean_time_solved_ns = sums[i].time_ns / sums[i].solved;
        }
    }

    auto assign_ranks = [&rows](auto cost, auto set_rank) {
        std::vector<size_t> order(rows.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
            if (rows[x].unsolved != rows[y].unsolved) return rows[x].unsolved < rows[y].unsolved;
            return cost(rows[x]) < cost(rows[y]);
        });
        for (size_t r = 0; r < order.size(); ++r) set_rank(rows[order[r]], static_cast<int>(r) + 1);
    };
    assign_ranks([](const AggregateRow& r) { return r.mean_recursions_solved; },
                 [](AggregateRow& r, int rank) { r.rank_recursions = rank; });
    assign_ranks([](const AggregateRow& r) { return r.mean_time_solved_ns; },
                 [](AggregateRow& r, int rank) { r.rank_time = rank; });
    return rows;
}

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records) {
    out << kRecordCsvHeader << '\n';
    char buf[256];
    for (const RunRecord& rec : records) {
        const std::string_view decision =
            rec.error.empty() ? to_string(rec.decision) : std::string_view("error");
        std::snprintf(buf, sizeof buf, "%s,%d,%lld,%d,%" PRIu64 ",%s,%s,%" PRIu64 ",%" PRIu64
                                       ",%s\n",
                      rec.algorithm.c_str(), rec.v, rec.e, rec.instance_id, rec.seed,
                      std::string(to_string(rec.metric)).c_str(),
                      std::string(decision).c_str(), rec.recursions, rec.elapsed_ns,
                      std::string(to_string(rec.cutoff)).c_str());
        out << buf;
    }
}

void write_records_csv(const fs::path& file, const std::vector<RunRecord>& records) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot open " + file.string() + " for writing");
    write_records_csv(out, records);
}

std::vector<RunRecord> read_records_csv(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(file.string() + " is empty");
    if (line != kRecordCsvHeader)
        throw std::runtime_error(file.string() + " has an unexpected header");

    std::vector<RunRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 10)
            throw std::runtime_error("malformed record line: " + line);
        RunRecord rec;
        rec.algorithm = fields[0];
        rec.v = std::stoi(fields[1]);
        rec.e = std::stoll(fields[2]);
        rec.instance_id = std::stoi(fields[3]);
        rec.seed = std::stoull(fields[4]);
        rec.metric = metric_from_string(fields[5]);
        if (fields[6] == "error") rec.error = "error";
        else rec.decision = decision_from_string(fields[6]);
        rec.recursions = std::stoull(fields[7]);
        rec.elapsed_ns = std::stoull(fields[8]);
        rec.cutoff = cutoff_from_string(fields[9]);
        records.push_back(std::move(rec));
    }
    return records;
}

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
    out << "algorithm,total,unsolved,unsolved_fraction,mean_recursions_solved,"
           "mean_time_solved_ns,rank_recursions,rank_time\n";
    char buf[256];
    for (const AggregateRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%s,%lld,%lld,%.6f,%.3f,%.1f,%d,%d\n",
                      r.algorithm.c_str(), r.total, r.unsolved, r.unsolved_fraction,
                      r.mean_recursions_solved, r.mean_time_solved_ns, r.rank_recursions,
                      r.rank_time);
        out << buf;
    }
}

namespace {

uint64_t figure_cost(const RunRecord& rec, const FigureOptions& options) {
    if (rec.cutoff != Cutoff::none)
        return rec.metric == Metric::recursions ? options.recursion_ceiling
                                                : options.time_ceiling_ns;
    return rec.metric == Metric::recursions ? rec.recursions : rec.elapsed_ns;
}

const char* decision_color(const RunRecord& rec) {
    if (!rec.error.empty()) return "#9467bd";
    switch (rec.decision) {
        case Decision::hamiltonian: return "#1a9641";
        case Decision::non_hamiltonian: return "#d7191c";
        case Decision::undecided: return "#404040";
    }
    return "#000000";
}

void write_svg_scatter(const fs::path& file, const std::string& title,
                       const std::vector<std::pair<double, uint64_t>>& points,
                       const std::vector<const char*>& colors, double max_degree,
                       uint64_t ceiling) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot open " + file.string() + " for writing");
    const double w = 900, h = 600, ml = 70, mr = 20, mt = 40, mb = 50;
    const double log_max = std::log10(static_cast<double>(std::max<uint64_t>(ceiling, 10)));
    auto sx = [&](double degree) { return ml + (w - ml - mr) * degree / max_degree; };
    auto sy = [&](uint64_t cost) {
        const double lc = std::log10(static_cast<double>(std::max<uint64_t>(cost, 1)));
        return h - mb - (h - mt - mb) * std::min(lc / log_max, 1.0);
    };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"18\">"
        << title << "</text>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr << "\" y2=\""
        << h - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << h - mb
        << "\" stroke=\"black\"/>\n";
    for (int d = 0; d <= static_cast<int>(max_degree); d += 4) {
        out << "<text x=\"" << sx(d) << "\" y=\"" << h - mb + 20
            << "\" text-anchor=\"middle\" font-size=\"12\">" << d << "</text>\n";
    }
    for (int p = 0; p <= static_cast<int>(log_max); ++p) {
        out << "<text x=\"" << ml - 8 << "\" y=\"" << sy(static_cast<uint64_t>(std::pow(10, p)))
            << "\" text-anchor=\"end\" font-size=\"12\">1e" << p << "</text>\n";
    }
    out << "<text x=\"" << w / 2 << "\" y=\"" << h - 10
        << "\" text-anchor=\"middle\" font-size=\"14\">mean degree</text>\n";
    for (size_t i = 0; i < points.size(); ++i) {
        out << "<circle cx=\"" << sx(points[i].first) << "\" cy=\"" << sy(points[i].second)
            << "\" r=\"1.6\" fill=\"" << colors[i] << "\" fill-opacity=\"0.55\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace

void emit_figure_data(const std::vector<RunRecord>& records, const fs::path& out_dir,
                      const FigureOptions& options) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create " + out_dir.string());

    std::vector<std::string> algorithms;
    for (const RunRecord& rec : records)
        if (std::find(algorithms.begin(), algorithms.end(), rec.algorithm) == algorithms.end())
            algorithms.push_back(rec.algorithm);

    std::ofstream summary(out_dir / "summary_medians.csv");
    if (!summary)
        throw std::runtime_error("cannot write summary in " + out_dir.string());
    summary << "algorithm,mean_degree,median_cost\n";

    for (const std::string& algo : algorithms) {
        std::ofstream scatter(out_dir / ("scatter_" + algo + ".csv"));
        if (!scatter) throw std::runtime_error("cannot write scatter CSV for " + algo);
        scatter << "mean_degree,cost,decision\n";

        std::vector<std::pair<double, uint64_t>> points;
        std::vector<const char*> colors;
        std::map<long long, std::vector<uint64_t>> bins;  // keyed by edge count
        int v = 0;
        char buf[128];
        for (const RunRecord& rec : records) {
            if (rec.algorithm != algo) continue;
            v = rec.v;
            const double degree = 2.0 * static_cast<double>(rec.e) / rec.v;
            const uint64_t cost = figure_cost(rec, options);
            const std::string_view decision =
                rec.error.empty() ? to_string(rec.decision) : std::string_view("error");
            std::snprintf(buf, sizeof buf, "%.6f,%" PRIu64 ",%s\n", degree, cost,
                          std::string(decision).c_str());
            scatter << buf;
            points.emplace_back(degree, cost);
            colors.push_back(decision_color(rec));
            if (rec.error.empty()) bins[rec.e].push_back(cost);
        }
        for (auto& [e, costs] : bins) {
            std::sort(costs.begin(), costs.end());
            const size_t n = costs.size();
            const double median = n % 2 ? static_cast<double>(costs[n / 2])
                                        : 0.5 * (static_cast<double>(costs[n / 2 - 1]) +
                                                 static_cast<double>(costs[n / 2]));
            std::snprintf(buf, sizeof buf, "%s,%.6f,%.1f\n", algo.c_str(),
                          2.0 * static_cast<double>(e) / v, median);
            summary << buf;
        }
        const bool timed = !records.empty() && records.front().metric == Metric::time;
        write_svg_scatter(out_dir / ("scatter_" + algo + ".svg"), algo, points, colors,
                          v > 0 ? v - 1.0 : 1.0,
                          timed ? options.time_ceiling_ns : options.recursion_ceiling);
    }
}

}  // namespace hamcycle::bench
