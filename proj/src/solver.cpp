#include "hamcycle/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "hamcycle/checks.hpp"

namespace hamcycle {

namespace {

using Clock = std::chrono::steady_clock;

void collect_candidates(const Graph& g, int head, const std::vector<char>& on_path,
                        Heuristic heuristic, std::vector<int>& out) {
    out.clear();
    for (int ei : g.incident(head)) {
        if (!g.edge(ei).alive) continue;
        const int w = g.other_endpoint(ei, head);
        if (!on_path[static_cast<size_t>(w)]) out.push_back(w);
    }
    if (heuristic == Heuristic::high) {
        std::sort(out.begin(), out.end(), [&g](int x, int y) {
            if (g.degree(x) != g.degree(y)) return g.degree(x) > g.degree(y);
            return x < y;
        });
    } else if (heuristic == Heuristic::low) {
        std::sort(out.begin(), out.end(), [&g](int x, int y) {
            if (g.degree(x) != g.degree(y)) return g.degree(x) < g.degree(y);
            return x < y;
        });
    }
}

struct Search {
    Graph& g;
    const AlgorithmConfig& cfg;
    const Budget& budget;
    SearchTrace* trace;
    Clock::time_point start_time;

    UndoJournal journal;
    std::vector<int> path;
    std::vector<char> on_path;
    std::vector<std::vector<int>> candidate_buf;  // indexed by depth
    uint64_t recursions = 0;
    Cutoff cutoff = Cutoff::none;

    enum class Step { found, dead, abort };

    Search(Graph& graph, const AlgorithmConfig& config, const Budget& b, SearchTrace* t,
           Clock::time_point t0)
        : g(graph), cfg(config), budget(b), trace(t), start_time(t0) {
        const size_t v = static_cast<size_t>(g.vertex_count());
        on_path.assign(v, 0);
        path.reserve(v);
        candidate_buf.resize(v + 1);
    }

    uint64_t elapsed_ns() const {
        return static_cast<uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start_time)
                .count());
    }

    // Enabled checks in cheap-to-expensive order on the residual problem.
    bool checks_decide() {
        const ResidualView view = ResidualView::around_path(g, path);
        if (cfg.check_degree && degree_check(g, view).decided()) return true;
        if (cfg.check_premature_closure && premature_closure_check(g).decided()) return true;
        if (cfg.check_disconnected && disconnectedness_check(g, view).decided()) return true;
        if (cfg.check_one_connected && one_connectedness_check(g, view).decided()) return true;
        return false;
    }

    Step extend() {
        if (recursions >= budget.max_recursions) {
            cutoff = Cutoff::recursions;
            return Step::abort;
        }
        ++recursions;
        if (budget.max_time_ns != Budget::kUnlimited && (recursions & 0xFF) == 0 &&
            elapsed_ns() > budget.max_time_ns) {
            cutoff = Cutoff::time;
            return Step::abort;
        }

        const int v = g.vertex_count();
        if (static_cast<int>(path.size()) == v) {
            // Closure is tested against the original edge set; the closing
            // edge may have been pruned along this branch.
            return g.has_original_edge(path.back(), path.front()) ? Step::found : Step::dead;
        }

        journal.push_frame();
        if (path.size() >= 2) {
            const int ei = g.edge_index(path[path.size() - 2], path.back());
            if (!g.edge(ei).required) {
                if (trace) trace->on_mark(g, g.id_of(ei), MarkOrigin::path_edge, path);
                journal.mark_required(g, ei);
            }
        }

        bool dead = false;
        if (cfg.prune_solution) {
            dead = solution_prune(g, path, journal, trace).contradiction;
        }
        if (!dead && (cfg.prune_neighbour || cfg.prune_path)) {
            dead = prune_to_fixpoint(g, {cfg.prune_neighbour, cfg.prune_path}, journal, trace,
                                     path)
                       .contradiction;
        }
        if (!dead && cfg.any_check()) dead = checks_decide();

        if (!dead) {
            std::vector<int>& candidates = candidate_buf[path.size()];
            collect_candidates(g, path.back(), on_path, cfg.heuristic, candidates);
            for (int c : candidates) {
                path.push_back(c);
                on_path[static_cast<size_t>(c)] = 1;
                const Step r = extend();
                if (r != Step::dead) return r;  // frames unwound by the caller
                path.pop_back();
                on_path[static_cast<size_t>(c)] = 0;
            }
        }
        journal.pop_frame(g);
        return Step::dead;
    }
};

void validate_budget(const Budget& b) {
    if (b.max_recursions == 0 || b.max_time_ns == 0)
        throw std::invalid_argument("budget limits must be positive (use kUnlimited)");
}

}  // namespace

SolveOutcome solve(Graph& g, const AlgorithmConfig& cfg, const Budget& budget,
                   SearchTrace* trace) {
    validate_budget(budget);
    const auto t0 = Clock::now();
    SolveOutcome out;

    const int v = g.vertex_count();
    if (v < 3) {
        // A simple graph holds no cycle on fewer than three vertices.
        out.decision = Decision::non_hamiltonian;
        out.elapsed_ns = static_cast<uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count());
        return out;
    }

    Search search(g, cfg, budget, trace, t0);

    // Preprocessing phase: removals here contribute zero recursions.
    bool pre_decided = false;
    if (cfg.any_pruning() || cfg.any_check()) {
        search.journal.push_frame();
        if (cfg.prune_neighbour || cfg.prune_path) {
            pre_decided = prune_to_fixpoint(g, {cfg.prune_neighbour, cfg.prune_path},
                                            search.journal, trace)
                              .contradiction;
        }
        if (!pre_decided && cfg.any_check()) pre_decided = search.checks_decide();
    }

    Search::Step result = Search::Step::dead;
    if (!pre_decided) {
        const int s = start_vertex(g, cfg.heuristic);
        search.path.push_back(s);
        search.on_path[static_cast<size_t>(s)] = 1;
        result = search.extend();
    }
    search.journal.pop_all(g);

    out.recursions = search.recursions;
    if (result == Search::Step::found) {
        out.decision = Decision::hamiltonian;
        out.witness = search.path;
        if (!verify_witness(g, *out.witness))
            throw std::logic_error("internal error: invalid witness produced");
    } else if (result == Search::Step::abort) {
        out.decision = Decision::undecided;
        out.cutoff = search.cutoff;
    } else {
        out.decision = Decision::non_hamiltonian;
    }
    out.elapsed_ns = static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count());
    return out;
}

std::vector<int> next_candidates(const Graph& g, std::span<const int> path,
                                 Heuristic heuristic) {
    if (path.empty()) throw std::invalid_argument("next_candidates needs a non-empty path");
    std::vector<char> on_path(static_cast<size_t>(g.vertex_count()), 0);
    for (int x : path) on_path[static_cast<size_t>(x)] = 1;
    std::vector<int> out;
    collect_candidates(g, path.back(), on_path, heuristic, out);
    return out;
}

int start_vertex(const Graph& g, Heuristic heuristic) {
    if (heuristic == Heuristic::none) return 0;
    int best = 0;
    for (int x = 1; x < g.vertex_count(); ++x) {
        if (heuristic == Heuristic::high ? g.degree(x) > g.degree(best)
                                         : g.degree(x) < g.degree(best))
            best = x;
    }
    return best;
}

bool verify_witness(const Graph& g, std::span<const int> cycle) {
    const int v = g.vertex_count();
    if (static_cast<int>(cycle.size()) != v || v < 3) return false;
    std::vector<char> seen(static_cast<size_t>(v), 0);
    for (int x : cycle) {
        if (x < 0 || x >= v || seen[static_cast<size_t>(x)]) return false;
        seen[static_cast<size_t>(x)] = 1;
    }
    for (size_t i = 0; i + 1 < cycle.size(); ++i)
        if (!g.has_original_edge(cycle[i], cycle[i + 1])) return false;
    return g.has_original_edge(cycle.back(), cycle.front());
}

AlgorithmConfig preset(std::string_view name) {
    AlgorithmConfig cfg;
    cfg.name = std::string(name);
    if (name == "depth_first") {
        cfg.heuristic = Heuristic::none;
    } else if (name == "cetal") {
        cfg.heuristic = Heuristic::high;
    } else if (name == "van_horn") {
        cfg.heuristic = Heuristic::low;
    } else if (name == "martello") {
        cfg.heuristic = Heuristic::low;
        cfg.prune_solution = true;
        cfg.prune_path = true;
    } else if (name == "rubin") {
        cfg.heuristic = Heuristic::none;
        cfg.prune_solution = true;
        cfg.prune_path = true;
        cfg.prune_neighbour = true;
        cfg.check_degree = true;
        cfg.check_premature_closure = true;
        cfg.check_disconnected = true;
        cfg.check_one_connected = true;
    } else if (name == "vacul") {
        cfg.heuristic = Heuristic::none;
        cfg.prune_solution = true;
        cfg.prune_path = true;
        cfg.prune_neighbour = true;
        cfg.check_degree = true;
        cfg.check_disconnected = true;
        cfg.check_one_connected = true;
    } else {
        throw std::invalid_argument("unknown preset " + std::string(name));
    }
    return cfg;
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"depth_first", "cetal", "van_horn",
                                                   "martello",    "rubin", "vacul"};
    return names;
}

std::vector<AlgorithmConfig> all_presets() {
    std::vector<AlgorithmConfig> out;
    for (const std::string& n : preset_names()) out.push_back(preset(n));
    return out;
}

std::string_view to_string(Heuristic h) {
    switch (h) {
        case Heuristic::none: return "none";
        case Heuristic::high: return "high";
        case Heuristic::low: return "low";
    }
    return "?";
}

std::string_view to_string(Decision d) {
    switch (d) {
        case Decision::hamiltonian: return "hamiltonian";
        case Decision::non_hamiltonian: return "non_hamiltonian";
        case Decision::undecided: return "undecided";
    }
    return "?";
}

std::string_view to_string(Cutoff c) {
    switch (c) {
        case Cutoff::none: return "none";
        case Cutoff::recursions: return "recursions";
        case Cutoff::time: return "time";
    }
    return "?";
}

Heuristic heuristic_from_string(std::string_view s) {
    if (s == "none") return Heuristic::none;
    if (s == "high") return Heuristic::high;
    if (s == "low") return Heuristic::low;
    throw std::invalid_argument("unknown heuristic " + std::string(s));
}

Decision decision_from_string(std::string_view s) {
    if (s == "hamiltonian") return Decision::hamiltonian;
    if (s == "non_hamiltonian") return Decision::non_hamiltonian;
    if (s == "undecided") return Decision::undecided;
    throw std::invalid_argument("unknown decision " + std::string(s));
}

Cutoff cutoff_from_string(std::string_view s) {
    if (s == "none") return Cutoff::none;
    if (s == "recursions") return Cutoff::recursions;
    if (s == "time") return Cutoff::time;
    throw std::invalid_argument("unknown cutoff " + std::string(s));
}

}  // namespace hamcycle
