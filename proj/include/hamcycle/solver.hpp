#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamcycle/graph.hpp"
#include "hamcycle/pruning.hpp"

namespace hamcycle {

enum class Heuristic { none, high, low };

// A solver configuration: branching heuristic plus individually toggled
// pruning routines and non-Hamiltonicity checks. The six presets assemble the
// historical algorithms out of these shared subroutines.
struct AlgorithmConfig {
    std::string name = "custom";
    Heuristic heuristic = Heuristic::none;
    bool prune_neighbour = false;
    bool prune_path = false;
    bool prune_solution = false;
    bool check_degree = false;
    bool check_premature_closure = false;
    bool check_disconnected = false;
    bool check_one_connected = false;

    bool any_pruning() const { return prune_neighbour || prune_path || prune_solution; }
    bool any_check() const {
        return check_degree || check_premature_closure || check_disconnected ||
               check_one_connected;
    }
};

// depth_first, cetal, van_horn, martello, rubin, vacul.
AlgorithmConfig preset(std::string_view name);
const std::vector<std::string>& preset_names();
std::vector<AlgorithmConfig> all_presets();

struct Budget {
    static constexpr uint64_t kUnlimited = std::numeric_limits<uint64_t>::max();

    uint64_t max_recursions = 100'000;
    uint64_t max_time_ns = 100'000'000;

    static Budget unlimited() { return {kUnlimited, kUnlimited}; }
    static Budget recursions_only(uint64_t n) { return {n, kUnlimited}; }
    static Budget time_only(uint64_t ns) { return {kUnlimited, ns}; }
};

enum class Decision { hamiltonian, non_hamiltonian, undecided };
enum class Cutoff { none, recursions, time };

struct SolveOutcome {
    Decision decision = Decision::undecided;
    std::optional<std::vector<int>> witness;
    uint64_t recursions = 0;
    uint64_t elapsed_ns = 0;
    Cutoff cutoff = Cutoff::none;

    bool decided() const { return decision != Decision::undecided; }
};

/// Decides Hamiltonicity of g under the given configuration and budget.
///
/// One recursion is one entry into the extend-path step; placing the start
/// vertex counts as the first. Configurations with any pruning or check also
/// run them once on the whole graph before recursing, so trivially dead
/// graphs exit with zero recursions. A Hamiltonian witness is validated
/// against the original edge set before returning, and the graph is restored
/// to its input state (all journal frames popped) no matter the outcome.
SolveOutcome solve(Graph& g, const AlgorithmConfig& cfg, const Budget& budget = {},
                   SearchTrace* trace = nullptr);

// Unvisited live neighbors of the path head: heuristic none keeps the
// adjacency order, high/low sort by live degree (ties by ascending id).
std::vector<int> next_candidates(const Graph& g, std::span<const int> path, Heuristic heuristic);

// none: vertex 0; high/low: extreme live degree, ties by lowest id.
int start_vertex(const Graph& g, Heuristic heuristic);

// True iff cycle visits every vertex exactly once and every step (and the
// closure) is an original edge of g.
bool verify_witness(const Graph& g, std::span<const int> cycle);

std::string_view to_string(Heuristic h);
std::string_view to_string(Decision d);
std::string_view to_string(Cutoff c);
Heuristic heuristic_from_string(std::string_view s);
Decision decision_from_string(std::string_view s);
Cutoff cutoff_from_string(std::string_view s);

}  // namespace hamcycle
