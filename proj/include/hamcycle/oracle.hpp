#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hamcycle/graph.hpp"

namespace hamcycle::oracle {

// Ground truth by exhaustive permutation search. Deliberately plain: plain
// adjacency tests over alive edges, no shared code with the solver path.

inline constexpr int kMaxBruteforceVertices = 12;

// Canonical cycle form: starts at vertex 0, second vertex smaller than the
// last, so each undirected cycle appears exactly once.
using CycleSet = std::vector<std::vector<int>>;

// Visits every Hamiltonian cycle of the alive subgraph in canonical form;
// fn returning false stops the enumeration. Throws when v exceeds the
// brute-force bound.
void for_each_hamiltonian_cycle(const Graph& g,
                                const std::function<bool(std::span<const int>)>& fn);

bool is_hamiltonian_bruteforce(const Graph& g);
long long count_hamiltonian_cycles(const Graph& g);
CycleSet all_hamiltonian_cycles(const Graph& g);

bool cycle_uses_edge(std::span<const int> cycle, EdgeId e);

// Cycles containing every edge of must_use (and probe, when given). Backs the
// edge-deletion soundness tests for the pruning routines.
long long count_cycles_containing(const Graph& g, std::span<const EdgeId> must_use,
                                  std::optional<EdgeId> probe = {});

// Vertices whose deletion increases the number of connected components,
// found by per-vertex deletion plus a sweep. Accepts v up to 1000.
std::vector<int> articulation_points_bruteforce(const Graph& g);

}  // namespace hamcycle::oracle
