#include <doctest.h>

#include <algorithm>

#include "builders.hpp"
#include "hamcycle/oracle.hpp"
#include "hamcycle/solver.hpp"
#include "hamcycle/rng.hpp"

using namespace hamcycle;
using namespace hamcycle::testing;

TEST_CASE("preset feature matrix") {
    const AlgorithmConfig df = preset("depth_first");
    CHECK(df.heuristic == Heuristic::none);
    CHECK_FALSE(df.any_pruning());
    CHECK_FALSE(df.any_check());

    CHECK(preset("cetal").heuristic == Heuristic::high);
    CHECK_FALSE(preset("cetal").any_pruning());
    CHECK(preset("van_horn").heuristic == Heuristic::low);

    const AlgorithmConfig martello = preset("martello");
    CHECK(martello.heuristic == Heuristic::low);
    CHECK(martello.prune_solution);
    CHECK(martello.prune_path);
    CHECK_FALSE(martello.prune_neighbour);
    CHECK_FALSE(martello.any_check());

    const AlgorithmConfig rubin = preset("rubin");
    CHECK(rubin.heuristic == Heuristic::none);
    CHECK(rubin.prune_solution);
    CHECK(rubin.prune_path);
    CHECK(rubin.prune_neighbour);
    CHECK(rubin.check_degree);
    CHECK(rubin.check_premature_closure);
    CHECK(rubin.check_disconnected);
    CHECK(rubin.check_one_connected);

    const AlgorithmConfig vacul = preset("vacul");
    CHECK(vacul.heuristic == Heuristic::none);
    CHECK(vacul.prune_solution);
    CHECK(vacul.prune_path);
    CHECK(vacul.prune_neighbour);
    CHECK(vacul.check_degree);
    CHECK_FALSE(vacul.check_premature_closure);
    CHECK(vacul.check_disconnected);
    CHECK(vacul.check_one_connected);

    CHECK_THROWS_AS(preset("dijkstra"), std::invalid_argument);
    CHECK(preset_names().size() == 6);
    CHECK(all_presets().size() == 6);
}

TEST_CASE("depth-first walks K4 in four recursions") {
    Graph k4 = complete_graph(4);
    const SolveOutcome out = solve(k4, preset("depth_first"), Budget::unlimited());
    CHECK(out.decision == Decision::hamiltonian);
    REQUIRE(out.witness.has_value());
    CHECK(*out.witness == std::vector<int>{0, 1, 2, 3});
    CHECK(out.recursions == 4);
    CHECK(out.cutoff == Cutoff::none);
}

TEST_CASE("rubin decides a path graph without recursing") {
    Graph p4 = path_graph(4);
    const SolveOutcome out = solve(p4, preset("rubin"), Budget::unlimited());
    CHECK(out.decision == Decision::non_hamiltonian);
    CHECK(out.recursions <= 1);
}

TEST_CASE("every preset finds the unique cycle of C5") {
    for (const AlgorithmConfig& cfg : all_presets()) {
        Graph c5 = cycle_graph(5);
        const SolveOutcome out = solve(c5, cfg, Budget::unlimited());
        CHECK(out.decision == Decision::hamiltonian);
        REQUIRE(out.witness.has_value());
        CHECK(verify_witness(c5, *out.witness));
    }
}

TEST_CASE("graphs below three vertices are never Hamiltonian") {
    for (const AlgorithmConfig& cfg : all_presets()) {
        Graph k2(2, {{0, 1}});
        CHECK(solve(k2, cfg, Budget::unlimited()).decision == Decision::non_hamiltonian);
        Graph k1(1, {});
        CHECK(solve(k1, cfg, Budget::unlimited()).decision == Decision::non_hamiltonian);
    }
}

TEST_CASE("next_candidates ordering") {
    // Head 0 sees 1 (degree 3), 2 (degree 2), 3 (degree 2).
    Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {3, 5}});
    const std::vector<int> path = {0};
    CHECK(next_candidates(g, path, Heuristic::none) == std::vector<int>{1, 2, 3});
    CHECK(next_candidates(g, path, Heuristic::high) == std::vector<int>{1, 2, 3});
    CHECK(next_candidates(g, path, Heuristic::low) == std::vector<int>{2, 3, 1});

    // Visited vertices and dead edges drop out.
    Graph k4 = complete_graph(4);
    const std::vector<int> path2 = {3, 0};
    CHECK(next_candidates(k4, path2, Heuristic::none) == std::vector<int>{1, 2});
    k4.remove_edge(edge_id(0, 1));
    CHECK(next_candidates(k4, path2, Heuristic::none) == std::vector<int>{2});
}

TEST_CASE("start_vertex picks by heuristic") {
    Graph k4 = complete_graph(4);
    CHECK(start_vertex(k4, Heuristic::none) == 0);
    CHECK(start_vertex(k4, Heuristic::high) == 0);
    CHECK(start_vertex(k4, Heuristic::low) == 0);

    Graph bowtie = bowtie_graph();
    CHECK(start_vertex(bowtie, Heuristic::high) == 2);

    Graph star(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    CHECK(start_vertex(star, Heuristic::low) == 3);
    CHECK(start_vertex(star, Heuristic::high) == 0);
}

TEST_CASE("solver state restoration") {
    SplitMix64 rng(0x9E57);
    for (const AlgorithmConfig& cfg : all_presets()) {
        for (int round = 0; round < 60; ++round) {
            const int v = 4 + static_cast<int>(rng.below(6));
            const long long e = static_cast<long long>(rng.below(max_edge_count(v) + 1));
            Graph g = random_graph(v, e, rng.next());
            const Graph snapshot = g;
            (void)solve(g, cfg, Budget::unlimited());
            CHECK(g == snapshot);
        }
    }
}

TEST_CASE("all presets agree with the oracle on random small graphs") {
    SplitMix64 rng(0x0DDB411);
    const auto presets = all_presets();
    for (int round = 0; round < 500; ++round) {
        const int v = 3 + static_cast<int>(rng.below(6));
        const long long e = static_cast<long long>(rng.below(max_edge_count(v) + 1));
        Graph g = random_graph(v, e, rng.next());
        const bool expected = oracle::is_hamiltonian_bruteforce(g);
        for (const AlgorithmConfig& cfg : presets) {
            const SolveOutcome out = solve(g, cfg, Budget::unlimited());
            REQUIRE(out.decision != Decision::undecided);
            CHECK((out.decision == Decision::hamiltonian) == expected);
            if (out.witness) CHECK(verify_witness(g, *out.witness));
        }
    }
}

TEST_CASE("budgets cut off and stay monotone") {
    // Depth-first needs seven recursions to walk K7.
    Graph g = complete_graph(7);
    const SolveOutcome full = solve(g, preset("depth_first"), Budget::unlimited());
    CHECK(full.decision == Decision::hamiltonian);

    const SolveOutcome tight = solve(g, preset("depth_first"), Budget::recursions_only(3));
    CHECK(tight.decision == Decision::undecided);
    CHECK(tight.cutoff == Cutoff::recursions);
    CHECK(tight.recursions == 3);

    // Decided under budget B stays decided with the same count for >= B.
    const SolveOutcome exact = solve(g, preset("depth_first"),
                                     Budget::recursions_only(full.recursions));
    CHECK(exact.decision == Decision::hamiltonian);
    CHECK(exact.recursions == full.recursions);

    const SolveOutcome bigger = solve(g, preset("depth_first"),
                                      Budget::recursions_only(full.recursions * 10));
    CHECK(bigger.decision == full.decision);
    CHECK(bigger.recursions == full.recursions);

    CHECK_THROWS_AS(solve(g, preset("depth_first"), Budget{0, 1}), std::invalid_argument);
}

TEST_CASE("undecided outcomes always carry a cutoff") {
    SplitMix64 rng(0x7E57);
    for (int round = 0; round < 100; ++round) {
        const int v = 6 + static_cast<int>(rng.below(4));
        const long long e = static_cast<long long>(rng.below(max_edge_count(v) + 1));
        Graph g = random_graph(v, e, rng.next());
        const SolveOutcome out = solve(g, preset("cetal"), Budget::recursions_only(5));
        CHECK((out.decision == Decision::undecided) == (out.cutoff != Cutoff::none));
    }
}

TEST_CASE("determinism across repeated solves") {
    SplitMix64 rng(0xD17E);
    for (const AlgorithmConfig& cfg : all_presets()) {
        for (int round = 0; round < 40; ++round) {
            const int v = 5 + static_cast<int>(rng.below(5));
            const long long e = static_cast<long long>(rng.below(max_edge_count(v) + 1));
            Graph g = random_graph(v, e, rng.next());
            const SolveOutcome a = solve(g, cfg, {1000, Budget::kUnlimited});
            const SolveOutcome b = solve(g, cfg, {1000, Budget::kUnlimited});
            CHECK(a.decision == b.decision);
            CHECK(a.recursions == b.recursions);
            CHECK(a.witness == b.witness);
            CHECK(a.cutoff == b.cutoff);
        }
    }
}

TEST_CASE("recursion metering counts extend entries only") {
    // Preprocessing decides this one: zero recursions.
    Graph p5 = path_graph(5);
    CHECK(solve(p5, preset("vacul"), Budget::unlimited()).recursions == 0);

    // C5 under any preset: one entry per vertex plus the closing entry.
    for (const AlgorithmConfig& cfg : all_presets()) {
        Graph c5 = cycle_graph(5);
        CHECK(solve(c5, cfg, Budget::unlimited()).recursions == 5);
    }
}

TEST_CASE("witness verification rejects non-cycles") {
    Graph k4 = complete_graph(4);
    CHECK(verify_witness(k4, std::vector<int>{0, 1, 2, 3}));
    CHECK_FALSE(verify_witness(k4, std::vector<int>{0, 1, 2}));
    CHECK_FALSE(verify_witness(k4, std::vector<int>{0, 1, 1, 2}));
    Graph c4 = cycle_graph(4);
    CHECK_FALSE(verify_witness(c4, std::vector<int>{0, 1, 3, 2}));
}
