#include <doctest.h>

#include <set>
#include <stdexcept>

#include "builders.hpp"
#include "hamcycle/oracle.hpp"
#include "hamcycle/rng.hpp"

using namespace hamcycle;
using namespace hamcycle::testing;

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

TEST_CASE("decision basics") {
    Graph k4 = complete_graph(4);
    CHECK(oracle::is_hamiltonian_bruteforce(k4));
    CHECK_FALSE(oracle::is_hamiltonian_bruteforce(bowtie_graph()));
    CHECK_FALSE(oracle::is_hamiltonian_bruteforce(two_triangles()));
    Graph k2(2, {{0, 1}});
    CHECK_FALSE(oracle::is_hamiltonian_bruteforce(k2));
}

TEST_CASE("cycle counting") {
    CHECK(oracle::count_hamiltonian_cycles(complete_graph(4)) == 3);
    CHECK(oracle::count_hamiltonian_cycles(complete_graph(5)) == 12);
    CHECK(oracle::count_hamiltonian_cycles(cycle_graph(6)) == 1);
    for (int v = 3; v <= 8; ++v)
        CHECK(oracle::count_hamiltonian_cycles(complete_graph(v)) == factorial(v - 1) / 2);
}

TEST_CASE("canonical cycles are unique and valid") {
    const auto cycles = oracle::all_hamiltonian_cycles(complete_graph(5));
    CHECK(cycles.size() == 12);
    std::set<std::vector<int>> unique(cycles.begin(), cycles.end());
    CHECK(unique.size() == cycles.size());
    for (const auto& c : cycles) {
        CHECK(c.size() == 5);
        CHECK(c.front() == 0);
        CHECK(c[1] < c.back());
    }
}

TEST_CASE("count agrees with decision") {
    SplitMix64 rng(0x0AC1E);
    for (int round = 0; round < 300; ++round) {
        const int v = 3 + static_cast<int>(rng.below(6));
        const long long e = static_cast<long long>(rng.below(max_edge_count(v) + 1));
        Graph g = random_graph(v, e, rng.next());
        CHECK(oracle::is_hamiltonian_bruteforce(g) ==
              (oracle::count_hamiltonian_cycles(g) > 0));
    }
}

TEST_CASE("size guard") {
    Graph big(13, {});
    CHECK_THROWS_AS(oracle::is_hamiltonian_bruteforce(big), std::invalid_argument);
    CHECK_THROWS_AS(oracle::count_hamiltonian_cycles(big), std::invalid_argument);
}

TEST_CASE("edge-restricted counting") {
    // K4 cycles through a fixed edge: two of the three.
    CHECK(oracle::count_cycles_containing(complete_graph(4), {}, edge_id(0, 1)) == 2);
    const std::vector<EdgeId> pair = {edge_id(0, 1), edge_id(2, 3)};
    CHECK(oracle::count_cycles_containing(complete_graph(4), pair) == 2);
    CHECK(oracle::count_cycles_containing(cycle_graph(5), {}, edge_id(0, 1)) == 1);
}

TEST_CASE("articulation points by deletion") {
    CHECK(oracle::articulation_points_bruteforce(bowtie_graph()) == std::vector<int>{2});
    CHECK(oracle::articulation_points_bruteforce(cycle_graph(5)).empty());
    CHECK(oracle::articulation_points_bruteforce(path_graph(4)) == std::vector<int>{1, 2});
    Graph isolated(4, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(oracle::articulation_points_bruteforce(isolated).empty());
}
