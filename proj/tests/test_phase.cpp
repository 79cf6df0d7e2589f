#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hamcycle/graph.hpp"
#include "hamcycle/phase.hpp"

using namespace hamcycle;

// Independent route: evaluate the defining relation in extended precision and
// compare the closed-form inversion against it.
namespace {

long double c_reference(int v, long double e) {
    const long double vd = v;
    return (e - 0.5L * vd * std::log(vd) - 0.5L * vd * std::log(std::log(vd))) / vd;
}

}  // namespace

TEST_CASE("offset parameter c") {
    // Frozen from the extended-precision oracle.
    CHECK(phase::c_of(32, 0.0) == doctest::Approx(-2.3543304473).epsilon(1e-9));
    CHECK(phase::c_of(32, 496.0) == doctest::Approx(13.1456695527).epsilon(1e-9));
    CHECK(phase::c_of(32, 75.34) == doctest::Approx(0.0).epsilon(1e-3));
    CHECK(std::abs(phase::c_of(32, 75.34)) < 1e-4);

    for (int v : {3, 8, 16, 32, 100})
        for (double e : {0.0, 10.0, 75.34, 300.0})
            CHECK(phase::c_of(v, e) ==
                  doctest::Approx(static_cast<double>(c_reference(v, e))).epsilon(1e-12));

    CHECK_THROWS_AS(phase::c_of(2, 1.0), std::domain_error);
    CHECK_THROWS_AS(phase::c_of(1, 0.0), std::domain_error);
}

TEST_CASE("probability of Hamiltonicity") {
    // At the threshold the model sits at exp(-1).
    const double e_threshold = 0.5 * 32 * std::log(32.0) + 0.5 * 32 * std::log(std::log(32.0));
    CHECK(phase::p_hamiltonian(32, e_threshold) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(phase::p_hamiltonian(32, 75.34) == doctest::Approx(0.368).epsilon(1e-3));

    CHECK(phase::p_hamiltonian(32, 0.0) < 1e-40);
    CHECK(phase::p_hamiltonian(32, 496.0) > 0.999999);

    // Strictly increasing in e for fixed v.
    for (int v : {3, 16, 32}) {
        double prev = -1.0;
        for (double e = 0.0; e <= max_edge_count(v); e += 0.5) {
            const double p = phase::p_hamiltonian(v, e);
            CHECK(p > prev);
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
            prev = p;
        }
    }
}

TEST_CASE("threshold degree") {
    CHECK(phase::threshold_degree(32) == doctest::Approx(4.7086608947).epsilon(1e-9));
    CHECK(phase::threshold_degree(16) == doctest::Approx(3.7923701628).epsilon(1e-9));
    CHECK(phase::threshold_degree(24) == doctest::Approx(4.3343228368).epsilon(1e-9));
    CHECK_THROWS_AS(phase::threshold_degree(2), std::domain_error);

    // Consistency between the two parameterizations: the edge count at c = 0
    // carries exactly the threshold mean degree.
    for (int v : {3, 16, 24, 32, 200}) {
        const double e_at_zero =
            0.5 * v * std::log(static_cast<double>(v)) +
            0.5 * v * std::log(std::log(static_cast<double>(v)));
        CHECK(std::abs(phase::c_of(v, e_at_zero)) < 1e-12);
        CHECK(phase::threshold_degree(v) * v / 2.0 == doctest::Approx(e_at_zero).epsilon(1e-12));
    }
}
