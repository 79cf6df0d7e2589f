#include "hamcycle/phase.hpp"

#include <cmath>
#include <stdexcept>

namespace hamcycle::phase {

namespace {

void require_v(int v) {
    if (v < 3) throw std::domain_error("phase model requires v >= 3");
}

}  // namespace

double c_of(int v, double e) {
    require_v(v);
    const double vd = static_cast<double>(v);
    return (e - 0.5 * vd * std::log(vd) - 0.5 * vd * std::log(std::log(vd))) / vd;
}

double p_hamiltonian(int v, double e) {
    const double c = c_of(v, e);
    return std::exp(-std::exp(-2.0 * c));
}

double threshold_degree(int v) {
    require_v(v);
    return std::log(static_cast<double>(v)) + std::log(std::log(static_cast<double>(v)));
}

}  // namespace hamcycle::phase
