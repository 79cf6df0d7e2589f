#pragma once

namespace hamcycle::phase {

// Analytic model for the probability that a random graph with v vertices and
// e edges is Hamiltonian. The edge count enters through the offset parameter
//
//     e = (1/2) v ln(v) + (1/2) v ln(ln(v)) + c v
//
// and the probability in the large-v limit is exp(-exp(-2c)). The offset is
// obtained in closed form (the relation is linear in c); non-integer e is
// accepted so degree-binned analyses can evaluate the model continuously.

// All three functions require v >= 3 and throw std::domain_error otherwise
// (ln(ln(v)) is non-positive or undefined below that).
double c_of(int v, double e);
double p_hamiltonian(int v, double e);

// ln(v) + ln(ln(v)): the mean degree around which Hamiltonicity flips.
double threshold_degree(int v);

}  // namespace hamcycle::phase
