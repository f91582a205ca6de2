#pragma once

/*
 * Stabilizer-order probes. order_bound evaluates the divisibility bound
 * prod_{i=2}^{n+1} ((d-1)^{n+1} + (-1)^{i+1} (d-1)^{n+1-i}) for the order of
 * a finite stabilizer. The two probes bound the stabilizer from below:
 * monomial matrices with k-th-root-of-unity entries (a finite subgroup, so
 * its order divides the full order by Lagrange when that is finite), and the
 * dimension of diagonal trace-zero directions fixing f (positive means the
 * stabilizer contains a torus, hence is infinite).
 */

#include "nodal/poly.hpp"

namespace nodal {

struct StabilizerProbe {
    long long monomial_count = 0;
    int infinitesimal_dim = 0;
    bool torus_flagged() const { return infinitesimal_dim > 0; }
};

// Exact product, arbitrary precision. n >= 1, d >= 2.
BigInt order_bound(int n, int d);

// dim { r : sum r_i = 0, <m, r> = 0 for all support m } by exact rank.
int infinitesimal_diagonal_stabilizer(const Form& f);

// Number of matrices g = (permutation) * diag(zeta^a_0..zeta^a_n), zeta a
// primitive k-th root of unity, with det g = 1 and act(g, f) = f. Root-of-
// unity arithmetic is exact on exponents mod k; no floating point.
long long monomial_stabilizer_count(const Form& f, int root_order);

StabilizerProbe probe_stabilizer(const Form& f, int root_order);

}  // namespace nodal
