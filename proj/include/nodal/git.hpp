#pragma once

/*
 * Hilbert-Mumford weights for diagonal one-parameter subgroups and the exact
 * destabilizer search. A certificate (permutation, sorted integer weights,
 * mu <= 0) witnesses failure of proper stability; its absence only means no
 * destabilizer exists among the searched coordinate frames. For d > n+1 a
 * certificate forces specific coefficients of the permuted form to vanish,
 * which in turn forces a critical point at e0 with Hessian kernel of
 * dimension >= 2; verify_vanishing_consequence machine-checks that chain.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "nodal/poly.hpp"
#include "nodal/singularity.hpp"

namespace nodal {

// Exponents of a diagonal 1-PS diag(t^r0, ..., t^rn): sorted descending,
// summing to zero, not all zero (hence r0 > 0).
class WeightVector {
public:
    explicit WeightVector(std::vector<long long> r);

    const std::vector<long long>& values() const { return r_; }
    std::size_t size() const { return r_.size(); }
    long long operator[](std::size_t i) const { return r_[i]; }
    bool operator==(const WeightVector&) const = default;

private:
    std::vector<long long> r_;
};

// max over the support of f of <m, r>.
long long mu(const Form& f, const WeightVector& r);

struct DestabilizerCertificate {
    std::vector<int> permutation;  // applied to f via permute_variables
    WeightVector weight;
    long long mu_value;  // recomputed, always <= 0
};

struct CoordinateSearch {
    enum class Mode { AllPermutations, Sampled };

    Mode mode = Mode::AllPermutations;
    int transform_count = 0;    // Sampled: random unimodular coordinate changes
    std::uint64_t seed = 0;     // required when sampling
    int permutation_samples = 120;  // permutations per frame when (n+1)! is too large

    static CoordinateSearch all_permutations() { return {}; }
    static CoordinateSearch sampled(int transforms, std::uint64_t seed);
};

struct DestabilizerSearchResult {
    std::optional<DestabilizerCertificate> certificate;
    // Set when the certificate was found after a random coordinate change;
    // it is then valid for act(transform, f), not for f itself.
    std::optional<RationalMatrix> transform;
    long frames_searched = 0;
};

// Exact search over permuted (and optionally randomly transformed) diagonal
// frames. Feasibility of the mu <= 0 polytope on the r0 = 1 slice is decided
// by Fourier-Motzkin elimination over the rationals; a feasible rational
// point is cleared to an integer WeightVector. Deterministic: frames are
// scanned in lexicographic permutation order and the first hit is returned.
DestabilizerSearchResult find_diagonal_destabilizer(const Form& f,
                                                    const CoordinateSearch& search = {});

// One inequality sum_i a_i x_i <= b.
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Rational bound;
};

// Feasibility of a rational inequality system by Fourier-Motzkin
// elimination; returns a witness point on success. max_constraints guards
// the intermediate blowup.
std::optional<std::vector<Rational>> fm_feasible_point(std::vector<LinearConstraint> constraints,
                                                       int nvars, long max_constraints = 200000);

// The four inequality families behind the d > n+1 vanishing argument,
// evaluated without any precondition check.
struct WeightInequalityValues {
    long long family1;               // d*r0
    std::vector<long long> family2;  // (d-1)r0 + r_i,        0 < i <= n
    std::vector<long long> family3;  // (d-2)r0 + 2r_i,       0 < i < n
    std::vector<long long> family4;  // (d-2)r0 + r_i + r_j,  0 < i < j <= n
    bool all_strictly_positive() const;
    long long min_value() const;
};

WeightInequalityValues weight_inequality_values(const WeightVector& r, int n, int d);

// True iff every family value is strictly positive. Requires d > n+1; under
// that hypothesis a false return indicates a bug, not a property of r.
bool check_weight_inequalities(const WeightVector& r, int n, int d);

struct VanishingReport {
    bool coefficients_zero = false;
    std::vector<std::string> nonzero_coefficients;  // offending monomials, if any
    bool critical_at_e0 = false;
    int kernel_dim = 0;
    SingularityClass cls = SingularityClass::Smooth;
    bool all_pass() const {
        return coefficients_zero && critical_at_e0 && kernel_dim >= 2 &&
               cls == SingularityClass::Degenerate;
    }
};

// Checks, for d > n+1 and a valid certificate: the coefficients of z0^d,
// z0^{d-1}z_i, z0^{d-2}z_i^2 (i < n) and z0^{d-2}z_iz_j of the permuted form
// vanish; e0 is a critical point with Hessian kernel dimension >= 2; and the
// classifier reports DEGENERATE.
VanishingReport verify_vanishing_consequence(const Form& f, const DestabilizerCertificate& cert,
                                             const GuardLimits& limits = {});

}  // namespace nodal
