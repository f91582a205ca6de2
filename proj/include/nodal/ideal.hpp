#pragma once

/*
 * Buchberger's algorithm over exact rationals, degrevlex, with the
 * only-origin decision (affine zero set contained in {0}) that drives the
 * singularity trichotomy. Deterministic throughout: the pair queue, reducer
 * selection and final basis order admit no tie-break freedom.
 */

#include <chrono>
#include <optional>
#include <span>
#include <vector>

#include "nodal/poly.hpp"

namespace nodal {

// Caps for Buchberger; hitting one raises ResourceGuardError, never a wrong
// answer.
struct GuardLimits {
    long max_pairs = 200000;
    int max_degree = 60;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct Ideal {
    int nvars;
    std::vector<Poly> generators;

    Ideal(int nvars_, std::vector<Poly> gens);
};

class GroebnerBasis {
public:
    GroebnerBasis(int nvars, std::vector<Poly> basis) : nvars_(nvars), basis_(std::move(basis)) {}

    int nvars() const { return nvars_; }
    const std::vector<Poly>& basis() const { return basis_; }
    std::size_t size() const { return basis_.size(); }

    // One polynomial per line in the canonical grammar.
    std::string to_text() const;

private:
    int nvars_;
    std::vector<Poly> basis_;
};

// Full multivariate division remainder: no monomial of the result is
// divisible by any basis lead term. Deterministic reducer choice (first
// match in basis order). Inhomogeneous input is fine.
Poly normal_form(const Poly& f, std::span<const Poly> basis);

// Reduced Groebner basis: monic, pairwise tail-reduced, sorted by
// (degree, lead monomial). Ideal membership of every input generator is
// re-verified before returning.
GroebnerBasis buchberger(const Ideal& ideal, const GuardLimits& limits = {});

// For a homogeneous ideal given by its Groebner basis: true iff the affine
// zero set over C is contained in {0}, decided by pure powers of every
// variable among the lead terms. Throws on inhomogeneous input.
bool only_origin(const GroebnerBasis& gb);

}  // namespace nodal
