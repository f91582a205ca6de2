#pragma once

/*
 * The smooth / nodal / degenerate trichotomy. A hypersurface is smooth when
 * the partials have no common zero away from the origin; it has at worst
 * simple nodes when, in addition to a singular point existing, every
 * singular point has a Hessian of corank exactly one. Corank >= 2 at some
 * singular point is the degenerate case, detected through the ideal of
 * n x n Hessian minors adjoined to the Jacobian ideal.
 */

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nodal/ideal.hpp"
#include "nodal/poly.hpp"

namespace nodal {

enum class SingularityClass { Smooth, Nodal, Degenerate };

std::string to_string(SingularityClass c);

struct PointCertificate {
    std::vector<Rational> point;
    bool critical = false;
    std::optional<int> kernel_dim;
};

struct SingularityReport {
    SingularityClass cls;
    GroebnerBasis jacobian_gb;
    std::optional<GroebnerBasis> nonnode_gb;  // absent when smooth
    std::vector<PointCertificate> point_certificates;
};

// (jacobian, nonnode): the Jacobian ideal, and the Jacobian ideal together
// with all (n+1)^2 many n x n minors of the symbolic Hessian (zero minors
// dropped). Nonzero singular points of the second ideal are exactly those
// with Hessian kernel of dimension >= 2.
std::pair<Ideal, Ideal> singular_ideals(const Form& f);

SingularityReport classify(const Form& f, const GuardLimits& limits = {});

// critical <=> grad f(p) = 0; kernel_dim = n+1 - rank Hess_p(f), present only
// at critical points. p must be nonzero.
std::pair<bool, std::optional<int>> is_singular_at(const Form& f, std::span<const Rational> p);

// A degree-d form critical at p with Hessian kernel of dimension >= 2 there:
// z0^(d-2)*zn^2 moved by the coordinate change that sends e0 to p.
Form degenerate_witness(int n, int d, std::span<const Rational> p);

}  // namespace nodal
