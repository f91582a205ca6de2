#include "nodal/singularity.hpp"

#include <algorithm>

namespace nodal {

std::string to_string(SingularityClass c) {
    switch (c) {
        case SingularityClass::Smooth: return "SMOOTH";
        case SingularityClass::Nodal: return "NODAL";
        case SingularityClass::Degenerate: return "DEGENERATE";
    }
    throw InternalError("to_string: bad SingularityClass");
}

namespace {

// Determinant of a square polynomial matrix by cofactor expansion along the
// first row. Sizes here are at most n x n for desk-scale n.
Poly poly_determinant(const std::vector<std::vector<Poly>>& m) {
    std::size_t size = m.size();
    if (size == 1) return m[0][0];
    int nvars = m[0][0].nvars();
    Poly det(nvars);
    for (std::size_t col = 0; col < size; ++col) {
        if (m[0][col].is_zero()) continue;
        std::vector<std::vector<Poly>> sub;
        sub.reserve(size - 1);
        for (std::size_t i = 1; i < size; ++i) {
            std::vector<Poly> row;
            row.reserve(size - 1);
            for (std::size_t j = 0; j < size; ++j)
                if (j != col) row.push_back(m[i][j]);
            sub.push_back(std::move(row));
        }
        Poly cof = m[0][col] * poly_determinant(sub);
        if (col % 2 == 1) cof = -cof;
        det += cof;
    }
    return det;
}

void require_classifiable(const Form& f) {
    if (f.is_zero()) throw InputError("classification: zero form");
    if (f.d() < 1) throw InputError("classification: degree must be >= 1");
}

}  // namespace

std::pair<Ideal, Ideal> singular_ideals(const Form& f) {
    require_classifiable(f);
    const int nv = f.n() + 1;
    std::vector<Poly> jac;
    for (const Form& g : f.gradient())
        if (!g.is_zero()) jac.push_back(g.poly());
    if (jac.empty()) throw InternalError("singular_ideals: zero gradient of a nonzero form");

    std::vector<Poly> nonnode = jac;
    auto hess = f.hessian();
    for (int i = 0; i < nv; ++i) {
        for (int j = 0; j < nv; ++j) {
            // n x n minor deleting row i and column j.
            std::vector<std::vector<Poly>> sub;
            sub.reserve(static_cast<std::size_t>(nv) - 1);
            for (int r = 0; r < nv; ++r) {
                if (r == i) continue;
                std::vector<Poly> row;
                row.reserve(static_cast<std::size_t>(nv) - 1);
                for (int c = 0; c < nv; ++c)
                    if (c != j) row.push_back(hess[r][c].poly());
                sub.push_back(std::move(row));
            }
            Poly minor = poly_determinant(sub);
            if (!minor.is_zero()) nonnode.push_back(std::move(minor));
        }
    }
    return {Ideal(nv, std::move(jac)), Ideal(nv, std::move(nonnode))};
}

SingularityReport classify(const Form& f, const GuardLimits& limits) {
    require_classifiable(f);
    auto [jacobian, nonnode] = singular_ideals(f);
    GroebnerBasis jgb = buchberger(jacobian, limits);
    if (only_origin(jgb))
        return SingularityReport{SingularityClass::Smooth, std::move(jgb), std::nullopt, {}};
    GroebnerBasis ngb = buchberger(nonnode, limits);
    SingularityClass cls = only_origin(ngb) ? SingularityClass::Nodal : SingularityClass::Degenerate;
    return SingularityReport{cls, std::move(jgb), std::move(ngb), {}};
}

std::pair<bool, std::optional<int>> is_singular_at(const Form& f, std::span<const Rational> p) {
    require_classifiable(f);
    if (static_cast<int>(p.size()) != f.n() + 1) throw InputError("is_singular_at: point length mismatch");
    if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return x == 0; }))
        throw InputError("is_singular_at: zero point");
    for (const Form& g : f.gradient())
        if (g.evaluate(p) != 0) return {false, std::nullopt};
    int kernel = f.hessian_at(p).kernel_dimension();
    return {true, kernel};
}

Form degenerate_witness(int n, int d, std::span<const Rational> p) {
    if (n < 2) throw InputError("degenerate_witness: requires n >= 2");
    if (d < 2) throw InputError("degenerate_witness: requires d >= 2");
    if (static_cast<int>(p.size()) != n + 1) throw InputError("degenerate_witness: point length mismatch");
    int pivot = -1;
    for (int k = 0; k <= n; ++k)
        if (p[static_cast<std::size_t>(k)] != 0) {
            pivot = k;
            break;
        }
    if (pivot < 0) throw InputError("degenerate_witness: zero point");

    Exponent e(static_cast<std::size_t>(n) + 1, 0);
    e[0] = d - 2;
    e[static_cast<std::size_t>(n)] += 2;
    Form base(n, d, Poly::monomial(n + 1, e, Rational(1)));

    // Change of coordinates sending e0 to p: columns are p followed by the
    // standard vectors other than e_pivot.
    RationalMatrix a(n + 1);
    for (int i = 0; i <= n; ++i) a.at(i, 0) = p[static_cast<std::size_t>(i)];
    int col = 1;
    for (int j = 0; j <= n; ++j) {
        if (j == pivot) continue;
        a.at(j, col) = 1;
        ++col;
    }
    return act(a.inverse(), base);
}

}  // namespace nodal
