#pragma once

/*
 * Sparse multivariate polynomials over exact rationals in variables
 * z0..zn, with the degrevlex order (z0 > z1 > ... > zn) fixed globally.
 * Form is the homogeneous-of-declared-degree view used by every module
 * above this one.
 */

#include <map>
#include <span>
#include <string>
#include <vector>

#include "nodal/errors.hpp"
#include "nodal/rational.hpp"

namespace nodal {

// Exponent vector (i0,...,in) of a monomial z0^i0 ... zn^in.
using Exponent = std::vector<int>;

int total_degree(const Exponent& e);
bool exponent_divides(const Exponent& a, const Exponent& b);  // a | b
Exponent exponent_lcm(const Exponent& a, const Exponent& b);
Exponent exponent_sub(const Exponent& a, const Exponent& b);  // a - b, requires b | a

// Degree-reverse-lexicographic order with z0 > z1 > ... > zn.
// Ties in total degree break on the *last* differing variable: the
// monomial with the smaller exponent there is the larger one.
struct DegRevLexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

// true iff a > b in degrevlex
bool degrevlex_greater(const Exponent& a, const Exponent& b);

class RationalMatrix;

// General sparse polynomial; not necessarily homogeneous. Terms are kept in
// degrevlex-descending order, so begin() is the leading term. No stored
// coefficient is ever zero.
class Poly {
public:
    using TermMap = std::map<Exponent, Rational, DegRevLexGreater>;

    explicit Poly(int nvars) : nvars_(nvars) {
        if (nvars < 1) throw InputError("Poly: need at least one variable");
    }

    static Poly monomial(int nvars, Exponent e, Rational c);
    static Poly constant(int nvars, Rational c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    const Exponent& lead_exponent() const;
    const Rational& lead_coeff() const;

    // Merges and prunes; c may be zero (no-op then).
    void add_term(const Exponent& e, const Rational& c);

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Rational& c);
    Poly operator-() const;
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    bool operator==(const Poly& rhs) const { return nvars_ == rhs.nvars_ && terms_ == rhs.terms_; }

    Poly derivative(int var) const;
    Rational evaluate(std::span<const Rational> point) const;

    // Substitutes z_k -> sum_j g[k][j] z_j. Does not check invertibility.
    Poly substitute_linear(const RationalMatrix& g) const;

    // Scales to integer coefficients with content 1 and positive leading
    // coefficient. Zero stays zero.
    Poly primitive_integer_form() const;
    Poly monic() const;

    // Canonical text: degrevlex-descending terms, "a/b" coefficients,
    // e.g. "-z0^3 + 2*z1^2*z2". The zero polynomial prints "0".
    std::string to_string() const;

private:
    int nvars_;
    TermMap terms_;
};

// Square matrix of exact rationals; houses coordinate changes and evaluated
// Hessians.
class RationalMatrix {
public:
    explicit RationalMatrix(int size);
    static RationalMatrix identity(int size);
    // Matrix of the substitution z_k -> z_{sigma[k]}.
    static RationalMatrix permutation(const std::vector<int>& sigma);

    int size() const { return size_; }
    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * size_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * size_ + j]; }

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    bool operator==(const RationalMatrix& rhs) const { return size_ == rhs.size_ && a_ == rhs.a_; }

    Rational determinant() const;
    bool is_invertible() const;
    RationalMatrix inverse() const;  // throws InputError on singular input
    int rank() const;
    int kernel_dimension() const { return size_ - rank(); }

private:
    int size_;
    std::vector<Rational> a_;
};

// Exact rank of a rectangular matrix given as rows.
int matrix_rank(std::vector<std::vector<Rational>> rows);

// Homogeneous polynomial of declared degree d on P^n. The zero Form is
// representable (empty term set); classification entry points reject it.
class Form {
public:
    Form(int n, int d, Poly p);

    int n() const { return n_; }
    int d() const { return d_; }
    const Poly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    Rational evaluate(std::span<const Rational> point) const;
    std::vector<Form> gradient() const;
    std::vector<std::vector<Form>> hessian() const;
    RationalMatrix hessian_at(std::span<const Rational> point) const;

    Form operator+(const Form& rhs) const;
    Form operator-(const Form& rhs) const;
    Form operator*(const Rational& c) const;
    bool operator==(const Form& rhs) const = default;

    std::string to_string() const { return poly_.to_string(); }

private:
    int n_;
    int d_;
    Poly poly_;
};

// Text grammar (see README): signed sum of terms, each an optional rational
// coefficient times '*'-joined factors "z<k>[^<e>]". Rejects non-homogeneous
// input, indices beyond n, and the zero polynomial.
Form parse_form(const std::string& text, int n, int d);

// Substitution f o g, i.e. z_k -> sum_j g[k][j] z_j applied to f.
// Right action: act(g, act(h, f)) == act(h*g, f).
Form act(const RationalMatrix& g, const Form& f);

// act by the permutation matrix of sigma (z_k -> z_{sigma[k]}), done directly
// on exponents.
Form permute_variables(const Form& f, const std::vector<int>& sigma);

bool is_permutation(const std::vector<int>& sigma);
int permutation_sign(const std::vector<int>& sigma);

}  // namespace nodal
