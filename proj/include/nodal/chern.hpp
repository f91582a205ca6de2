#pragma once

/*
 * Graded-ring calculator for H*(P(T_X)) = H*(X)[c] / (c^n + c1(T)c^{n-1} +
 * ... + cn(T)) with fiber integration. Two base rings:
 *
 *   CONCRETE  X = P^n, L = O(d):   H*(X) = Z[H]/(H^{n+1}), c(T) = (1+H)^{n+1}
 *   FORMAL    abstract X, dim n:   Z[l, c1..cn] truncated above weighted
 *                                  degree n, ci = ci(T_X), l = c1(L)
 *
 * Integer coefficients throughout.
 */

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nodal/errors.hpp"

namespace nodal {

struct ChernRing {
    enum class Mode { Concrete, Formal };

    Mode mode;
    int n;
    int d;  // degree of the twisting line bundle; Concrete mode only

    static ChernRing concrete(int n, int d);
    static ChernRing formal(int n);

    int base_vars() const { return mode == Mode::Concrete ? 1 : n + 1; }
    int var_weight(int v) const { return mode == Mode::Concrete ? 1 : (v == 0 ? 1 : v); }
    bool operator==(const ChernRing&) const = default;
};

// Element of H*(X). Sparse exponent vectors over the ring's base variables,
// truncated above (weighted) degree n.
class BaseClass {
public:
    explicit BaseClass(const ChernRing& ring) : ring_(ring) {}

    static BaseClass zero(const ChernRing& ring) { return BaseClass(ring); }
    static BaseClass unit(const ChernRing& ring);
    // H^j (Concrete only).
    static BaseClass h_power(const ChernRing& ring, int j, long long coeff = 1);
    // c_i(T_X): binomial(n+1, i) H^i in Concrete mode, the generator c_i in
    // Formal mode. c_0 = 1.
    static BaseClass tangent_chern(const ChernRing& ring, int i);
    // c_1 of the twisting line bundle: d*H, respectively l.
    static BaseClass line_chern(const ChernRing& ring);

    const ChernRing& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, long long>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exponent, long long coeff);

    BaseClass& operator+=(const BaseClass& rhs);
    BaseClass& operator-=(const BaseClass& rhs);
    friend BaseClass operator+(BaseClass a, const BaseClass& b) { return a += b; }
    friend BaseClass operator-(BaseClass a, const BaseClass& b) { return a -= b; }
    friend BaseClass operator*(const BaseClass& a, const BaseClass& b);
    BaseClass operator*(long long c) const;
    bool operator==(const BaseClass&) const = default;

    std::string to_string() const;

private:
    ChernRing ring_;
    std::map<std::vector<int>, long long> terms_;
};

// Element of H*(P(T_X)): polynomial in c with BaseClass coefficients.
class BundleClass {
public:
    explicit BundleClass(const ChernRing& ring) : ring_(ring) {}

    static BundleClass from_base(const BaseClass& x, int c_power = 0);

    const ChernRing& ring() const { return ring_; }
    bool is_zero() const;
    int max_c_power() const;
    // Coefficient of c^k (zero class when k is out of range).
    BaseClass coefficient(int k) const;
    void add(const BaseClass& x, int c_power);

    BundleClass& operator+=(const BundleClass& rhs);
    BundleClass& operator-=(const BundleClass& rhs);
    friend BundleClass operator+(BundleClass a, const BundleClass& b) { return a += b; }
    friend BundleClass operator-(BundleClass a, const BundleClass& b) { return a -= b; }
    friend BundleClass operator*(const BundleClass& a, const BundleClass& b);

    // Normal form: c-powers above n-1 eliminated through the defining
    // relation. Idempotent.
    BundleClass reduced() const;
    bool equals_reduced(const BundleClass& rhs) const;

    // "a*c^k*H^j" terms in degrevlex order on (c, H); Concrete mode only.
    std::string to_string() const;
    // [coefficient, c-power, H-power] triples in the same order.
    std::vector<std::array<long long, 3>> triples() const;

private:
    ChernRing ring_;
    std::vector<BaseClass> coef_;  // coef_[k] multiplies c^k
};

long long binomial(int a, int b);

// Chern classes c_0(E)..c_n(E) of E = L (x) Omega^1_X via the splitting
// principle: c_k(E) = sum_i binom(n-i, k-i) (-1)^i c_i(T) lambda^{k-i}.
std::vector<BaseClass> twisted_cotangent_chern(const ChernRing& ring);

// e = c_n(p^*(E) (x) O(1)) = sum_{i=0}^n c^{n-i} p^*(c_i(E)).
BundleClass euler_class_unreduced(const ChernRing& ring);
BundleClass euler_class(const ChernRing& ring);  // reduced normal form

// Fiber integration: coefficient of c^{n-1} in reduced normal form.
BaseClass pushforward(const BundleClass& x);
BaseClass pushforward_euler(const ChernRing& ring);

}  // namespace nodal
