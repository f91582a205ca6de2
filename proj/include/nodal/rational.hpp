#pragma once

#include <gmpxx.h>

#include <string>

namespace nodal {

// Exact arithmetic is non-negotiable here: every verdict downstream of a
// coefficient is an equality or sign test. GMP rationals are kept canonical
// (reduced, positive denominator) at all times.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "a" or "a/b" with integer a and positive integer b.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

}  // namespace nodal
