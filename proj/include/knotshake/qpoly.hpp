#pragma once

#include "knotshake/bigint.hpp"

#include <vector>

namespace knotshake::qpoly {

// Dense polynomial over Q, ascending coefficients, no trailing zeros.
using QPoly = std::vector<Rational>;

void trim(QPoly& p);
long degree(const QPoly& p); // -1 for zero
// a = q * b + r, b nonzero.
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly multiply(const QPoly& a, const QPoly& b);
QPoly subtract(QPoly a, const QPoly& b);
QPoly derivative(const QPoly& p);
QPoly monic_gcd(QPoly a, QPoly b);
Rational evaluate(const QPoly& p, const Rational& x);

// Sturm sequence of the square-free part, for repeated root counts.
class SturmChain {
public:
    explicit SturmChain(const QPoly& p);
    // Distinct roots in [lo, hi].
    long count(const Rational& lo, const Rational& hi) const;

private:
    std::vector<std::vector<BigInt>> chain_; // primitive integer multiples
};

// Number of distinct real roots in [lo, hi].
long count_real_roots(const QPoly& p, const Rational& lo, const Rational& hi);

} // namespace knotshake::qpoly
