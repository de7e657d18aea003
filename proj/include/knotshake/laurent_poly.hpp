#pragma once

#include "knotshake/bigint.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace knotshake {

// Integer Laurent polynomial sum_k coeffs[k] t^(lo + k). Stored trimmed: the
// first and last coefficients are nonzero, and the zero polynomial has no
// coefficients and lo = 0.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::int64_t lo, std::vector<BigInt> coeffs);
    LaurentPoly(long constant); // NOLINT: integers embed as constants
    LaurentPoly(const BigInt& constant); // NOLINT

    static LaurentPoly monomial(const BigInt& c, std::int64_t exponent);
    static LaurentPoly t() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t lo() const { return lo_; }
    std::int64_t hi() const { return lo_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
    std::int64_t span() const { return is_zero() ? 0 : hi() - lo_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(std::int64_t exponent) const;
    const BigInt& leading() const { return coeffs_.back(); }

    bool is_monomial() const { return coeffs_.size() == 1; }
    // True for +-t^k.
    bool is_unit() const;
    bool is_symmetric() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);

    // p(t) -> p(t^m), m != 0.
    LaurentPoly substitute_power(std::int64_t m) const;
    // Multiplication by t^k.
    LaurentPoly shifted(std::int64_t k) const;
    BigInt eval_at_one() const;
    BigInt eval_at_minus_one() const;
    Rational evaluate(const Rational& x) const;

    // Symmetric representative with p(1) > 0; throws unless p is a unit
    // multiple of a symmetric polynomial.
    LaurentPoly symmetrized() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void trim();

    std::int64_t lo_ = 0;
    std::vector<BigInt> coeffs_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

// Exact division; throws InternalError when b does not divide a.
LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

// Human-readable form such as "2*t - 3 + 2*t^-1" (descending exponents).
std::string to_string(const LaurentPoly& p);

} // namespace knotshake

namespace Eigen {

template <>
struct NumTraits<knotshake::LaurentPoly> : GenericNumTraits<knotshake::LaurentPoly> {
    typedef knotshake::LaurentPoly Real;
    typedef knotshake::LaurentPoly NonInteger;
    typedef knotshake::LaurentPoly Literal;
    typedef knotshake::LaurentPoly Nested;
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 500,
        MulCost = 1000
    };
    static inline int digits10() { return 0; }
};

} // namespace Eigen
