#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>

namespace knotshake {

using BigInt = mpz_class;
using Rational = mpq_class;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Parses "p/q" or "p"; nullopt on malformed input or zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

std::optional<std::int64_t> to_int64(const BigInt& z);

inline int sign(const BigInt& z) { return sgn(z); }

// Exact quotient, used by fraction-free elimination.
inline BigInt exact_quotient(const BigInt& a, const BigInt& b)
{
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool is_zero(const BigInt& z) { return sgn(z) == 0; }

// num / den in lowest terms with positive denominator.
inline Rational make_rational(const BigInt& num, const BigInt& den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace knotshake

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpq_class NonInteger;
    typedef mpz_class Literal;
    typedef mpz_class Nested;
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Literal;
    typedef mpq_class Nested;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 300,
        MulCost = 300
    };
    static inline int digits10() { return 0; }
};

} // namespace Eigen
