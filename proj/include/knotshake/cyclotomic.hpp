#pragma once

#include "knotshake/bigint.hpp"
#include "knotshake/laurent_poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace knotshake {

long euler_phi(long n);

// The n-th cyclotomic polynomial as an ordinary polynomial. Cached; safe to
// call from several threads.
const LaurentPoly& cyclotomic_poly(long n);

// exp(2 pi i k / n), stored with 0 <= k < n.
class RootOfUnity {
public:
    RootOfUnity(long k, long n);

    long k() const { return k_; }
    long n() const { return n_; }
    // Same root written with gcd(k, n) = 1; the unit root becomes (0, 1).
    RootOfUnity reduced() const;
    long order() const { return reduced().n_; }
    bool is_one() const { return k_ == 0; }
    RootOfUnity pow(long m) const;
    RootOfUnity conj() const { return RootOfUnity(n_ - k_, n_); }
    // k/n in [0, 1).
    Rational angle() const { return make_rational(k_, n_); }

    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b)
    {
        const RootOfUnity x = a.reduced();
        const RootOfUnity y = b.reduced();
        return x.k_ == y.k_ && x.n_ == y.n_;
    }

private:
    long k_;
    long n_;
};

std::string to_string(const RootOfUnity& w);

// Element of Q(zeta_n) in the power basis 1, z, ..., z^(phi(n)-1), written as
// an integer numerator polynomial over a positive denominator with no common
// factor. Elements with a constant numerator are rational and combine with
// elements of any conductor.
class CycloElement {
public:
    CycloElement() = default;
    CycloElement(long value); // NOLINT
    CycloElement(const Rational& value); // NOLINT
    // Reduces an arbitrary integer polynomial in z modulo Phi_n.
    CycloElement(long conductor, std::vector<BigInt> numerator, BigInt denominator = 1);

    static CycloElement zeta_power(long j, long n);

    long conductor() const { return n_; }
    const std::vector<BigInt>& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.empty(); }
    bool is_rational() const { return num_.size() <= 1; }
    Rational rational_value() const;

    CycloElement conj() const;
    bool is_real() const { return conj() == *this; }
    // Throws DomainError for zero.
    CycloElement inverse() const;

    CycloElement operator-() const;
    CycloElement& operator+=(const CycloElement& other);
    CycloElement& operator-=(const CycloElement& other);
    CycloElement& operator*=(const CycloElement& other);

    friend bool operator==(const CycloElement& a, const CycloElement& b);

private:
    void canonicalize();
    long n_ = 1;
    std::vector<BigInt> num_;
    BigInt den_ = 1;
};

CycloElement operator+(CycloElement a, const CycloElement& b);
CycloElement operator-(CycloElement a, const CycloElement& b);
CycloElement operator*(const CycloElement& a, const CycloElement& b);

inline bool is_zero(const CycloElement& x) { return x.is_zero(); }

std::string to_string(const CycloElement& x);

// p(w) in Q(zeta_order(w)).
CycloElement eval_at_root(const LaurentPoly& p, const RootOfUnity& w);

// Sign of a real element under the embedding z -> exp(2 pi i / n). Zero is
// detected exactly; otherwise interval evaluation starts at the working
// precision and doubles until the enclosure excludes zero.
int real_sign(const CycloElement& x);

// Rational enclosure [lo, hi] of a real element at the given precision.
std::pair<Rational, Rational> real_enclosure(const CycloElement& x, long precision_bits);

// Working precision in bits, from TRACE_EMBED_PRECISION_BITS (default 128).
long embed_precision_bits();

} // namespace knotshake

namespace Eigen {

template <>
struct NumTraits<knotshake::CycloElement> : GenericNumTraits<knotshake::CycloElement> {
    typedef knotshake::CycloElement Real;
    typedef knotshake::CycloElement NonInteger;
    typedef knotshake::CycloElement Literal;
    typedef knotshake::CycloElement Nested;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 500,
        MulCost = 2000
    };
    static inline int digits10() { return 0; }
};

} // namespace Eigen
