#include "knotshake/cyclotomic.hpp"
#include "knotshake/cyclotomic_field.hpp"
#include "knotshake/error.hpp"
#include "knotshake/qpoly.hpp"

#include <algorithm>

namespace knotshake {

using namespace qpoly;

namespace {

long common_conductor(const CycloElement& a, const CycloElement& b)
{
    if (a.conductor() == b.conductor())
        return a.conductor();
    if (a.is_rational())
        return b.conductor();
    if (b.is_rational())
        return a.conductor();
    throw InternalError("cyclotomic elements from different fields");
}

} // namespace

CycloElement::CycloElement(long value) : n_(1), num_{BigInt(value)}, den_(1) { canonicalize(); }

CycloElement::CycloElement(const Rational& value)
    : n_(1), num_{value.get_num()}, den_(value.get_den())
{
    canonicalize();
}

CycloElement::CycloElement(long conductor, std::vector<BigInt> numerator, BigInt denominator)
    : n_(conductor), num_(std::move(numerator)), den_(std::move(denominator))
{
    if (den_ == 0)
        throw DomainError("zero denominator");
    cyclotomic_field(n_).reduce(num_);
    canonicalize();
}

CycloElement CycloElement::zeta_power(long j, long n)
{
    const RootOfUnity w(j, n);
    std::vector<BigInt> c(static_cast<std::size_t>(w.k()) + 1);
    c.back() = 1;
    return CycloElement(n, std::move(c));
}

void CycloElement::canonicalize()
{
    while (!num_.empty() && num_.back() == 0)
        num_.pop_back();
    if (num_.empty()) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_)
            c = -c;
    }
    if (den_ == 1)
        return;
    BigInt g = den_;
    for (const auto& c : num_) {
        if (g == 1)
            break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g != 1) {
        for (auto& c : num_)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Rational CycloElement::rational_value() const
{
    if (!is_rational())
        throw InternalError("element is not rational");
    if (num_.empty())
        return 0;
    Rational q(num_[0], den_);
    q.canonicalize();
    return q;
}

CycloElement CycloElement::conj() const
{
    if (is_rational())
        return *this;
    std::vector<BigInt> out(static_cast<std::size_t>(n_));
    for (std::size_t j = 0; j < num_.size(); ++j) {
        if (num_[j] == 0)
            continue;
        const std::size_t idx = j == 0 ? 0 : static_cast<std::size_t>(n_) - j;
        out[idx] += num_[j];
    }
    CycloElement r;
    r.n_ = n_;
    r.num_ = std::move(out);
    r.den_ = den_;
    cyclotomic_field(n_).reduce(r.num_);
    while (!r.num_.empty() && r.num_.back() == 0)
        r.num_.pop_back();
    return r;
}

CycloElement CycloElement::inverse() const
{
    if (is_zero())
        throw DomainError("inverse of zero");
    if (is_rational())
        return CycloElement(make_rational(den_, num_[0]));
    const CyclotomicField& f = cyclotomic_field(n_);
    // Extended Euclid on (Phi_n, num) over Q: r1 = s1 * num mod Phi_n.
    QPoly r0(f.phi_poly.coeffs().begin(), f.phi_poly.coeffs().end());
    QPoly r1(num_.begin(), num_.end());
    QPoly s0;
    QPoly s1{Rational(1)};
    QPoly q, r;
    while (r1.size() > 1) {
        divmod(r0, r1, q, r);
        QPoly s = subtract(s0, multiply(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty())
        throw InternalError("cyclotomic polynomial has a common factor");
    // inverse = den * s1 / r1[0]
    const Rational scale = Rational(den_) / r1[0];
    BigInt l = 1;
    for (auto& c : s1) {
        c *= scale;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<BigInt> out(s1.size());
    for (std::size_t i = 0; i < s1.size(); ++i)
        out[i] = s1[i].get_num() * (l / s1[i].get_den());
    return CycloElement(n_, std::move(out), l);
}

CycloElement CycloElement::operator-() const
{
    CycloElement r = *this;
    for (auto& c : r.num_)
        c = -c;
    return r;
}

CycloElement& CycloElement::operator+=(const CycloElement& other)
{
    if (other.is_zero())
        return *this;
    if (is_zero())
        return *this = other;
    const long n = common_conductor(*this, other);
    if (num_.size() < other.num_.size())
        num_.resize(other.num_.size());
    if (den_ == other.den_) {
        for (std::size_t i = 0; i < other.num_.size(); ++i)
            num_[i] += other.num_[i];
    } else {
        BigInt l;
        mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), other.den_.get_mpz_t());
        const BigInt fa = l / den_;
        const BigInt fb = l / other.den_;
        if (fa != 1)
            for (auto& c : num_)
                c *= fa;
        for (std::size_t i = 0; i < other.num_.size(); ++i)
            mpz_addmul(num_[i].get_mpz_t(), other.num_[i].get_mpz_t(), fb.get_mpz_t());
        den_ = l;
    }
    n_ = n;
    canonicalize();
    return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& other) { return *this += -other; }

CycloElement& CycloElement::operator*=(const CycloElement& other)
{
    return *this = *this * other;
}

CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }

CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }

CycloElement operator*(const CycloElement& a, const CycloElement& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    const long n = common_conductor(a, b);
    const auto& x = a.numerator();
    const auto& y = b.numerator();
    std::vector<BigInt> out(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0)
                mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
    return CycloElement(n, std::move(out), a.denominator() * b.denominator());
}

bool operator==(const CycloElement& a, const CycloElement& b)
{
    if (a.num_ != b.num_ || a.den_ != b.den_)
        return false;
    return a.is_rational() || a.n_ == b.n_;
}

std::string to_string(const CycloElement& x)
{
    std::string body = to_string(LaurentPoly(0, x.numerator()));
    std::replace(body.begin(), body.end(), 't', 'z');
    if (x.denominator() != 1)
        body = "(" + body + ")/" + x.denominator().get_str();
    if (!x.is_rational())
        body += " in Q(zeta_" + std::to_string(x.conductor()) + ")";
    return body;
}

CycloElement eval_at_root(const LaurentPoly& p, const RootOfUnity& w)
{
    const RootOfUnity r = w.reduced();
    const long n = r.n();
    std::vector<BigInt> acc(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const std::int64_t e = p.lo() + static_cast<std::int64_t>(i);
        const long idx = RootOfUnity(r.k(), n).pow(static_cast<long>(e)).k();
        acc[static_cast<std::size_t>(idx)] += p.coeffs()[i];
    }
    return CycloElement(n, std::move(acc));
}

} // namespace knotshake
