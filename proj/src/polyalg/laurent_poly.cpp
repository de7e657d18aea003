#include "knotshake/laurent_poly.hpp"
#include "knotshake/error.hpp"

#include <algorithm>
#include <sstream>

namespace knotshake {

LaurentPoly::LaurentPoly(std::int64_t lo, std::vector<BigInt> coeffs)
    : lo_(lo), coeffs_(std::move(coeffs))
{
    trim();
}

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(0, {BigInt(constant)}) {}

LaurentPoly::LaurentPoly(const BigInt& constant) : LaurentPoly(0, {constant}) {}

LaurentPoly LaurentPoly::monomial(const BigInt& c, std::int64_t exponent)
{
    return LaurentPoly(exponent, {c});
}

void LaurentPoly::trim()
{
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0)
        ++first;
    if (first == coeffs_.size()) {
        coeffs_.clear();
        lo_ = 0;
        return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0)
        --last;
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    lo_ += static_cast<std::int64_t>(first);
}

BigInt LaurentPoly::coeff(std::int64_t exponent) const
{
    if (is_zero() || exponent < lo_ || exponent > hi())
        return 0;
    return coeffs_[static_cast<std::size_t>(exponent - lo_)];
}

bool LaurentPoly::is_unit() const
{
    return is_monomial() && abs(coeffs_[0]) == 1;
}

bool LaurentPoly::is_symmetric() const
{
    if (lo_ + hi() != 0)
        return is_zero();
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other)
{
    if (other.is_zero())
        return *this;
    if (is_zero())
        return *this = other;
    const std::int64_t lo = std::min(lo_, other.lo_);
    const std::int64_t hi = std::max(this->hi(), other.hi());
    std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        out[static_cast<std::size_t>(lo_ - lo) + k] = coeffs_[k];
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
        out[static_cast<std::size_t>(other.lo_ - lo) + k] += other.coeffs_[k];
    lo_ = lo;
    coeffs_ = std::move(out);
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }

LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<BigInt> out(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0)
                mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
    return LaurentPoly(a.lo() + b.lo(), std::move(out));
}

LaurentPoly LaurentPoly::substitute_power(std::int64_t m) const
{
    if (m == 0)
        throw DomainError("substitution t -> t^0 is not allowed");
    if (is_zero())
        return {};
    const std::int64_t a = lo_ * m;
    const std::int64_t b = hi() * m;
    const std::int64_t lo = std::min(a, b);
    std::vector<BigInt> out(static_cast<std::size_t>(std::max(a, b) - lo + 1));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        out[static_cast<std::size_t>((lo_ + static_cast<std::int64_t>(k)) * m - lo)] = coeffs_[k];
    return LaurentPoly(lo, std::move(out));
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const
{
    LaurentPoly r = *this;
    if (!r.is_zero())
        r.lo_ += k;
    return r;
}

BigInt LaurentPoly::eval_at_one() const
{
    BigInt s = 0;
    for (const auto& c : coeffs_)
        s += c;
    return s;
}

BigInt LaurentPoly::eval_at_minus_one() const
{
    BigInt s = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const bool odd = ((lo_ + static_cast<std::int64_t>(k)) % 2) != 0;
        if (odd)
            s -= coeffs_[k];
        else
            s += coeffs_[k];
    }
    return s;
}

Rational LaurentPoly::evaluate(const Rational& x) const
{
    if (is_zero())
        return 0;
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + Rational(*it);
    Rational unit = 1;
    const std::int64_t e = lo_ < 0 ? -lo_ : lo_;
    for (std::int64_t k = 0; k < e; ++k)
        unit *= x;
    return lo_ < 0 ? Rational(acc / unit) : Rational(acc * unit);
}

LaurentPoly LaurentPoly::symmetrized() const
{
    if (is_zero())
        return {};
    if (span() % 2 != 0)
        throw DomainError("polynomial is not symmetric up to a unit");
    LaurentPoly r = shifted(-(lo_ + hi()) / 2);
    if (!r.is_symmetric())
        throw DomainError("polynomial is not symmetric up to a unit");
    if (r.eval_at_one() < 0)
        r = -r;
    return r;
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b)
{
    if (b.is_zero())
        throw InternalError("division by zero polynomial");
    if (a.is_zero())
        return {};
    // Long division on ordinary polynomials after shifting both to degree 0.
    std::vector<BigInt> rem = a.coeffs();
    const auto& d = b.coeffs();
    const BigInt& lead = d.back();
    if (rem.size() < d.size())
        throw InternalError("inexact polynomial division");
    std::vector<BigInt> q(rem.size() - d.size() + 1);
    BigInt c;
    for (std::size_t k = q.size(); k-- > 0;) {
        BigInt& top = rem[k + d.size() - 1];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw InternalError("inexact polynomial division");
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        q[k] = c;
        for (std::size_t j = 0; j < d.size(); ++j)
            if (d[j] != 0)
                mpz_submul(rem[k + j].get_mpz_t(), c.get_mpz_t(), d[j].get_mpz_t());
    }
    for (const auto& r : rem)
        if (r != 0)
            throw InternalError("inexact polynomial division");
    return LaurentPoly(a.lo() - b.lo(), std::move(q));
}

std::string to_string(const LaurentPoly& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::int64_t e = p.hi(); e >= p.lo(); --e) {
        BigInt c = p.coeff(e);
        if (c == 0)
            continue;
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        c = abs(c);
        first = false;
        if (e == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1)
            os << c.get_str() << "*";
        os << "t";
        if (e != 1)
            os << "^" << e;
    }
    return os.str();
}

} // namespace knotshake
