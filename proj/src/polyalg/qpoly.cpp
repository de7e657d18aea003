#include "knotshake/qpoly.hpp"
#include "knotshake/error.hpp"

namespace knotshake::qpoly {

void trim(QPoly& p)
{
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

long degree(const QPoly& p) { return static_cast<long>(p.size()) - 1; }

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r)
{
    if (b.empty())
        throw InternalError("polynomial division by zero");
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
    const Rational inv_lead = 1 / b.back();
    while (!r.empty() && r.size() >= b.size()) {
        const std::size_t shift = r.size() - b.size();
        const Rational c = r.back() * inv_lead;
        q[shift] = c;
        for (std::size_t j = 0; j + 1 < b.size(); ++j)
            if (sgn(b[j]) != 0)
                r[shift + j] -= c * b[j];
        r.back() = 0;
        trim(r);
    }
    trim(q);
}

QPoly multiply(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (sgn(b[j]) != 0)
                out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

QPoly subtract(QPoly a, const QPoly& b)
{
    if (a.size() < b.size())
        a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

QPoly derivative(const QPoly& p)
{
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * static_cast<unsigned long>(i));
    trim(d);
    return d;
}

QPoly monic_gcd(QPoly a, QPoly b)
{
    trim(a);
    trim(b);
    QPoly q, r;
    while (!b.empty()) {
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Rational lead = a.back();
        for (auto& c : a)
            c /= lead;
    }
    return a;
}

Rational evaluate(const QPoly& p, const Rational& x)
{
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

namespace {

// Positive multiple of p with coprime integer coefficients.
std::vector<BigInt> primitive_part(const QPoly& p)
{
    BigInt l = 1, g = 0;
    for (const auto& c : p)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<BigInt> out;
    for (const auto& c : p) {
        out.push_back(exact_quotient(c.get_num() * l, c.get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (g > 1)
        for (auto& c : out)
            c = exact_quotient(c, g);
    return out;
}

// Sign of p(a/b), b > 0, through b^deg p(a/b).
int sign_at(const std::vector<BigInt>& p, const BigInt& a, const BigInt& b)
{
    if (p.empty())
        return 0;
    BigInt acc = p.back(), bp = 1;
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        bp *= b;
        acc *= a;
        mpz_addmul(acc.get_mpz_t(), p[i].get_mpz_t(), bp.get_mpz_t());
    }
    return sgn(acc);
}

long sign_changes(const std::vector<std::vector<BigInt>>& chain, const Rational& x)
{
    long changes = 0;
    int last = 0;
    for (const auto& p : chain) {
        const int s = sign_at(p, x.get_num(), x.get_den());
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

} // namespace

SturmChain::SturmChain(const QPoly& p_in)
{
    QPoly p = p_in;
    trim(p);
    if (p.empty())
        throw InternalError("root count of the zero polynomial");
    if (degree(p) == 0)
        return;
    // Square-free part so that the chain counts distinct roots.
    QPoly g = monic_gcd(p, derivative(p));
    QPoly sf, rem;
    divmod(p, g, sf, rem);
    std::vector<QPoly> chain{sf, derivative(sf)};
    while (true) {
        QPoly q, r;
        divmod(chain[chain.size() - 2], chain.back(), q, r);
        if (r.empty())
            break;
        for (auto& c : r)
            c = -c;
        chain.push_back(std::move(r));
    }
    for (const auto& c : chain)
        chain_.push_back(primitive_part(c));
}

long SturmChain::count(const Rational& lo, const Rational& hi) const
{
    if (chain_.empty() || lo > hi)
        return 0;
    long count = sign_changes(chain_, lo) - sign_changes(chain_, hi);
    if (sign_at(chain_.front(), lo.get_num(), lo.get_den()) == 0)
        ++count;
    return count;
}

long count_real_roots(const QPoly& p, const Rational& lo, const Rational& hi)
{
    return SturmChain(p).count(lo, hi);
}

} // namespace knotshake::qpoly
