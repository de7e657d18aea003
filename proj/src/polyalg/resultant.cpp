#include "knotshake/resultant.hpp"
#include "knotshake/error.hpp"

#include <utility>
#include <vector>

namespace knotshake {

namespace {

using Poly = std::vector<BigInt>; // ascending, trimmed, nonzero

long degree(const Poly& p) { return static_cast<long>(p.size()) - 1; }

void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

BigInt content(const Poly& p)
{
    BigInt g = 0;
    for (const auto& c : p)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void divide_exact(Poly& p, const BigInt& d)
{
    for (auto& c : p)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

BigInt power(const BigInt& b, unsigned long e)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// lc(b)^(deg a - deg b + 1) * a mod b.
Poly pseudo_remainder(Poly a, const Poly& b)
{
    const long db = degree(b);
    const BigInt& lb = b.back();
    long steps = degree(a) - db + 1;
    while (!a.empty() && degree(a) >= db) {
        const BigInt lead = a.back();
        const long shift = degree(a) - db;
        for (auto& c : a)
            c *= lb;
        for (long j = 0; j <= db; ++j)
            mpz_submul(a[shift + j].get_mpz_t(), lead.get_mpz_t(), b[j].get_mpz_t());
        trim(a);
        --steps;
    }
    if (steps > 0) {
        const BigInt f = power(lb, static_cast<unsigned long>(steps));
        for (auto& c : a)
            c *= f;
    }
    return a;
}

// Standard resultant lc(a)^deg(b) prod_{a(r)=0} b(r).
BigInt standard_resultant(Poly a, Poly b)
{
    const BigInt ca = content(a);
    const BigInt cb = content(b);
    divide_exact(a, ca);
    divide_exact(b, cb);
    BigInt t = power(ca, static_cast<unsigned long>(degree(b))) *
               power(cb, static_cast<unsigned long>(degree(a)));
    int s = 1;
    if (degree(a) < degree(b)) {
        std::swap(a, b);
        if (degree(a) % 2 == 1 && degree(b) % 2 == 1)
            s = -1;
    }
    BigInt g = 1;
    BigInt h = 1;
    while (degree(b) > 0) {
        const long delta = degree(a) - degree(b);
        if (degree(a) % 2 == 1 && degree(b) % 2 == 1)
            s = -s;
        Poly r = pseudo_remainder(a, b);
        if (r.empty())
            return 0;
        a = std::move(b);
        divide_exact(r, g * power(h, static_cast<unsigned long>(delta)));
        b = std::move(r);
        g = a.back();
        // h <- g^delta / h^(delta - 1), exact.
        h = exact_quotient(power(g, static_cast<unsigned long>(delta)),
                           power(h, static_cast<unsigned long>(delta - 1)));
    }
    const long da = degree(a);
    h = exact_quotient(power(b.back(), static_cast<unsigned long>(da)),
                       power(h, static_cast<unsigned long>(da - 1)));
    return s * t * h;
}

Poly ordinary(const LaurentPoly& p)
{
    return p.coeffs();
}

} // namespace

BigInt resultant(const LaurentPoly& p, const LaurentPoly& q)
{
    if (p.is_zero() || q.is_zero())
        throw DomainError("resultant of zero polynomial undefined");
    const Poly a = ordinary(p);
    const Poly b = ordinary(q);
    if (degree(a) == 0)
        return power(a[0], static_cast<unsigned long>(degree(b)));
    if (degree(b) == 0)
        return power(b[0], static_cast<unsigned long>(degree(a)));
    return standard_resultant(b, a);
}

} // namespace knotshake
