#include "knotshake/shake.hpp"
#include "knotshake/error.hpp"

#include <algorithm>
#include <numeric>

namespace knotshake {

bool same_conditions(const ShakeReport& a, const ShakeReport& b)
{
    return a.cond_i == b.cond_i && a.cond_ii == b.cond_ii && a.cond_iii == b.cond_iii &&
           a.verdict == b.verdict && a.notes == b.notes;
}

ShakeReport shake_slice_report(const InvariantCarrier& c, long n)
{
    ShakeReport r;
    r.n = n;
    const long m = std::labs(n);
    const int bit = arf(c).bit;
    r.cond_ii.arf = bit;

    if (m == 0) {
        r.cond_i.delta = c.delta();
        r.cond_i.pass = c.delta() == LaurentPoly(1L);
        r.cond_ii.automatic = true;
        r.cond_ii.pass = true;
        r.cond_iii.automatic = true;
        r.cond_iii.pass = true;
        r.notes.push_back("n = 0: condition (i) is Delta = 1, which implies (ii) and (iii)");
    } else if (m == 1) {
        r.cond_i.order = branched_cover_order(c, 1);
        r.cond_i.automatic = true;
        r.cond_i.pass = true;
        r.cond_ii.pass = bit == 0;
        r.cond_iii.automatic = true;
        r.cond_iii.pass = true;
        r.notes.push_back("|n| = 1: conditions (i) and (iii) hold automatically");
    } else {
        r.cond_i.order = branched_cover_order(c, m);
        r.cond_i.pass = !r.cond_i.order->infinite && r.cond_i.order->order == 1;
        r.cond_ii.pass = bit == 0;
        r.cond_iii.pass = true;
        for (long k = 1; 2 * k <= m; ++k) {
            const long s = c.signature(RootOfUnity(k, m));
            r.cond_iii.signatures.emplace_back(k, s);
            if (s != 0)
                r.cond_iii.pass = false;
        }
        if (m % 2 == 0 && r.cond_i.pass && !r.cond_ii.pass)
            throw InternalError("condition (i) holds for even n but the Arf invariant is 1");
    }
    r.verdict = r.cond_i.pass && r.cond_ii.pass && r.cond_iii.pass;
    return r;
}

ShakeReport shake_slice_report(const KnotExpr& k, long n) { return shake_slice_report(carrier_of(k), n); }

CGValue casson_gordon_sigma(const InvariantCarrier& c, long n, long k)
{
    if (n < 2)
        throw DomainError("Casson-Gordon signature requires n >= 2");
    if (k <= 0 || k >= n)
        throw DomainError("Casson-Gordon signature requires 0 < k < n");
    const long s = c.signature(RootOfUnity(k, n));
    Rational v = Rational(1 - s) - Rational(2 * k * (n - k), n);
    v.canonicalize();
    return {v};
}

CGValue casson_gordon_sigma(const KnotExpr& knot, long n, long k)
{
    return casson_gordon_sigma(carrier_of(knot), n, k);
}

ShakingBounds shaking_number_bounds(const InvariantCarrier& c, std::optional<long> certified_genus,
                                    long sample_cap)
{
    if (arf(c).bit != 0)
        throw DomainError("proposition hypothesis violated: Arf invariant is nonzero");
    if (sample_cap < 2)
        throw DomainError("signature sample cap must be at least 2");
    long max_abs = 0;
    for (long d = 2; d <= sample_cap; ++d)
        for (long j = 1; 2 * j <= d; ++j) {
            if (std::gcd(j, d) != 1)
                continue;
            const RootOfUnity w(j, d);
            if (eval_at_root(c.delta(), w).is_zero())
                continue;
            max_abs = std::max(max_abs, std::labs(c.signature(w)));
        }
    ShakingBounds b;
    b.lower = 2 * ((max_abs + 1) / 2) + 1;
    b.upper = static_cast<long>(c.delta().span()) + 1;
    if (certified_genus) {
        if (*certified_genus < 0)
            throw DomainError("certified genus must be non-negative");
        b.upper = std::min(*b.upper, 2 * *certified_genus + 1);
    }
    if (b.lower > *b.upper)
        throw InternalError("shaking number lower bound exceeds upper bound");
    return b;
}

ShakingBounds shaking_number_bounds(const KnotExpr& k, std::optional<long> certified_genus, long sample_cap)
{
    return shaking_number_bounds(carrier_of(k), certified_genus, sample_cap);
}

ShakingBounds shaking_number_bounds(const InvariantCarrier& c, const GenusWitness& w, long sample_cap)
{
    std::optional<long> g;
    if (w.verified && w.h == 0)
        g = w.g;
    return shaking_number_bounds(c, g, sample_cap);
}

} // namespace knotshake
