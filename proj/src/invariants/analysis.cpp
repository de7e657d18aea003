#include "knotshake/congruence.hpp"
#include "knotshake/error.hpp"
#include "knotshake/invariants.hpp"
#include "knotshake/qpoly.hpp"
#include "knotshake/resultant.hpp"

namespace knotshake {

int arf_levine(const LaurentPoly& delta)
{
    BigInt v = abs(delta.eval_at_minus_one());
    const unsigned long r = mpz_fdiv_ui(v.get_mpz_t(), 8);
    if (r == 1 || r == 7)
        return 0;
    if (r == 3 || r == 5)
        return 1;
    throw DomainError("Delta(-1) is even: not the Alexander polynomial of a knot");
}

int arf_symplectic(const SeifertMatrix& v)
{
    if (!v.is_knot())
        throw DomainError("Arf invariant requires a knot Seifert matrix");
    Congruence c(v.matrix());
    symplectic_reduce(c, 0, c.size());
    BigInt total = 0;
    for (Eigen::Index i = 0; i < c.size(); i += 2)
        total += c.form()(i, i) * c.form()(i + 1, i + 1);
    return mpz_odd_p(total.get_mpz_t()) ? 1 : 0;
}

ArfValue arf(const SeifertMatrix& v)
{
    const int a = arf_levine(alexander_poly(v));
    const int b = arf_symplectic(v);
    if (a != b)
        throw InternalError("Arf invariant methods disagree");
    return {a};
}

ArfValue arf(const InvariantCarrier& c)
{
    const int a = arf_levine(c.delta());
    if (const SeifertMatrix* v = c.matrix())
        if (arf_symplectic(*v) != a)
            throw InternalError("Arf invariant methods disagree");
    return {a};
}

BranchedOrder branched_cover_order(const LaurentPoly& delta, long n)
{
    if (n < 1)
        throw DomainError("branched cover order requires n >= 1");
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    c.front() = -1;
    c.back() = 1;
    const BigInt r = abs(resultant(delta, LaurentPoly(0, std::move(c))));
    return {r, r == 0};
}

BranchedOrder branched_cover_order(const InvariantCarrier& c, long n)
{
    return branched_cover_order(c.delta(), n);
}

namespace {

// R with Delta(t) = R(t + 1/t) for symmetric Delta.
qpoly::QPoly circle_polynomial(const LaurentPoly& delta)
{
    if (!delta.is_symmetric())
        throw InternalError("circle polynomial needs a symmetric Laurent polynomial");
    const long d = delta.is_zero() ? 0 : static_cast<long>(delta.hi());
    qpoly::QPoly r{Rational(delta.coeff(0))};
    qpoly::QPoly prev{Rational(2)};             // t^0 + t^0
    qpoly::QPoly cur{Rational(0), Rational(1)}; // t + 1/t
    const qpoly::QPoly x{Rational(0), Rational(1)};
    for (long j = 1; j <= d; ++j) {
        const Rational c(delta.coeff(j));
        if (r.size() < cur.size())
            r.resize(cur.size(), Rational(0));
        for (std::size_t i = 0; i < cur.size(); ++i)
            r[i] += c * cur[i];
        qpoly::QPoly next = qpoly::subtract(qpoly::multiply(x, cur), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    qpoly::trim(r);
    return r;
}

// Rational enclosure of 2 cos(2 pi k / n).
std::pair<Rational, Rational> cos_enclosure(long k, long n, long prec)
{
    const CycloElement x = CycloElement::zeta_power(k, n) + CycloElement::zeta_power(-k, n);
    return real_enclosure(x, prec);
}

} // namespace

long count_circle_roots(const LaurentPoly& delta, const Rational& lo, const Rational& hi)
{
    return CircleRootCounter(delta).count(lo, hi);
}

CircleRootCounter::CircleRootCounter(const LaurentPoly& delta) : chain_(circle_polynomial(delta)) {}

long CircleRootCounter::count(const Rational& lo, const Rational& hi) const
{
    const Rational a = lo < -2 ? Rational(-2) : lo;
    const Rational b = hi > 2 ? Rational(2) : hi;
    if (a > b)
        return 0;
    return chain_.count(a, b);
}

std::optional<RootOfUnity> arc_proxy(const CircleRootCounter& roots, const RootOfUnity& w, long max_order)
{
    RootOfUnity r = w.reduced();
    if (r.is_one())
        return std::nullopt;
    if (2 * r.k() > r.n())
        r = r.conj();
    const long prec = embed_precision_bits();
    const auto ew = cos_enclosure(r.k(), r.n(), prec);
    if (roots.count(ew.first, ew.second) != 0)
        return std::nullopt;
    const Rational theta = r.angle();
    Rational delta = std::min<Rational>(theta, Rational(1, 2) - theta);
    if (delta == 0)
        return std::nullopt;
    for (int step = 0; step < 64; ++step, delta /= 2) {
        const Rational c = simplest_between(theta - delta, theta + delta);
        if (c == theta || c.get_den() > max_order)
            return std::nullopt;
        const long j = c.get_num().get_si(), d = c.get_den().get_si();
        const auto ec = cos_enclosure(j, d, prec);
        if (roots.count(std::min(ec.first, ew.first), std::max(ec.second, ew.second)) == 0)
            return RootOfUnity(j, d);
    }
    return std::nullopt;
}

Rational tl_signature_averaged(const InvariantCarrier& c, const RootOfUnity& w)
{
    RootOfUnity r = w.reduced();
    if (r.is_one())
        return 0;
    if (2 * r.k() > r.n())
        r = r.conj();
    if (!eval_at_root(c.delta(), r).is_zero())
        return c.signature(r);
    const long prec = embed_precision_bits();
    for (long m = 4; m <= (1L << 20); m *= 2) {
        const long n = r.n() * m;
        const RootOfUnity below(r.k() * m - 1, n);
        const RootOfUnity above(r.k() * m + 1, n);
        if (eval_at_root(c.delta(), below).is_zero() || eval_at_root(c.delta(), above).is_zero())
            continue;
        const auto eb = cos_enclosure(below.k(), n, prec);
        const auto ea = cos_enclosure(above.k(), n, prec);
        const Rational lo = std::min(eb.first, ea.first);
        const Rational hi = std::max(eb.second, ea.second);
        if (count_circle_roots(c.delta(), lo, hi) != 1)
            continue;
        return make_rational(c.signature(below) + c.signature(above), 2);
    }
    throw InternalError("could not isolate the root of Delta for the averaged signature");
}

Rational simplest_between(const Rational& lo, const Rational& hi)
{
    if (lo < 0 || lo >= hi)
        throw DomainError("simplest fraction needs 0 <= lo < hi");
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (Rational(fl + 1) < hi)
        return Rational(fl + 1);
    const Rational base(fl);
    if (lo == base) {
        const Rational inv = 1 / (hi - base);
        BigInt m;
        mpz_fdiv_q(m.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
        return base + make_rational(1, m + 1);
    }
    return base + 1 / simplest_between(1 / (hi - base), 1 / (lo - base));
}

std::optional<std::pair<Rational, Rational>> first_jump_bracket(const InvariantCarrier& c,
                                                                const Rational& resolution)
{
    if (resolution <= 0)
        throw DomainError("resolution must be positive");
    if (count_circle_roots(c.delta(), -2, 2) == 0)
        return std::nullopt; // signature is constant, hence 0, off t = 1
    const Rational inv = 1 / resolution;
    BigInt ceil_inv;
    mpz_cdiv_q(ceil_inv.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
    const BigInt cap = 4 * ceil_inv;
    auto sigma = [&](const Rational& x) {
        return c.signature(RootOfUnity(x.get_num().get_si(), x.get_den().get_si()));
    };

    std::optional<Rational> found;
    for (long level = 2; BigInt(level) <= cap && !found; level *= 2)
        for (long j = 1; 2 * j <= level; j += 2)
            if (sigma(make_rational(j, level)) != 0) {
                found = make_rational(j, level);
                break;
            }
    if (!found)
        return std::nullopt;

    Rational b = *found;
    Rational a = b - Rational(1, b.get_den());
    int run_a = 0, run_b = 0;
    while (b - a > resolution) {
        Rational lo = a, hi = b;
        if (run_b >= 2)
            hi = a + (b - a) / Rational(BigInt(1) << static_cast<unsigned>(std::min(run_b - 1, 30)));
        else if (run_a >= 2)
            lo = b - (b - a) / Rational(BigInt(1) << static_cast<unsigned>(std::min(run_a - 1, 30)));
        Rational x = simplest_between(lo, hi);
        if (x.get_den() > cap)
            x = simplest_between(a, b);
        if (x.get_den() > cap)
            break;
        if (sigma(x) == 0) {
            a = x;
            ++run_a;
            run_b = 0;
        } else {
            b = x;
            ++run_b;
            run_a = 0;
        }
    }
    return std::make_pair(a, b);
}

} // namespace knotshake
