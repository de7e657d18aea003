#include "knotshake/cyclotomic.hpp"
#include "knotshake/error.hpp"

#include <mpfr.h>

#include <cstdlib>
#include <map>
#include <memory>
#include <string>

namespace knotshake {

namespace {

class Mpfr {
public:
    explicit Mpfr(long precision) { mpfr_init2(v_, precision); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

struct CosBounds {
    std::unique_ptr<Mpfr> lo;
    std::unique_ptr<Mpfr> hi;
};

// cos(2 pi j / n) enclosures, one table per (n, precision) and thread.
class CosTable {
public:
    CosTable(long n, long prec) : n_(n), prec_(prec), cache_(static_cast<std::size_t>(n)) {}

    const CosBounds& get(long j)
    {
        CosBounds& b = cache_[static_cast<std::size_t>(j)];
        if (!b.lo)
            fill(j, b);
        return b;
    }

private:
    void fill(long j, CosBounds& b) const
    {
        b.lo = std::make_unique<Mpfr>(prec_);
        b.hi = std::make_unique<Mpfr>(prec_);
        long jj = std::min(j, n_ - j);
        if (jj == 0) {
            mpfr_set_ui(b.lo->get(), 1, MPFR_RNDN);
            mpfr_set_ui(b.hi->get(), 1, MPFR_RNDN);
            return;
        }
        if (2 * jj == n_) {
            mpfr_set_si(b.lo->get(), -1, MPFR_RNDN);
            mpfr_set_si(b.hi->get(), -1, MPFR_RNDN);
            return;
        }
        if (4 * jj == n_) {
            mpfr_set_ui(b.lo->get(), 0, MPFR_RNDN);
            mpfr_set_ui(b.hi->get(), 0, MPFR_RNDN);
            return;
        }
        // Angle lies in (0, pi) where cos is decreasing.
        Mpfr pi_lo(prec_), pi_hi(prec_), x_lo(prec_), x_hi(prec_);
        mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
        mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
        mpfr_mul_ui(x_lo.get(), pi_lo.get(), static_cast<unsigned long>(2 * jj), MPFR_RNDD);
        mpfr_div_ui(x_lo.get(), x_lo.get(), static_cast<unsigned long>(n_), MPFR_RNDD);
        mpfr_mul_ui(x_hi.get(), pi_hi.get(), static_cast<unsigned long>(2 * jj), MPFR_RNDU);
        mpfr_div_ui(x_hi.get(), x_hi.get(), static_cast<unsigned long>(n_), MPFR_RNDU);
        if (mpfr_cmp(x_hi.get(), pi_lo.get()) >= 0)
            mpfr_set_si(b.lo->get(), -1, MPFR_RNDN);
        else
            mpfr_cos(b.lo->get(), x_hi.get(), MPFR_RNDD);
        mpfr_cos(b.hi->get(), x_lo.get(), MPFR_RNDU);
    }

    long n_;
    long prec_;
    std::vector<CosBounds> cache_;
};

CosTable& cos_table(long n, long prec)
{
    thread_local std::map<std::pair<long, long>, std::unique_ptr<CosTable>> tables;
    auto& slot = tables[{n, prec}];
    if (!slot)
        slot = std::make_unique<CosTable>(n, prec);
    return *slot;
}

// Encloses the real part of numerator(zeta_n) without the denominator.
void enclose_numerator(const CycloElement& x, long prec, Mpfr& lo, Mpfr& hi)
{
    CosTable& table = cos_table(x.conductor(), prec);
    Mpfr term(prec);
    mpfr_set_ui(lo.get(), 0, MPFR_RNDN);
    mpfr_set_ui(hi.get(), 0, MPFR_RNDN);
    const auto& num = x.numerator();
    for (std::size_t j = 0; j < num.size(); ++j) {
        const int s = sgn(num[j]);
        if (s == 0)
            continue;
        const CosBounds& b = table.get(static_cast<long>(j));
        const mpz_srcptr c = num[j].get_mpz_t();
        mpfr_mul_z(term.get(), s > 0 ? b.lo->get() : b.hi->get(), c, MPFR_RNDD);
        mpfr_add(lo.get(), lo.get(), term.get(), MPFR_RNDD);
        mpfr_mul_z(term.get(), s > 0 ? b.hi->get() : b.lo->get(), c, MPFR_RNDU);
        mpfr_add(hi.get(), hi.get(), term.get(), MPFR_RNDU);
    }
}

long read_precision()
{
    const char* env = std::getenv("TRACE_EMBED_PRECISION_BITS");
    if (env == nullptr)
        return 128;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 16)
        return 128;
    return v;
}

} // namespace

long embed_precision_bits()
{
    static const long bits = read_precision();
    return bits;
}

std::pair<Rational, Rational> real_enclosure(const CycloElement& x, long precision_bits)
{
    if (x.is_rational()) {
        const Rational v = x.rational_value();
        return {v, v};
    }
    Mpfr lo(precision_bits), hi(precision_bits);
    enclose_numerator(x, precision_bits, lo, hi);
    Rational a, b;
    mpfr_get_q(a.get_mpq_t(), lo.get());
    mpfr_get_q(b.get_mpq_t(), hi.get());
    return {a / x.denominator(), b / x.denominator()};
}

int real_sign(const CycloElement& x)
{
    if (x.is_zero())
        return 0;
    if (x.is_rational())
        return sgn(x.numerator()[0]);
    if (!x.is_real())
        throw InternalError("sign requested for a non-real element");
    for (long prec = embed_precision_bits(); prec <= (1L << 24); prec *= 2) {
        Mpfr lo(prec), hi(prec);
        enclose_numerator(x, prec, lo, hi);
        if (mpfr_sgn(lo.get()) > 0)
            return 1;
        if (mpfr_sgn(hi.get()) < 0)
            return -1;
    }
    throw InternalError("sign undecided at maximum precision");
}

} // namespace knotshake
