#include "knotshake/multisig.hpp"
#include "knotshake/error.hpp"

namespace knotshake {

LaurentPoly reduce_group_ring(const LaurentPoly& p, long n)
{
    if (n < 1)
        throw DomainError("group ring order must be positive");
    std::vector<BigInt> c(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const std::int64_t e = p.lo() + static_cast<std::int64_t>(i);
        c[static_cast<std::size_t>(((e % n) + n) % n)] += p.coeffs()[i];
    }
    return LaurentPoly(0, std::move(c));
}

LaurentPoly group_ring_conj(const LaurentPoly& p, long n)
{
    return reduce_group_ring(p.substitute_power(-1), n);
}

GroupRingForm::GroupRingForm(long n, Matrix<LaurentPoly> entries) : n_(n), a_(std::move(entries))
{
    if (n_ < 1)
        throw DomainError("group ring order must be positive");
    if (a_.rows() != a_.cols())
        throw DomainError("group ring form must be square");
    for (Eigen::Index i = 0; i < a_.rows(); ++i)
        for (Eigen::Index j = 0; j < a_.cols(); ++j)
            a_(i, j) = reduce_group_ring(a_(i, j), n_);
    for (Eigen::Index i = 0; i < a_.rows(); ++i)
        for (Eigen::Index j = i; j < a_.cols(); ++j)
            if (!(a_(j, i) == group_ring_conj(a_(i, j), n_)))
                throw DomainError("group ring form is not Hermitian");
}

HermitianMatrix GroupRingForm::evaluate(long k) const
{
    const RootOfUnity w = RootOfUnity(k, n_).reduced();
    CycloMatrix h(a_.rows(), a_.cols());
    for (Eigen::Index i = 0; i < a_.rows(); ++i)
        for (Eigen::Index j = 0; j < a_.cols(); ++j)
            h(i, j) = eval_at_root(a_(i, j), w);
    return HermitianMatrix(w.n(), std::move(h));
}

GroupRingForm tristram_levine_group_form(const SeifertMatrix& v, long n)
{
    const IntMatrix& m = v.matrix();
    Matrix<LaurentPoly> a(m.rows(), m.cols());
    const LaurentPoly one_minus_t = LaurentPoly(0, {BigInt(1), BigInt(-1)});
    const LaurentPoly one_minus_inv = LaurentPoly(-1, {BigInt(-1), BigInt(1)});
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            a(i, j) = one_minus_t * LaurentPoly(m(i, j)) + one_minus_inv * LaurentPoly(m(j, i));
    return GroupRingForm(n, std::move(a));
}

GroupRingForm block_sum(const GroupRingForm& a, const GroupRingForm& b)
{
    if (a.n() != b.n())
        throw DomainError("block sum needs forms over the same group ring");
    const Eigen::Index p = a.size(), q = b.size();
    Matrix<LaurentPoly> m(p + q, p + q);
    for (Eigen::Index i = 0; i < p + q; ++i)
        for (Eigen::Index j = 0; j < p + q; ++j)
            m(i, j) = LaurentPoly();
    m.topLeftCorner(p, p) = a.entries();
    m.bottomRightCorner(q, q) = b.entries();
    return GroupRingForm(a.n(), std::move(m));
}

Multisignature multisignature(const GroupRingForm& f)
{
    Multisignature m;
    for (long k = 0; k < f.n(); ++k)
        m.alpha.push_back(hermitian_signature(f.evaluate(k)).signature());
    return m;
}

std::vector<long> l4s_coordinates(const Multisignature& m)
{
    const long n = static_cast<long>(m.alpha.size());
    std::vector<long> out;
    if (n % 2 == 1) {
        for (long k = 1; k <= (n - 1) / 2; ++k)
            out.push_back(m.alpha[static_cast<std::size_t>(k)]);
    } else {
        for (long k = 1; k <= (n - 2) / 2; ++k)
            out.push_back(m.alpha[static_cast<std::size_t>(k)]);
        out.push_back(m.alpha[static_cast<std::size_t>(n / 2)]);
    }
    out.push_back(m.alpha[0]);
    return out;
}

std::vector<long> l4s_coordinates(const GroupRingForm& f) { return l4s_coordinates(multisignature(f)); }

L4sVanishing l4s_vanishes_for_knot(const InvariantCarrier& c, long n)
{
    if (n < 2)
        throw DomainError("L-group vanishing test requires n >= 2");
    L4sVanishing r;
    const long last = n % 2 == 1 ? (n - 1) / 2 : n / 2;
    for (long k = 1; k <= last; ++k) {
        const long s = c.signature(RootOfUnity(k, n));
        r.signatures.emplace_back(k, s);
        if (s != 0)
            r.vanishes = false;
    }
    return r;
}

L4sVanishing l4s_vanishes_for_knot(const KnotExpr& k, long n) { return l4s_vanishes_for_knot(carrier_of(k), n); }

} // namespace knotshake
