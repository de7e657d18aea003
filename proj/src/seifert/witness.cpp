#include "knotshake/witness.hpp"
#include "knotshake/error.hpp"
#include "knotshake/linalg.hpp"

namespace knotshake {

SympBasisChange symplectic_normalize(const SeifertMatrix& v)
{
    if (!v.is_knot())
        throw DomainError("antisymmetrization is not unimodular");
    Congruence c(v.matrix());
    symplectic_reduce(c, 0, c.size());
    return {c.basis(), c.moves()};
}

namespace {

bool odd(const BigInt& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

} // namespace

GenusWitness shake1_genus_witness(const SeifertMatrix& v, long g, long h)
{
    if (!v.is_knot())
        throw DomainError("witness construction requires a knot Seifert matrix");
    const long m = static_cast<long>(v.size()) / 2;
    if (h < 0 || h > g || g > m)
        throw DomainError("witness requires 0 <= h <= g <= m");
    const Eigen::Index p = 2 * (m - g);
    if (!is_alexander_trivial(IntMatrix(v.matrix().topLeftCorner(p, p))))
        throw DomainError("top-left block is not Alexander trivial");

    Congruence c(v.matrix());
    // (a) Split off the complement of P, then normalize it as a_1..a_g, b_1..b_g.
    if (p > 0) {
        IntMatrix omega_p(p, p);
        for (Eigen::Index i = 0; i < p; ++i)
            for (Eigen::Index j = 0; j < p; ++j)
                omega_p(i, j) = c.omega(i, j);
        const IntMatrix inv = unimodular_inverse(omega_p);
        for (Eigen::Index x = p; x < c.size(); ++x) {
            Vector<BigInt> w(p);
            for (Eigen::Index i = 0; i < p; ++i)
                w(i) = c.omega(i, x);
            const Vector<BigInt> coef = -(inv * w);
            for (Eigen::Index j = 0; j < p; ++j)
                c.add(x, j, coef(j));
        }
    }
    symplectic_reduce(c, p, c.size());
    {
        std::vector<Eigen::Index> order;
        for (Eigen::Index i = 0; i < p; ++i)
            order.push_back(i);
        for (long l = 0; l < g; ++l)
            order.push_back(p + 2 * l);
        for (long l = 0; l < g; ++l)
            order.push_back(p + 2 * l + 1);
        c.permute(order);
    }
    auto a = [&](long l) { return p + l; };
    auto b = [&](long l) { return p + g + l; };
    auto q = [&](Eigen::Index x) { return odd(c.form()(x, x)); };

    // (b) Make the self-pairings of a_1..a_{g-h} even.
    for (long l = 0; l < g - h; ++l) {
        if (!q(a(l)))
            continue;
        if (!q(b(l))) {
            c.swap(a(l), b(l));
            c.negate(b(l));
            continue;
        }
        if (l + 1 >= g)
            throw DomainError("parity obstruction: Arf nonzero");
        const long j = l + 1;
        if (!q(a(j))) {
            if (q(b(j))) {
                c.swap(a(j), b(j));
                c.negate(b(j));
            } else {
                c.add(a(j), b(j), 1);
            }
        }
        c.add(a(l), a(j), 1);
        c.add(b(j), b(l), -1);
    }

    // (c) Append g - h hyperbolic blocks [[0, 1], [1, 0]].
    const Eigen::Index base = c.size();
    for (long l = 0; l < g - h; ++l) {
        IntMatrix block(2, 2);
        block << BigInt(0), BigInt(1), BigInt(1), BigInt(0);
        c.extend(block);
    }

    // (d) a_l += f_l, then clear the a_l column using g_l.
    const Eigen::Index cleared = 2 * m - h;
    for (long l = 0; l < g - h; ++l) {
        const Eigen::Index f = base + 2 * l;
        const Eigen::Index gl = f + 1;
        c.add(a(l), f, 1);
        for (Eigen::Index x = 0; x < cleared; ++x) {
            if (x == a(l))
                continue;
            c.add(x, gl, -c.form()(x, a(l)));
        }
        const BigInt self = c.form()(a(l), a(l));
        if (odd(self))
            throw InternalError("parity step left an odd self-pairing");
        c.add(a(l), gl, -self / 2);
    }

    // (e) Sub-basis: P, a_1..a_{g-h}, b_1..b_{g-h}.
    GenusWitness w;
    w.g = g;
    w.h = h;
    for (Eigen::Index i = 0; i < p; ++i)
        w.subbasis.push_back(i);
    for (long l = 0; l < g - h; ++l)
        w.subbasis.push_back(a(l));
    for (long l = 0; l < g - h; ++l)
        w.subbasis.push_back(b(l));
    const auto k = static_cast<Eigen::Index>(w.subbasis.size());
    IntMatrix sub(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            sub(i, j) = c.form()(w.subbasis[static_cast<std::size_t>(i)],
                                 w.subbasis[static_cast<std::size_t>(j)]);
    w.m = SeifertMatrix(c.form(), SeifertKind::link);
    w.m_sub = SeifertMatrix(sub, SeifertKind::link);
    w.basis = c.basis();
    w.determinant = alexander_determinant(sub);
    w.verified = w.determinant.is_unit() && w.determinant.lo() == m - h;
    return w;
}

} // namespace knotshake
