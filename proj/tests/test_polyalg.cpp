#include "oracles.hpp"

#include "knotshake/error.hpp"
#include "knotshake/hermitian.hpp"
#include "knotshake/qpoly.hpp"
#include "knotshake/resultant.hpp"

#include <doctest.h>

using namespace knotshake;

namespace {

LaurentPoly poly(std::int64_t lo, std::initializer_list<long> c)
{
    std::vector<BigInt> v;
    for (long x : c)
        v.emplace_back(x);
    return LaurentPoly(lo, std::move(v));
}

CycloElement random_element(oracle::Gen& g, long n)
{
    CycloElement x(0L);
    for (long j = 0; j < std::min<long>(n, 4); ++j)
        x += CycloElement(g.uniform(-2, 2)) * CycloElement::zeta_power(g.uniform(0, n - 1), n);
    return x;
}

CycloMatrix random_hermitian(oracle::Gen& g, long n, Eigen::Index size)
{
    CycloMatrix b(size, size);
    for (Eigen::Index i = 0; i < size; ++i)
        for (Eigen::Index j = 0; j < size; ++j)
            b(i, j) = g.uniform(0, 2) == 0 ? CycloElement(0L) : random_element(g, n);
    CycloMatrix h = b;
    const CycloMatrix bs = conjugate_transpose(b);
    for (Eigen::Index i = 0; i < size; ++i)
        for (Eigen::Index j = 0; j < size; ++j)
            h(i, j) = b(i, j) + bs(i, j);
    return h;
}

CycloMatrix multiply(const CycloMatrix& a, const CycloMatrix& b)
{
    CycloMatrix c(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            CycloElement s(0L);
            for (Eigen::Index k = 0; k < a.cols(); ++k)
                s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

} // namespace

TEST_CASE("laurent arithmetic and normalization")
{
    const LaurentPoly tref = poly(-1, {1, -1, 1});
    CHECK(tref.is_symmetric());
    CHECK(tref.eval_at_one() == 1);
    CHECK(tref.eval_at_minus_one() == -3);
    CHECK(to_string(tref) == "t - 1 + t^-1");
    CHECK(poly(3, {1, -1, 1}).symmetrized() == tref);
    CHECK(poly(0, {-1, 1, -1}).symmetrized() == tref);
    CHECK(exact_quotient(tref * poly(0, {1, 1}), poly(0, {1, 1})) == tref);
    CHECK(tref.substitute_power(2) == poly(-2, {1, 0, -1, 0, 1}));
    CHECK(poly(0, {0, 0, 5, 0}) == LaurentPoly::monomial(5, 2));
    CHECK(LaurentPoly::monomial(-1, 4).is_unit());
}

TEST_CASE("resultant examples")
{
    CHECK(resultant(LaurentPoly::t(), poly(0, {-1, 1})) == 1);

    const LaurentPoly p = poly(0, {1, -1, 1});
    const BigInt r1 = oracle::sylvester_resultant(p, poly(0, {1, 0, 1}));
    CHECK(r1 == 1);
    CHECK(resultant(p, poly(0, {1, 0, 1})) == r1);

    const BigInt r2 = oracle::sylvester_resultant(p, poly(0, {-1, 0, 0, 1}));
    CHECK(r2 == 4);
    CHECK(resultant(p, poly(0, {-1, 0, 0, 1})) == r2);

    CHECK_THROWS_WITH_AS(resultant(LaurentPoly(), p), "resultant of zero polynomial undefined", DomainError);
    CHECK_THROWS_AS(resultant(p, LaurentPoly()), DomainError);
}

TEST_CASE("resultant agrees with the Sylvester oracle")
{
    oracle::Gen g(11);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPoly p = g.laurent(5, 4);
        const LaurentPoly q = g.laurent(5, 4);
        CAPTURE(to_string(p));
        CAPTURE(to_string(q));
        CHECK(resultant(p, q) == oracle::sylvester_resultant(p, q));
    }
}

TEST_CASE("resultant antisymmetry and multiplicativity")
{
    oracle::Gen g(12);
    for (int trial = 0; trial < 100; ++trial) {
        const LaurentPoly p = g.laurent(4, 3), q = g.laurent(4, 3), r = g.laurent(3, 3);
        const long dp = p.span(), dq = q.span();
        const int s = (dp * dq) % 2 == 0 ? 1 : -1;
        CHECK(resultant(p, q) * s == resultant(q, p));
        CHECK(resultant(p, q * r) == resultant(p, q) * resultant(p, r));
    }
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_poly(1) == poly(0, {-1, 1}));
    CHECK(cyclotomic_poly(6) == poly(0, {1, -1, 1}));
    CHECK(cyclotomic_poly(12) == poly(0, {1, 0, -1, 0, 1}));
    for (long n = 1; n <= 60; ++n)
        CHECK(cyclotomic_poly(n).hi() == euler_phi(n));
    // Phi_105 is the first with a coefficient outside {-1, 0, 1}.
    CHECK(cyclotomic_poly(105).coeff(7) == -2);
}

TEST_CASE("evaluation at roots of unity")
{
    const LaurentPoly tref = poly(-1, {1, -1, 1});
    CHECK(eval_at_root(tref, RootOfUnity(0, 1)) == CycloElement(1L));
    CHECK(eval_at_root(tref, RootOfUnity(1, 6)).is_zero());
    CHECK(eval_at_root(tref, RootOfUnity(1, 2)) == CycloElement(-3L));
    CHECK(eval_at_root(tref, RootOfUnity(2, 4)) == CycloElement(-3L));

    oracle::Gen g(13);
    for (int trial = 0; trial < 100; ++trial) {
        const LaurentPoly p = g.laurent(6, 3), q = g.laurent(6, 3);
        const RootOfUnity w(g.uniform(0, 20), g.uniform(1, 21));
        CHECK(eval_at_root(p * q, w) == eval_at_root(p, w) * eval_at_root(q, w));
    }
}

TEST_CASE("cyclotomic field arithmetic")
{
    const CycloElement z = CycloElement::zeta_power(1, 5);
    CycloElement acc(1L);
    for (int i = 0; i < 5; ++i)
        acc *= z;
    CHECK(acc == CycloElement(1L));
    CHECK(z.conj() == CycloElement::zeta_power(4, 5));
    CHECK((z + z.conj()).is_real());

    oracle::Gen g(14);
    for (int trial = 0; trial < 50; ++trial) {
        const long n = g.uniform(3, 30);
        const CycloElement x = random_element(g, n);
        if (x.is_zero())
            continue;
        CHECK(x * x.inverse() == CycloElement(1L));
    }
}

TEST_CASE("real sign by adaptive enclosure")
{
    // 2 cos(2 pi / 7) > 0 and 2 cos(6 pi / 7) < 0.
    CHECK(real_sign(CycloElement::zeta_power(1, 7) + CycloElement::zeta_power(-1, 7)) == 1);
    CHECK(real_sign(CycloElement::zeta_power(3, 7) + CycloElement::zeta_power(-3, 7)) == -1);
    CHECK(real_sign(CycloElement(0L)) == 0);
    // Golden ratio identity: zeta_5 + zeta_5^-1 = (sqrt 5 - 1) / 2, so this is tiny.
    const CycloElement phi = CycloElement::zeta_power(1, 5) + CycloElement::zeta_power(4, 5);
    const CycloElement tiny = phi - CycloElement(Rational("618033988749894848/1000000000000000000"));
    CHECK(real_sign(tiny) == 1);
}

TEST_CASE("hermitian signature examples")
{
    CycloMatrix a(1, 1);
    a(0, 0) = CycloElement(2L);
    CHECK(hermitian_signature(HermitianMatrix(1, a)) == Inertia{1, 0, 0});

    CycloMatrix b(2, 2);
    b << CycloElement(0L), CycloElement(1L), CycloElement(1L), CycloElement(0L);
    CHECK(hermitian_signature(HermitianMatrix(1, b)) == Inertia{1, 1, 0});

    CycloMatrix c(2, 2);
    c << CycloElement(-4L), CycloElement(2L), CycloElement(2L), CycloElement(-4L);
    const Inertia i = hermitian_signature(HermitianMatrix(1, c));
    CHECK(i == Inertia{0, 2, 0});
    CHECK(i.signature() == -2);

    CycloMatrix bad(2, 2);
    bad << CycloElement(0L), CycloElement::zeta_power(1, 3), CycloElement::zeta_power(1, 3), CycloElement(0L);
    CHECK_THROWS_AS(HermitianMatrix(3, bad), DomainError);
}

TEST_CASE("hermitian signature is a congruence invariant")
{
    oracle::Gen g(15);
    for (int trial = 0; trial < 60; ++trial) {
        const long n = g.uniform(1, 12);
        const auto size = static_cast<Eigen::Index>(g.uniform(1, 6));
        const CycloMatrix h = random_hermitian(g, n, size);
        const Inertia base = hermitian_signature(HermitianMatrix(n, h));
        CHECK(base.pos + base.neg + base.null == size);

        CycloMatrix u = CycloMatrix::Identity(size, size);
        for (int m = 0; m < 6 && size > 1; ++m) {
            const auto i = static_cast<Eigen::Index>(g.uniform(0, size - 1));
            const auto j = static_cast<Eigen::Index>((i + g.uniform(1, size - 1)) % size);
            const CycloElement f = random_element(g, n);
            for (Eigen::Index r = 0; r < size; ++r)
                u(r, i) += f * u(r, j);
        }
        const CycloMatrix moved = multiply(multiply(conjugate_transpose(u), h), u);
        CHECK(hermitian_signature(HermitianMatrix(n, moved)) == base);

        CycloMatrix neg = h;
        for (Eigen::Index r = 0; r < size; ++r)
            for (Eigen::Index s = 0; s < size; ++s)
                neg(r, s) = -h(r, s);
        const Inertia ni = hermitian_signature(HermitianMatrix(n, neg));
        CHECK(ni.signature() == -base.signature());
        CHECK(ni.null == base.null);
    }
}

TEST_CASE("sturm root counts")
{
    using namespace qpoly;
    // (x - 1)^2 (x + 2) has two distinct roots.
    const QPoly p = multiply(multiply(QPoly{-1, 1}, QPoly{-1, 1}), QPoly{2, 1});
    CHECK(count_real_roots(p, -3, 3) == 2);
    CHECK(count_real_roots(p, -2, -2) == 1);
    CHECK(count_real_roots(p, 0, Rational(1, 2)) == 0);
    CHECK(count_real_roots(QPoly{1, 0, 1}, -10, 10) == 0);
}
