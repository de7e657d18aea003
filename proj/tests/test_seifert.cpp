#include "oracles.hpp"

#include "knotshake/error.hpp"
#include "knotshake/invariants.hpp"
#include "knotshake/witness.hpp"

#include <doctest.h>

using namespace knotshake;

namespace {

IntMatrix mat(Eigen::Index n, std::initializer_list<long> entries)
{
    IntMatrix m(n, n);
    auto it = entries.begin();
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = BigInt(*it++);
    return m;
}

LaurentPoly poly(std::int64_t lo, std::initializer_list<long> c)
{
    std::vector<BigInt> v;
    for (long x : c)
        v.emplace_back(x);
    return LaurentPoly(lo, std::move(v));
}

const LaurentPoly trefoil_delta = poly(-1, {1, -1, 1});

IntMatrix standard_symplectic(Eigen::Index n)
{
    IntMatrix j = IntMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i + 1 < n; i += 2) {
        j(i, i + 1) = 1;
        j(i + 1, i) = -1;
    }
    return j;
}

IntMatrix skew(const IntMatrix& v) { return v - v.transpose(); }

} // namespace

TEST_CASE("torus Seifert matrices")
{
    const SeifertMatrix t23 = torus_seifert(2, 3);
    CHECK(t23.size() == 2);
    CHECK(t23.is_knot());
    CHECK(alexander_poly(t23) == trefoil_delta);
    CHECK(tl_signature(t23, RootOfUnity(1, 2)) == -2);

    const LaurentPoly d25 = oracle::torus_alexander_product(2, 5);
    CHECK(d25 == poly(-2, {1, -1, 1, -1, 1}));
    CHECK(alexander_poly(torus_seifert(2, 5)) == d25);

    const SeifertMatrix t34 = torus_seifert(3, 4);
    CHECK(t34.size() == 6);
    const BigInt r = abs(oracle::sylvester_resultant(alexander_poly(t34), poly(0, {-1, 0, 1})));
    CHECK(r == 3);

    CHECK_THROWS_WITH_AS(torus_seifert(2, 4), "torus link, not a knot", DomainError);
    CHECK_THROWS_AS(torus_seifert(1, 4), DomainError);
}

TEST_CASE("torus Seifert matrices match the closed forms")
{
    for (long p = 2; p <= 5; ++p)
        for (long q = p + 1; q <= 9; ++q) {
            if (std::gcd(p, q) != 1)
                continue;
            CAPTURE(p);
            CAPTURE(q);
            const SeifertMatrix a = torus_seifert(p, q), b = torus_seifert(q, p);
            const LaurentPoly d = oracle::torus_alexander_product(p, q);
            CHECK(alexander_poly(a) == d);
            CHECK(alexander_poly(b) == d);
            CHECK(torus_alexander(p, q) == d);
            for (long n : {2L, 3L, 5L, 7L, 12L})
                for (long k = 1; k < n; ++k) {
                    const long expect = oracle::torus_signature_lattice(p, q, make_rational(k, n));
                    CHECK(tl_signature(a, RootOfUnity(k, n)) == expect);
                    CHECK(tl_signature(b, RootOfUnity(k, n)) == expect);
                }
        }
}

TEST_CASE("twist knots")
{
    CHECK(twist_seifert(2).matrix() == mat(2, {-1, 1, 0, 2}));
    CHECK(alexander_poly(twist_seifert(1)) == poly(-1, {-1, 3, -1}));
    CHECK(alexander_poly(twist_seifert(-1)) == trefoil_delta);
    CHECK(alexander_poly(twist_seifert(-2)) == poly(-1, {2, -3, 2}));
    CHECK(tl_signature(twist_seifert(-2), RootOfUnity(1, 2)) == -2);
    CHECK(alexander_poly(twist_seifert(0)) == LaurentPoly(1L));
}

TEST_CASE("mirror and connected sum")
{
    const SeifertMatrix v = twist_seifert(-1);
    CHECK(mirror(v).matrix() == mat(2, {1, 0, -1, 1}));
    CHECK(mirror(mirror(v)) == v);
    CHECK(tl_signature(mirror(v), RootOfUnity(1, 2)) == 2);

    CHECK(connected_sum(v, SeifertMatrix()) == v);
    CHECK(alexander_poly(connected_sum(v, v)) == trefoil_delta * trefoil_delta);
    const LaurentPoly fig = poly(-1, {-1, 3, -1});
    CHECK(alexander_poly(connected_sum(twist_seifert(1), twist_seifert(1))) == fig * fig);
    CHECK(alexander_poly(connected_sum(twist_seifert(1), twist_seifert(1))).shifted(2) ==
          poly(0, {1, -3, 1}) * poly(0, {1, -3, 1}));

    const SeifertMatrix link = shaking_matrix(v, 1, 1);
    CHECK_THROWS_AS(connected_sum(link, v), DomainError);
}

TEST_CASE("connected sum is associative up to invariants")
{
    oracle::Gen g(21);
    for (int trial = 0; trial < 20; ++trial) {
        const SeifertMatrix a = g.knot_matrix(4), b = g.knot_matrix(4), c = g.knot_matrix(4);
        const SeifertMatrix l = connected_sum(connected_sum(a, b), c);
        const SeifertMatrix r = connected_sum(a, connected_sum(b, c));
        CHECK(alexander_poly(l) == alexander_poly(r));
        for (long k = 1; k <= 3; ++k)
            CHECK(tl_signature(l, RootOfUnity(k, 7)) == tl_signature(r, RootOfUnity(k, 7)));
    }
}

TEST_CASE("shaking matrices")
{
    const SeifertMatrix v = twist_seifert(-1);
    CHECK(shaking_matrix(v, 0, 3).matrix() == v.matrix());

    const SeifertMatrix s1 = shaking_matrix(v, 1, 1);
    CHECK(s1.size() == 4);
    CHECK(s1.matrix().bottomRightCorner(2, 2) == mat(2, {0, 1, 1, 0}));
    CHECK(s1.kind() == SeifertKind::link);

    const SeifertMatrix s2 = shaking_matrix(v, 1, 2);
    CHECK(s2.size() == 6);
    CHECK(s2.matrix().bottomRightCorner(4, 4) == mat(4, {0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0}));
    CHECK(s2.matrix().topRightCorner(2, 4).isZero());

    CHECK_THROWS_AS(shaking_matrix(v, 1, 0), DomainError);

    // Each shaking block fixes the all-ones direction of the skew form.
    for (long k = 1; k <= 3; ++k)
        for (long n = 1; n <= 4; ++n) {
            const IntMatrix w = skew(shaking_matrix(v, k, n).matrix());
            CHECK(w.rows() - oracle::rank(w) >= k);
        }
}

TEST_CASE("Alexander trivial blocks")
{
    CHECK(is_alexander_trivial(IntMatrix(0, 0)));
    CHECK(alexander_determinant(mat(2, {0, 1, 0, 0})) == LaurentPoly::t());
    CHECK(is_alexander_trivial(mat(2, {0, 1, 0, 0})));
    CHECK(alexander_determinant(mat(2, {-1, 1, 0, -1})) == poly(0, {1, -1, 1}));
    CHECK_FALSE(is_alexander_trivial(mat(2, {-1, 1, 0, -1})));
}

TEST_CASE("symplectic normalization")
{
    const SeifertMatrix tref = twist_seifert(-1);
    CHECK(symplectic_normalize(tref).u == IntMatrix::Identity(2, 2));

    const SeifertMatrix sum = connected_sum(tref, tref);
    const SympBasisChange c = symplectic_normalize(sum);
    CHECK(c.u.transpose() * skew(sum.matrix()) * c.u == standard_symplectic(4));

    // Block permutation of the sum.
    IntMatrix p = IntMatrix::Zero(4, 4);
    p(0, 2) = p(1, 0) = p(2, 3) = p(3, 1) = 1;
    const SeifertMatrix permuted(IntMatrix(p.transpose() * sum.matrix() * p), SeifertKind::knot);
    const SympBasisChange cp = symplectic_normalize(permuted);
    CHECK(cp.u.transpose() * skew(permuted.matrix()) * cp.u == standard_symplectic(4));
    CHECK(abs(integer_determinant(cp.u)) == 1);

    oracle::Gen g(22);
    for (int trial = 0; trial < 50; ++trial) {
        const SeifertMatrix v = g.knot_matrix(8);
        const SympBasisChange s = symplectic_normalize(v);
        CHECK(abs(integer_determinant(s.u)) == 1);
        CHECK(s.u.transpose() * skew(v.matrix()) * s.u == standard_symplectic(v.size()));
    }

    const SeifertMatrix bad(mat(2, {0, 2, 0, 0}), SeifertKind::link);
    CHECK_THROWS_AS(symplectic_normalize(bad), DomainError);
}

TEST_CASE("genus witnesses")
{
    const SeifertMatrix k52 = twist_seifert(-2);
    const GenusWitness w = shake1_genus_witness(k52, 1, 0);
    CHECK(w.verified);
    CHECK(w.determinant.is_unit());
    CHECK(w.determinant.span() == 0);
    CHECK(w.determinant.lo() == 1);
    CHECK(w.m.kind() == SeifertKind::link);

    const GenusWitness d = shake1_genus_witness(k52, 1, 1);
    CHECK(d.verified);
    CHECK(d.m_sub.size() == 0);

    const GenusWitness w2 = shake1_genus_witness(connected_sum(k52, k52), 2, 0);
    CHECK(w2.verified);
    CHECK(w2.determinant.lo() == 2);
    CHECK(w2.determinant.is_unit());

    CHECK_THROWS_WITH_AS(shake1_genus_witness(twist_seifert(-1), 1, 0), "parity obstruction: Arf nonzero",
                         DomainError);
    CHECK_THROWS_AS(shake1_genus_witness(connected_sum(twist_seifert(-1), k52), 1, 0), DomainError);
}

TEST_CASE("verified witnesses satisfy the determinant identity")
{
    for (long k = 1; k <= 3; ++k) {
        SeifertMatrix v;
        for (long i = 0; i < k; ++i)
            v = connected_sum(v, twist_seifert(-2));
        for (long h = 0; h <= k; ++h) {
            const GenusWitness w = shake1_genus_witness(v, k, h);
            CAPTURE(k);
            CAPTURE(h);
            REQUIRE(w.verified);
            const LaurentPoly det = alexander_determinant(w.m_sub.matrix());
            CHECK(det == w.determinant);
            CHECK(det.is_unit());
            CHECK(det.lo() == k - h);
            // M is the shaking form in the new basis.
            const IntMatrix s = shaking_matrix(v, k - h, 1).matrix();
            CHECK(w.basis.transpose() * s * w.basis == w.m.matrix());
        }
    }
}
