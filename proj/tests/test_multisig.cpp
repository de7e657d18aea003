#include "oracles.hpp"

#include "knotshake/error.hpp"
#include "knotshake/multisig.hpp"

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

GroupRingForm scalar_form(long n, const LaurentPoly& p)
{
    Matrix<LaurentPoly> a(1, 1);
    a(0, 0) = p;
    return GroupRingForm(n, a);
}

GroupRingForm hyperbolic(long n)
{
    Matrix<LaurentPoly> a(2, 2);
    a << LaurentPoly(), LaurentPoly(1L), LaurentPoly(1L), LaurentPoly();
    return GroupRingForm(n, a);
}

// B + conj(B)^T for random B over Z[Z/n].
GroupRingForm random_form(oracle::Gen& g, long n, Eigen::Index size)
{
    Matrix<LaurentPoly> b(size, size);
    for (Eigen::Index i = 0; i < size; ++i)
        for (Eigen::Index j = 0; j < size; ++j)
            b(i, j) = g.laurent(3, 2);
    Matrix<LaurentPoly> a(size, size);
    for (Eigen::Index i = 0; i < size; ++i)
        for (Eigen::Index j = 0; j < size; ++j)
            a(i, j) = b(i, j) + b(j, i).substitute_power(-1);
    return GroupRingForm(n, a);
}

} // namespace

TEST_CASE("group ring reduction")
{
    CHECK(reduce_group_ring(poly(-1, {1, 0, 0, 0, 0, 2}), 3) == poly(1, {2, 1}));
    CHECK(group_ring_conj(poly(0, {0, 1}), 4) == poly(3, {1}));
    Matrix<LaurentPoly> bad(1, 1);
    bad(0, 0) = LaurentPoly::t();
    CHECK_THROWS_AS(GroupRingForm(4, bad), DomainError);
    CHECK_THROWS_AS(GroupRingForm(0, Matrix<LaurentPoly>(0, 0)), DomainError);
}

TEST_CASE("multisignature examples")
{
    CHECK(multisignature(scalar_form(4, poly(1, {1, 0, 1}))).alpha == std::vector<long>{1, 0, -1, 0});
    CHECK(multisignature(hyperbolic(3)).alpha == std::vector<long>{0, 0, 0});
    CHECK(multisignature(scalar_form(2, LaurentPoly(1L))).alpha == std::vector<long>{1, 1});
}

TEST_CASE("L-group coordinates")
{
    CHECK(l4s_coordinates(hyperbolic(3)) == std::vector<long>{0, 0});
    CHECK(l4s_coordinates(scalar_form(2, LaurentPoly(1L))) == std::vector<long>{1, 1});
    CHECK(l4s_coordinates(scalar_form(5, LaurentPoly(2L))) == std::vector<long>{1, 1, 1});
    // n = 6: (alpha_1, alpha_2, alpha_3, alpha_0).
    const GroupRingForm f = scalar_form(6, poly(0, {1, 1, 0, 0, 0, 1}));
    const Multisignature m = multisignature(f);
    CHECK(l4s_coordinates(m) == std::vector<long>{m.alpha[1], m.alpha[2], m.alpha[3], m.alpha[0]});
}

TEST_CASE("multisignature symmetry and additivity")
{
    oracle::Gen g(41);
    for (int trial = 0; trial < 40; ++trial) {
        const long n = g.uniform(1, 9);
        const GroupRingForm a = random_form(g, n, static_cast<Eigen::Index>(g.uniform(1, 3)));
        const GroupRingForm b = random_form(g, n, static_cast<Eigen::Index>(g.uniform(1, 3)));
        const Multisignature ma = multisignature(a), mb = multisignature(b);
        const Multisignature ms = multisignature(block_sum(a, b));
        for (long k = 0; k < n; ++k) {
            const auto i = static_cast<std::size_t>(k);
            CHECK(ma.alpha[i] == ma.alpha[static_cast<std::size_t>((n - k) % n)]);
            CHECK(ms.alpha[i] == ma.alpha[i] + mb.alpha[i]);
        }
    }
}

TEST_CASE("constant forms have constant multisignature")
{
    oracle::Gen g(42);
    for (int trial = 0; trial < 20; ++trial) {
        const long n = g.uniform(1, 8);
        const auto size = static_cast<Eigen::Index>(g.uniform(1, 4));
        Matrix<LaurentPoly> a(size, size);
        CycloMatrix c(size, size);
        for (Eigen::Index i = 0; i < size; ++i)
            for (Eigen::Index j = i; j < size; ++j) {
                const long x = g.uniform(-3, 3);
                a(i, j) = a(j, i) = LaurentPoly(x);
                c(i, j) = c(j, i) = CycloElement(x);
            }
        const long base = hermitian_signature(HermitianMatrix(1, c)).signature();
        for (long alpha : multisignature(GroupRingForm(n, a)).alpha)
            CHECK(alpha == base);
    }
}

TEST_CASE("Tristram-Levine group ring forms")
{
    for (const SeifertMatrix& v : {torus_seifert(2, 3), twist_seifert(1), twist_seifert(-2)})
        for (long n : {2L, 3L, 4L, 6L}) {
            const Multisignature m = multisignature(tristram_levine_group_form(v, n));
            CHECK(m.alpha[0] == 0);
            for (long k = 1; k < n; ++k)
                CHECK(m.alpha[static_cast<std::size_t>(k)] == tl_signature(v, RootOfUnity(k, n)));
        }
}

TEST_CASE("vanishing in the L-group")
{
    for (long n = 2; n <= 6; ++n)
        CHECK(l4s_vanishes_for_knot(*make_unknot(), n).vanishes);
    const L4sVanishing t = l4s_vanishes_for_knot(*make_torus(2, 3), 2);
    CHECK_FALSE(t.vanishes);
    CHECK(t.signatures == std::vector<std::pair<long, long>>{{1, -2}});
    CHECK(l4s_vanishes_for_knot(*make_cable(2, 1, make_torus(2, 3)), 2).vanishes);
    CHECK(l4s_vanishes_for_knot(*make_torus(2, 3), 5).signatures.size() == 2);
    CHECK(l4s_vanishes_for_knot(*make_torus(2, 3), 6).signatures.size() == 3);
    CHECK_THROWS_AS(l4s_vanishes_for_knot(*make_unknot(), 1), DomainError);
}
