#pragma once

#include "knotshake/hermitian.hpp"
#include "knotshake/knot_expr.hpp"
#include "knotshake/qpoly.hpp"
#include "knotshake/seifert.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace knotshake {

// det(t V - V^T) made symmetric with value 1 at t = 1.
LaurentPoly alexander_poly(const SeifertMatrix& v);

// (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), normalized; p, q >= 1.
LaurentPoly torus_alexander(long p, long q);

// (1 - w) V + (1 - conj w) V^T over Q(zeta_order(w)).
HermitianMatrix tristram_levine_form(const SeifertMatrix& v, const RootOfUnity& w);
Inertia tl_inertia(const SeifertMatrix& v, const RootOfUnity& w);
long tl_signature(const SeifertMatrix& v, const RootOfUnity& w);

// Alexander polynomial together with the signature function of a knot.
// Matrix-backed carriers evaluate Hermitian forms; formula-backed ones
// combine children through mirror, sum and cable rules. Signature values are
// memoized per root of unity behind a mutex.
class InvariantCarrier {
public:
    enum class Source { matrix_backed, formula_backed };
    struct Node;

    static InvariantCarrier unknot();
    static InvariantCarrier from_matrix(SeifertMatrix v);
    // delta must be the Alexander polynomial of v; used when a closed form is
    // cheaper than the determinant.
    static InvariantCarrier from_matrix(SeifertMatrix v, LaurentPoly delta);
    static InvariantCarrier mirror_of(const InvariantCarrier& c);
    static InvariantCarrier sum_of(const std::vector<InvariantCarrier>& terms);
    // Satellite with pattern T(m, r): Delta_T(m,r)(t) Delta_K(t^m) and
    // sigma_T(m,r)(w) + sigma_K(w^m).
    static InvariantCarrier cable_of(long m, long r, const InvariantCarrier& companion);

    const LaurentPoly& delta() const;
    Source source() const;
    // Non-null for matrix-backed carriers.
    const SeifertMatrix* matrix() const;
    long signature(const RootOfUnity& w) const;

private:
    explicit InvariantCarrier(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Carrier of the torus knot T(p, q) for any coprime p, q (trivial when
// |p| or |q| is 1, mirrored when pq < 0).
InvariantCarrier torus_carrier(long p, long q);

InvariantCarrier carrier_of(const KnotExpr& k);

long tl_signature(const InvariantCarrier& c, const RootOfUnity& w);

// (sigma(w-) + sigma(w+)) / 2 with probes on either side of w close enough
// that no other root of Delta lies between them. Equals the plain value away
// from roots of Delta.
Rational tl_signature_averaged(const InvariantCarrier& c, const RootOfUnity& w);

struct ArfValue {
    int bit = 0;
    friend bool operator==(const ArfValue&, const ArfValue&) = default;
};

// 0 iff |Delta(-1)| = +-1 mod 8.
int arf_levine(const LaurentPoly& delta);
// sum q(a_i) q(b_i) mod 2 over a symplectic basis, q(x) = x^T V x.
int arf_symplectic(const SeifertMatrix& v);

// Both methods when a matrix is available; InternalError if they disagree.
ArfValue arf(const InvariantCarrier& c);
ArfValue arf(const SeifertMatrix& v);

struct BranchedOrder {
    BigInt order;  // 0 when infinite
    bool infinite = false;
};

// |Res(Delta, t^n - 1)| = |H_1 of the n-fold branched cover|.
BranchedOrder branched_cover_order(const LaurentPoly& delta, long n);
BranchedOrder branched_cover_order(const InvariantCarrier& c, long n);

// Bracket (a, b] of width <= resolution around the first angle where the
// signature becomes nonzero, with sigma(a) = 0 (or a = 0) and sigma(b) != 0.
// Angles are sampled at dyadic levels, then refined by simplest fractions;
// denominators are capped at 4 * ceil(1 / resolution).
std::optional<std::pair<Rational, Rational>> first_jump_bracket(const InvariantCarrier& c,
                                                                const Rational& resolution);

// Distinct roots of Delta on the unit circle, counted through the real
// polynomial R with Delta(t) = R(t + 1/t), within x in [lo, hi].
long count_circle_roots(const LaurentPoly& delta, const Rational& lo, const Rational& hi);

// count_circle_roots with the Sturm sequence built once.
class CircleRootCounter {
public:
    explicit CircleRootCounter(const LaurentPoly& delta);
    long count(const Rational& lo, const Rational& hi) const;

private:
    qpoly::SturmChain chain_;
};

// A root of unity of order at most max_order on the same closed arc free of
// roots of Delta as w. Every Seifert matrix with this Alexander polynomial
// has the same signature at both.
std::optional<RootOfUnity> arc_proxy(const CircleRootCounter& roots, const RootOfUnity& w, long max_order = 64);

// Simplest fraction (least denominator) strictly between lo and hi, lo >= 0.
Rational simplest_between(const Rational& lo, const Rational& hi);

} // namespace knotshake
