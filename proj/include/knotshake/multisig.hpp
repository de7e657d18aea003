#pragma once

#include "knotshake/invariants.hpp"

#include <utility>
#include <vector>

namespace knotshake {

// Hermitian form over Z[Z/n]: entries reduced mod t^n - 1 to degrees
// 0..n-1, with A(t)^T = A(t^-1).
class GroupRingForm {
public:
    GroupRingForm(long n, Matrix<LaurentPoly> entries);

    long n() const { return n_; }
    const Matrix<LaurentPoly>& entries() const { return a_; }
    Eigen::Index size() const { return a_.rows(); }

    // A(zeta_n^k) as a Hermitian matrix.
    HermitianMatrix evaluate(long k) const;

private:
    long n_;
    Matrix<LaurentPoly> a_;
};

// p mod t^n - 1, exponents in 0..n-1.
LaurentPoly reduce_group_ring(const LaurentPoly& p, long n);
// p(t^-1) mod t^n - 1.
LaurentPoly group_ring_conj(const LaurentPoly& p, long n);

// (1 - t) V + (1 - t^-1) V^T over Z[Z/n].
GroupRingForm tristram_levine_group_form(const SeifertMatrix& v, long n);

GroupRingForm block_sum(const GroupRingForm& a, const GroupRingForm& b);

struct Multisignature {
    std::vector<long> alpha; // alpha_0 .. alpha_{n-1}
};

Multisignature multisignature(const GroupRingForm& f);

// (alpha_1, .., alpha_{(n-1)/2}, alpha_0) for odd n and
// (alpha_1, .., alpha_{(n-2)/2}, alpha_{n/2}, alpha_0) for even n.
std::vector<long> l4s_coordinates(const Multisignature& m);
std::vector<long> l4s_coordinates(const GroupRingForm& f);

struct L4sVanishing {
    bool vanishes = true;
    std::vector<std::pair<long, long>> signatures; // (k, sigma at zeta_n^k)
};

// Checks sigma(zeta_n^k) = 0 for k = 1..(n-1)/2 (n odd) or 1..n/2 (n even).
L4sVanishing l4s_vanishes_for_knot(const InvariantCarrier& c, long n);
L4sVanishing l4s_vanishes_for_knot(const KnotExpr& k, long n);

} // namespace knotshake
