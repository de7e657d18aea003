#pragma once

#include "knotshake/cyclotomic.hpp"

namespace knotshake {

struct Inertia {
    long pos = 0;
    long neg = 0;
    long null = 0;

    long signature() const { return pos - neg; }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

using CycloMatrix = Matrix<CycloElement>;

CycloMatrix conjugate_transpose(const CycloMatrix& m);

// Square matrix over Q(zeta_n) equal to its conjugate transpose.
class HermitianMatrix {
public:
    // Throws DomainError unless entries is square and Hermitian.
    HermitianMatrix(long conductor, CycloMatrix entries);

    long conductor() const { return conductor_; }
    const CycloMatrix& entries() const { return entries_; }
    Eigen::Index size() const { return entries_.rows(); }

private:
    long conductor_;
    CycloMatrix entries_;
};

// Exact inertia by symmetric Gaussian elimination over Q(zeta_n). Pivots on
// the first nonzero diagonal entry, falls back to a hyperbolic 2x2 block when
// the diagonal vanishes, and counts what remains as null.
Inertia hermitian_signature(const HermitianMatrix& h);

} // namespace knotshake
