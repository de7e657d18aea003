#pragma once

#include "knotshake/congruence.hpp"
#include "knotshake/seifert.hpp"

#include <vector>

namespace knotshake {

struct SympBasisChange {
    IntMatrix u; // columns are the new basis in old coordinates
    std::vector<BasisMove> moves;
};

// Unimodular U with U^T (V - V^T) U = (+) [[0, 1], [-1, 0]].
SympBasisChange symplectic_normalize(const SeifertMatrix& v);

struct GenusWitness {
    SeifertMatrix m;                // transformed shaking matrix, kind link
    std::vector<Eigen::Index> subbasis;
    SeifertMatrix m_sub;
    long g = 0;
    long h = 0;
    LaurentPoly determinant;        // det(t M_sub - M_sub^T)
    IntMatrix basis;                // M = basis^T (V + hyperbolic blocks) basis
    bool verified = false;
};

// Builds a genus-h Z-slice witness for a knot whose Seifert matrix V (size
// 2m) has an Alexander-trivial top-left block of size 2(m - g).
GenusWitness shake1_genus_witness(const SeifertMatrix& v, long g, long h);

} // namespace knotshake
