#pragma once

#include "knotshake/laurent_poly.hpp"

#include <utility>
#include <vector>

namespace knotshake {

// Reduction data for Q(zeta_n) = Q[z]/Phi_n.
struct CyclotomicField {
    long n = 1;
    long degree = 1;
    LaurentPoly phi_poly;
    // Nonzero coefficients of Phi_n below the leading term.
    std::vector<std::pair<long, BigInt>> low_terms;

    // Reduces a polynomial in z (ascending coefficients) modulo Phi_n in
    // place; the result has at most `degree` entries.
    void reduce(std::vector<BigInt>& a) const;
};

const CyclotomicField& cyclotomic_field(long n);

} // namespace knotshake
