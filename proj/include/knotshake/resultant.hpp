#pragma once

#include "knotshake/laurent_poly.hpp"

namespace knotshake {

// Res(p, q) = lc(q)^deg(p) * prod over roots b of q of p(b). Laurent inputs
// are first shifted to ordinary polynomials. With this convention
// Res(p, t^n - 1) is the product of p over the n-th roots of unity.
//
// Computed by the subresultant PRS; throws DomainError if either input is 0.
BigInt resultant(const LaurentPoly& p, const LaurentPoly& q);

} // namespace knotshake
