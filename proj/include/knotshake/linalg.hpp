#pragma once

#include "knotshake/bigint.hpp"

#include <utility>

namespace knotshake {

// Fraction-free Gaussian elimination. Scalar must be an integral domain that
// provides is_zero() and exact_quotient() via ADL.
template <typename Scalar>
Scalar bareiss_determinant(Matrix<Scalar> a)
{
    const Eigen::Index n = a.rows();
    if (n == 0)
        return Scalar(1);
    Scalar prev(1);
    bool negate = false;
    for (Eigen::Index k = 0; k < n; ++k) {
        if (is_zero(a(k, k))) {
            Eigen::Index r = k + 1;
            while (r < n && is_zero(a(r, k)))
                ++r;
            if (r == n)
                return Scalar(0);
            a.row(k).swap(a.row(r));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                Scalar v = a(k, k) * a(i, j);
                if (!is_zero(a(i, k)))
                    v -= a(i, k) * a(k, j);
                a(i, j) = exact_quotient(v, prev);
            }
        }
        prev = a(k, k);
    }
    Scalar d = a(n - 1, n - 1);
    return negate ? Scalar(-d) : d;
}

// Solves A X = B over Q. Throws DomainError when A is singular.
Matrix<Rational> solve_rational(const Matrix<Rational>& a, const Matrix<Rational>& b);

Matrix<Rational> to_rational(const IntMatrix& m);

// Integer inverse of a unimodular matrix; throws DomainError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

} // namespace knotshake
