#pragma once

#include "knotshake/bigint.hpp"
#include "knotshake/laurent_poly.hpp"

#include <vector>

namespace knotshake {

enum class SeifertKind { knot, link };

// Square integer matrix of the Seifert form (x, y) -> lk(x, y+). Knot kind
// requires even size and det(V - V^T) = 1.
class SeifertMatrix {
public:
    SeifertMatrix() = default; // the unknot
    SeifertMatrix(IntMatrix entries, SeifertKind kind);

    // Knot kind when the size is even and V - V^T is unimodular, else link.
    static SeifertMatrix infer(IntMatrix entries);

    const IntMatrix& matrix() const { return v_; }
    SeifertKind kind() const { return kind_; }
    bool is_knot() const { return kind_ == SeifertKind::knot; }
    Eigen::Index size() const { return v_.rows(); }
    const BigInt& operator()(Eigen::Index i, Eigen::Index j) const { return v_(i, j); }

    friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b)
    {
        return a.kind_ == b.kind_ && a.v_.rows() == b.v_.rows() && a.v_ == b.v_;
    }

private:
    IntMatrix v_ = IntMatrix(0, 0);
    SeifertKind kind_ = SeifertKind::knot;
};

BigInt integer_determinant(const IntMatrix& m);

// Closure of the positive braid (s_1 ... s_{p-1})^q, p, q >= 2 coprime.
// Generators are the loops between consecutive crossings of one braid
// column, ordered by position along the braid, which keeps V banded.
SeifertMatrix torus_seifert(long p, long q);

// [[-1, 1], [0, m]]: m = 1 is 4_1, m = -1 is 3_1, m = -2 is 5_2.
SeifertMatrix twist_seifert(long m);

SeifertMatrix mirror(const SeifertMatrix& v);
SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b);

// V + k copies of [[0, I_n], [Z_n, 0]] with Z_n the cyclic permutation matrix.
SeifertMatrix shaking_matrix(const SeifertMatrix& v, long k, long n);

// det(t P - P^T), no normalization.
LaurentPoly alexander_determinant(const IntMatrix& p);

bool is_alexander_trivial(const IntMatrix& p);
inline bool is_alexander_trivial(const SeifertMatrix& p) { return is_alexander_trivial(p.matrix()); }

} // namespace knotshake
