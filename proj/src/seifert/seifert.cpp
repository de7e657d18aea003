#include "knotshake/seifert.hpp"
#include "knotshake/error.hpp"
#include "knotshake/linalg.hpp"

#include <numeric>

namespace knotshake {

BigInt integer_determinant(const IntMatrix& m) { return bareiss_determinant<BigInt>(m); }

SeifertMatrix::SeifertMatrix(IntMatrix entries, SeifertKind kind) : v_(std::move(entries)), kind_(kind)
{
    if (v_.rows() != v_.cols())
        throw DomainError("Seifert matrix must be square");
    if (kind_ == SeifertKind::knot) {
        if (v_.rows() % 2 != 0)
            throw DomainError("knot Seifert matrix must have even size");
        if (integer_determinant(v_ - v_.transpose()) != 1)
            throw DomainError("knot Seifert matrix needs det(V - V^T) = 1");
    }
}

SeifertMatrix SeifertMatrix::infer(IntMatrix entries)
{
    if (entries.rows() != entries.cols())
        throw DomainError("Seifert matrix must be square");
    const bool knot =
        entries.rows() % 2 == 0 && integer_determinant(entries - entries.transpose()) == 1;
    return SeifertMatrix(std::move(entries), knot ? SeifertKind::knot : SeifertKind::link);
}

SeifertMatrix torus_seifert(long p, long q)
{
    if (p < 2 || q < 2)
        throw DomainError("torus parameters must be at least 2");
    if (std::gcd(p, q) != 1)
        throw DomainError("torus link, not a knot");
    struct Loop {
        long column, start, end;
    };
    std::vector<Loop> loops;
    for (long j = 0; j + 1 < q; ++j)
        for (long i = 1; i < p; ++i)
            loops.push_back({i, j * (p - 1) + i, (j + 1) * (p - 1) + i});
    const auto n = static_cast<Eigen::Index>(loops.size());
    IntMatrix v = IntMatrix::Zero(n, n);
    for (Eigen::Index x = 0; x < n; ++x) {
        const Loop& a = loops[static_cast<std::size_t>(x)];
        v(x, x) = -1;
        for (Eigen::Index y = 0; y < n; ++y) {
            const Loop& b = loops[static_cast<std::size_t>(y)];
            if (b.column == a.column && b.start == a.end)
                v(x, y) = 1;
            if (b.column == a.column + 1) {
                if (a.start < b.start && b.start < a.end && a.end < b.end)
                    v(x, y) = -1;
                else if (b.start < a.start && a.start < b.end && b.end < a.end)
                    v(x, y) = 1;
            }
        }
    }
    return SeifertMatrix(std::move(v), SeifertKind::knot);
}

SeifertMatrix twist_seifert(long m)
{
    IntMatrix v(2, 2);
    v << BigInt(-1), BigInt(1), BigInt(0), BigInt(m);
    return SeifertMatrix(std::move(v), SeifertKind::knot);
}

SeifertMatrix mirror(const SeifertMatrix& v)
{
    return SeifertMatrix(IntMatrix(-v.matrix().transpose()), v.kind());
}

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b)
{
    if (!a.is_knot() || !b.is_knot())
        throw DomainError("connected sum requires knot Seifert matrices");
    return SeifertMatrix(block_diagonal(a.matrix(), b.matrix()), SeifertKind::knot);
}

SeifertMatrix shaking_matrix(const SeifertMatrix& v, long k, long n)
{
    if (n < 1)
        throw DomainError("shaking framing block size n must be at least 1");
    if (k < 0)
        throw DomainError("number of shaking blocks must be non-negative");
    if (!v.is_knot())
        throw DomainError("shaking matrix requires a knot Seifert matrix");
    IntMatrix block = IntMatrix::Zero(2 * n, 2 * n);
    for (long i = 0; i < n; ++i) {
        block(i, n + i) = 1;
        // (Z_n)_{i,j} = 1 when i = j + 1 mod n.
        block(n + (i + 1) % n, i) = 1;
    }
    IntMatrix out = v.matrix();
    for (long j = 0; j < k; ++j)
        out = block_diagonal(out, block);
    return SeifertMatrix(std::move(out), SeifertKind::link);
}

LaurentPoly alexander_determinant(const IntMatrix& p)
{
    const Eigen::Index n = p.rows();
    Matrix<LaurentPoly> m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = LaurentPoly(0, {BigInt(-p(j, i)), p(i, j)});
    return bareiss_determinant<LaurentPoly>(m);
}

bool is_alexander_trivial(const IntMatrix& p)
{
    if (p.rows() != p.cols())
        throw DomainError("matrix must be square");
    const LaurentPoly d = alexander_determinant(p);
    return d.is_unit() && d.lo() >= 0;
}

} // namespace knotshake
