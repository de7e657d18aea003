#include "knotshake/hermitian.hpp"
#include "knotshake/error.hpp"

#include <vector>

namespace knotshake {

CycloMatrix conjugate_transpose(const CycloMatrix& m)
{
    CycloMatrix out(m.cols(), m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(j, i) = m(i, j).conj();
    return out;
}

HermitianMatrix::HermitianMatrix(long conductor, CycloMatrix entries)
    : conductor_(conductor), entries_(std::move(entries))
{
    if (entries_.rows() != entries_.cols())
        throw DomainError("Hermitian matrix must be square");
    for (Eigen::Index i = 0; i < entries_.rows(); ++i)
        for (Eigen::Index j = i; j < entries_.cols(); ++j) {
            const CycloElement& x = entries_(i, j);
            if (!x.is_rational() && x.conductor() != conductor_)
                throw DomainError("matrix entry lies outside the declared field");
            if (!(entries_(j, i) == x.conj()))
                throw DomainError("matrix is not Hermitian");
        }
}

Inertia hermitian_signature(const HermitianMatrix& h)
{
    CycloMatrix a = h.entries();
    const Eigen::Index n = a.rows();
    std::vector<char> active(static_cast<std::size_t>(n), 1);
    Eigen::Index remaining = n;
    Inertia result;
    std::vector<Eigen::Index> nz;
    std::vector<CycloElement> f, g;

    auto update_pair = [&](Eigen::Index r, Eigen::Index c, const CycloElement& delta) {
        a(r, c) -= delta;
        if (r != c)
            a(c, r) = a(r, c).conj();
    };

    while (remaining > 0) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = 0; i < n; ++i)
            if (active[static_cast<std::size_t>(i)] && !a(i, i).is_zero()) {
                piv = i;
                break;
            }
        if (piv >= 0) {
            if (real_sign(a(piv, piv)) > 0)
                ++result.pos;
            else
                ++result.neg;
            active[static_cast<std::size_t>(piv)] = 0;
            --remaining;
            nz.clear();
            for (Eigen::Index r = 0; r < n; ++r)
                if (active[static_cast<std::size_t>(r)] && !a(r, piv).is_zero())
                    nz.push_back(r);
            if (nz.empty())
                continue;
            const CycloElement inv = a(piv, piv).inverse();
            f.clear();
            for (Eigen::Index r : nz)
                f.push_back(a(r, piv) * inv);
            for (std::size_t x = 0; x < nz.size(); ++x)
                for (std::size_t y = x; y < nz.size(); ++y)
                    update_pair(nz[x], nz[y], f[x] * a(piv, nz[y]));
            continue;
        }

        Eigen::Index k = -1, l = -1;
        for (Eigen::Index i = 0; i < n && k < 0; ++i) {
            if (!active[static_cast<std::size_t>(i)])
                continue;
            for (Eigen::Index j = i + 1; j < n; ++j)
                if (active[static_cast<std::size_t>(j)] && !a(i, j).is_zero()) {
                    k = i;
                    l = j;
                    break;
                }
        }
        if (k < 0) {
            result.null += remaining;
            break;
        }
        // Block [[0, b], [conj(b), 0]] has inertia (1, 1).
        ++result.pos;
        ++result.neg;
        active[static_cast<std::size_t>(k)] = 0;
        active[static_cast<std::size_t>(l)] = 0;
        remaining -= 2;
        const CycloElement binv = a(k, l).inverse();
        const CycloElement bbar_inv = binv.conj();
        nz.clear();
        for (Eigen::Index r = 0; r < n; ++r)
            if (active[static_cast<std::size_t>(r)] && (!a(r, k).is_zero() || !a(r, l).is_zero()))
                nz.push_back(r);
        f.clear();
        g.clear();
        for (Eigen::Index r : nz) {
            f.push_back(a(r, k) * bbar_inv);
            g.push_back(a(r, l) * binv);
        }
        for (std::size_t x = 0; x < nz.size(); ++x)
            for (std::size_t y = x; y < nz.size(); ++y)
                update_pair(nz[x], nz[y], f[x] * a(l, nz[y]) + g[x] * a(k, nz[y]));
    }
    return result;
}

} // namespace knotshake
