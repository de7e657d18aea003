#include "knotshake/congruence.hpp"
#include "knotshake/error.hpp"
#include "knotshake/linalg.hpp"

namespace knotshake {

Congruence::Congruence(IntMatrix form)
    : form_(std::move(form)), basis_(IntMatrix::Identity(form_.rows(), form_.rows()))
{
}

void Congruence::add(Eigen::Index target, Eigen::Index source, const BigInt& factor)
{
    if (factor == 0)
        return;
    if (target == source)
        throw InternalError("basis vector added to itself");
    basis_.col(target) += factor * basis_.col(source);
    form_.col(target) += factor * form_.col(source);
    form_.row(target) += factor * form_.row(source);
    moves_.push_back({BasisMove::Kind::add, target, source, factor});
}

void Congruence::swap(Eigen::Index i, Eigen::Index j)
{
    if (i == j)
        return;
    basis_.col(i).swap(basis_.col(j));
    form_.col(i).swap(form_.col(j));
    form_.row(i).swap(form_.row(j));
    moves_.push_back({BasisMove::Kind::swap, i, j, 0});
}

void Congruence::negate(Eigen::Index i)
{
    basis_.col(i) = -basis_.col(i);
    form_.col(i) = -form_.col(i);
    form_.row(i) = -form_.row(i);
    moves_.push_back({BasisMove::Kind::negate, i, i, 0});
}

void Congruence::permute(const std::vector<Eigen::Index>& order)
{
    // Realized as transpositions so the move log stays elementary.
    std::vector<Eigen::Index> where(order.size()); // current slot of old vector
    std::vector<Eigen::Index> held(order.size());  // old vector held by slot
    for (std::size_t k = 0; k < order.size(); ++k) {
        where[k] = static_cast<Eigen::Index>(k);
        held[k] = static_cast<Eigen::Index>(k);
    }
    for (std::size_t k = 0; k < order.size(); ++k) {
        const Eigen::Index slot = where[static_cast<std::size_t>(order[k])];
        const auto kk = static_cast<Eigen::Index>(k);
        if (slot == kk)
            continue;
        swap(kk, slot);
        const Eigen::Index displaced = held[k];
        held[k] = order[k];
        held[static_cast<std::size_t>(slot)] = displaced;
        where[static_cast<std::size_t>(order[k])] = kk;
        where[static_cast<std::size_t>(displaced)] = slot;
    }
}

void Congruence::extend(const IntMatrix& block)
{
    form_ = block_diagonal(form_, block);
    basis_ = block_diagonal(basis_, IntMatrix::Identity(block.rows(), block.rows()));
}

void symplectic_reduce(Congruence& c, Eigen::Index begin, Eigen::Index end)
{
    if ((end - begin) % 2 != 0)
        throw DomainError("antisymmetrization is not unimodular");
    for (Eigen::Index e = begin; e < end; e += 2) {
        // Euclid on the row omega(e, .) over the remaining vectors.
        Eigen::Index best = -1;
        for (;;) {
            best = -1;
            for (Eigen::Index j = e + 1; j < end; ++j) {
                const BigInt w = c.omega(e, j);
                if (w != 0 && (best < 0 || abs(w) < abs(c.omega(e, best))))
                    best = j;
            }
            if (best < 0)
                throw DomainError("antisymmetrization is not unimodular");
            const BigInt pivot = c.omega(e, best);
            bool reduced = true;
            for (Eigen::Index j = e + 1; j < end; ++j) {
                if (j == best)
                    continue;
                const BigInt w = c.omega(e, j);
                if (w == 0)
                    continue;
                BigInt q;
                mpz_tdiv_q(q.get_mpz_t(), w.get_mpz_t(), pivot.get_mpz_t());
                c.add(j, best, -q);
                if (c.omega(e, j) != 0)
                    reduced = false;
            }
            if (reduced)
                break;
        }
        if (abs(c.omega(e, best)) != 1)
            throw DomainError("antisymmetrization is not unimodular");
        const Eigen::Index f = e + 1;
        c.swap(f, best);
        if (c.omega(e, f) < 0)
            c.negate(f);
        for (Eigen::Index j = f + 1; j < end; ++j) {
            const BigInt a = c.omega(f, j);
            c.add(j, e, a);
            const BigInt b = c.omega(e, j);
            c.add(j, f, -b);
        }
    }
}

} // namespace knotshake
