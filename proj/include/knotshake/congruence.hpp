#pragma once

#include "knotshake/bigint.hpp"

#include <vector>

namespace knotshake {

// One elementary change of basis, applied to basis vectors (columns).
struct BasisMove {
    enum class Kind { add, swap, negate };
    Kind kind;
    Eigen::Index target;
    Eigen::Index source; // unused for negate
    BigInt factor;       // add only: target += factor * source
};

// A bilinear form under a sequence of basis changes. Keeps form() equal to
// basis()^T * original * basis().
class Congruence {
public:
    explicit Congruence(IntMatrix form);

    const IntMatrix& form() const { return form_; }
    const IntMatrix& basis() const { return basis_; }
    const std::vector<BasisMove>& moves() const { return moves_; }
    Eigen::Index size() const { return form_.rows(); }

    // Skew part form - form^T at (i, j).
    BigInt omega(Eigen::Index i, Eigen::Index j) const { return form_(i, j) - form_(j, i); }

    void add(Eigen::Index target, Eigen::Index source, const BigInt& factor);
    void swap(Eigen::Index i, Eigen::Index j);
    void negate(Eigen::Index i);
    // New basis vector k is the old vector order[k].
    void permute(const std::vector<Eigen::Index>& order);

    // Appends identity directions carrying the given form block.
    void extend(const IntMatrix& block);

private:
    IntMatrix form_;
    IntMatrix basis_;
    std::vector<BasisMove> moves_;
};

// Brings the skew part on indices [begin, end) to the standard form
// (+) [[0, 1], [-1, 0]], pairing the lowest remaining index first. The skew
// part must be unimodular on that range and orthogonal to the rest.
void symplectic_reduce(Congruence& c, Eigen::Index begin, Eigen::Index end);

} // namespace knotshake
