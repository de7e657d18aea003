#pragma once

#include "knotshake/invariants.hpp"
#include "knotshake/witness.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace knotshake {

struct ConditionI {
    bool pass = false;
    bool automatic = false;
    // |n| >= 1: the branched cover order; n = 0: Delta itself.
    std::optional<BranchedOrder> order;
    std::optional<LaurentPoly> delta;
    friend bool operator==(const ConditionI& a, const ConditionI& b)
    {
        auto same_order = [](const std::optional<BranchedOrder>& x, const std::optional<BranchedOrder>& y) {
            if (x.has_value() != y.has_value())
                return false;
            return !x || (x->order == y->order && x->infinite == y->infinite);
        };
        return a.pass == b.pass && a.automatic == b.automatic && same_order(a.order, b.order) &&
               a.delta == b.delta;
    }
};

struct ConditionII {
    bool pass = false;
    bool automatic = false;
    int arf = 0;
    friend bool operator==(const ConditionII&, const ConditionII&) = default;
};

struct ConditionIII {
    bool pass = false;
    bool automatic = false;
    std::vector<std::pair<long, long>> signatures; // (k, sigma at zeta_|n|^k)
    friend bool operator==(const ConditionIII&, const ConditionIII&) = default;
};

struct ShakeReport {
    long n = 0;
    ConditionI cond_i;
    ConditionII cond_ii;
    ConditionIII cond_iii;
    bool verdict = false;
    std::vector<std::string> notes;
};

// Field-by-field equality ignoring n.
bool same_conditions(const ShakeReport& a, const ShakeReport& b);

// The three-condition test for Z/n-shake sliceness, with the n = 0 and
// n = +-1 specializations.
ShakeReport shake_slice_report(const InvariantCarrier& c, long n);
ShakeReport shake_slice_report(const KnotExpr& k, long n);

struct CGValue {
    Rational value;
};

// 1 - sigma(zeta_n^k) - 2k(n - k)/n for n-surgery on the knot.
CGValue casson_gordon_sigma(const InvariantCarrier& c, long n, long k);
CGValue casson_gordon_sigma(const KnotExpr& knot, long n, long k);

struct ShakingBounds {
    long lower = 1;
    std::optional<long> upper;
};

// Bounds on the 1-shaking number. The lower bound samples signatures at
// zeta_d^j for d <= sample_cap away from roots of Delta. certified_genus, when
// given, is a g for which a verified h = 0 witness exists, giving 2g + 1.
ShakingBounds shaking_number_bounds(const InvariantCarrier& c, std::optional<long> certified_genus = {},
                                    long sample_cap = 64);
ShakingBounds shaking_number_bounds(const KnotExpr& k, std::optional<long> certified_genus = {},
                                    long sample_cap = 64);
// Uses the witness when it is verified with h = 0.
ShakingBounds shaking_number_bounds(const InvariantCarrier& c, const GenusWitness& w,
                                    long sample_cap = 64);

} // namespace knotshake
