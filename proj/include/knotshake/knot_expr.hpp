#pragma once

#include "knotshake/seifert.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace knotshake {

class KnotExpr;
using KnotExprPtr = std::shared_ptr<const KnotExpr>;

namespace expr {

struct Unknot {};
struct Torus {
    long p, q;
};
struct Twist {
    long m;
};
struct Literal {
    SeifertMatrix v;
};
struct Mirror {
    KnotExprPtr inner;
};
struct Sum {
    std::vector<KnotExprPtr> terms;
};
struct Cable {
    long m, r;
    KnotExprPtr companion;
};

} // namespace expr

// Immutable knot expression. Build nodes through the factory functions,
// which enforce the torus and cable invariants.
class KnotExpr {
public:
    using Node = std::variant<expr::Unknot, expr::Torus, expr::Twist, expr::Literal, expr::Mirror,
                              expr::Sum, expr::Cable>;

    explicit KnotExpr(Node node) : node_(std::move(node)) {}
    const Node& node() const { return node_; }

private:
    Node node_;
};

KnotExprPtr make_unknot();
// |p|, |q| >= 2 and coprime; pq < 0 denotes the mirror of T(|p|, |q|).
KnotExprPtr make_torus(long p, long q);
KnotExprPtr make_twist(long m);
KnotExprPtr make_literal(SeifertMatrix v);
KnotExprPtr make_mirror(KnotExprPtr inner);
KnotExprPtr make_sum(std::vector<KnotExprPtr> terms);
KnotExprPtr make_cable(long m, long r, KnotExprPtr companion);

// Canonical text in the CLI grammar.
std::string to_string(const KnotExpr& k);

// Seifert matrix of a cable-free expression (block sums, mirrors).
SeifertMatrix seifert_matrix_of(const KnotExpr& k);

} // namespace knotshake
