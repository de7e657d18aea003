#include "knotshake/knot_expr.hpp"
#include "knotshake/error.hpp"

#include <numeric>
#include <sstream>

namespace knotshake {

KnotExprPtr make_unknot() { return std::make_shared<KnotExpr>(expr::Unknot{}); }

KnotExprPtr make_torus(long p, long q)
{
    if (std::labs(p) < 2 || std::labs(q) < 2)
        throw DomainError("torus parameters must satisfy |p|, |q| >= 2");
    if (std::gcd(p, q) != 1)
        throw DomainError("torus parameters not coprime: this is a link");
    return std::make_shared<KnotExpr>(expr::Torus{p, q});
}

KnotExprPtr make_twist(long m) { return std::make_shared<KnotExpr>(expr::Twist{m}); }

KnotExprPtr make_literal(SeifertMatrix v)
{
    if (!v.is_knot())
        throw DomainError("Seifert literal must be a knot matrix");
    return std::make_shared<KnotExpr>(expr::Literal{std::move(v)});
}

KnotExprPtr make_mirror(KnotExprPtr inner)
{
    if (!inner)
        throw DomainError("malformed expression");
    return std::make_shared<KnotExpr>(expr::Mirror{std::move(inner)});
}

KnotExprPtr make_sum(std::vector<KnotExprPtr> terms)
{
    if (terms.empty())
        throw DomainError("sum needs at least one term");
    for (const auto& t : terms)
        if (!t)
            throw DomainError("malformed expression");
    return std::make_shared<KnotExpr>(expr::Sum{std::move(terms)});
}

KnotExprPtr make_cable(long m, long r, KnotExprPtr companion)
{
    if (!companion)
        throw DomainError("malformed expression");
    if (m < 1)
        throw DomainError("cable parameter m must be at least 1");
    if (std::gcd(m, r) != 1)
        throw DomainError("cable parameters not coprime");
    return std::make_shared<KnotExpr>(expr::Cable{m, r, std::move(companion)});
}

namespace {

void print(std::ostream& os, const KnotExpr& k)
{
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, expr::Unknot>) {
                os << "U";
            } else if constexpr (std::is_same_v<T, expr::Torus>) {
                os << "T(" << n.p << "," << n.q << ")";
            } else if constexpr (std::is_same_v<T, expr::Twist>) {
                os << "twist(" << n.m << ")";
            } else if constexpr (std::is_same_v<T, expr::Literal>) {
                os << "seifert([";
                const IntMatrix& v = n.v.matrix();
                for (Eigen::Index i = 0; i < v.rows(); ++i) {
                    os << (i ? ",[" : "[");
                    for (Eigen::Index j = 0; j < v.cols(); ++j)
                        os << (j ? "," : "") << v(i, j).get_str();
                    os << "]";
                }
                os << "])";
            } else if constexpr (std::is_same_v<T, expr::Mirror>) {
                os << "mirror(";
                print(os, *n.inner);
                os << ")";
            } else if constexpr (std::is_same_v<T, expr::Sum>) {
                os << "sum(";
                for (std::size_t i = 0; i < n.terms.size(); ++i) {
                    if (i)
                        os << ",";
                    print(os, *n.terms[i]);
                }
                os << ")";
            } else {
                os << "cable(" << n.m << "," << n.r << ";";
                print(os, *n.companion);
                os << ")";
            }
        },
        k.node());
}

} // namespace

std::string to_string(const KnotExpr& k)
{
    std::ostringstream os;
    print(os, k);
    return os.str();
}

SeifertMatrix seifert_matrix_of(const KnotExpr& k)
{
    return std::visit(
        [](const auto& n) -> SeifertMatrix {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, expr::Unknot>) {
                return SeifertMatrix();
            } else if constexpr (std::is_same_v<T, expr::Torus>) {
                const SeifertMatrix v = torus_seifert(std::labs(n.p), std::labs(n.q));
                return (n.p < 0) != (n.q < 0) ? mirror(v) : v;
            } else if constexpr (std::is_same_v<T, expr::Twist>) {
                return twist_seifert(n.m);
            } else if constexpr (std::is_same_v<T, expr::Literal>) {
                return n.v;
            } else if constexpr (std::is_same_v<T, expr::Mirror>) {
                return mirror(seifert_matrix_of(*n.inner));
            } else if constexpr (std::is_same_v<T, expr::Sum>) {
                SeifertMatrix acc;
                for (const auto& t : n.terms)
                    acc = connected_sum(acc, seifert_matrix_of(*t));
                return acc;
            } else {
                throw DomainError("cable expressions have no Seifert matrix realization here");
            }
        },
        k.node());
}

} // namespace knotshake
