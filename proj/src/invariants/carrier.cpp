#include "knotshake/error.hpp"
#include "knotshake/invariants.hpp"
#include "knotshake/linalg.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace knotshake {

LaurentPoly alexander_poly(const SeifertMatrix& v)
{
    if (!v.is_knot())
        throw DomainError("Alexander polynomial requires a knot Seifert matrix");
    const LaurentPoly d = alexander_determinant(v.matrix()).symmetrized();
    if (d.eval_at_one() != 1)
        throw InternalError("Alexander polynomial does not evaluate to 1 at t = 1");
    return d;
}

LaurentPoly torus_alexander(long p, long q)
{
    p = std::labs(p);
    q = std::labs(q);
    if (p <= 1 || q <= 1)
        return LaurentPoly(1L);
    auto binomial = [](long e) { return LaurentPoly::monomial(1, e) - LaurentPoly(1L); };
    const LaurentPoly num = binomial(p * q) * binomial(1);
    const LaurentPoly den = binomial(p) * binomial(q);
    return exact_quotient(num, den).symmetrized();
}

HermitianMatrix tristram_levine_form(const SeifertMatrix& v, const RootOfUnity& w)
{
    const RootOfUnity r = w.reduced();
    const long n = r.n();
    const CycloElement alpha = CycloElement(1L) - CycloElement::zeta_power(r.k(), n);
    const CycloElement alpha_bar = alpha.conj();
    const IntMatrix& m = v.matrix();
    CycloMatrix h(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            CycloElement e;
            if (m(i, j) != 0)
                e += alpha * CycloElement(Rational(m(i, j)));
            if (m(j, i) != 0)
                e += alpha_bar * CycloElement(Rational(m(j, i)));
            h(i, j) = std::move(e);
        }
    return HermitianMatrix(n, std::move(h));
}

Inertia tl_inertia(const SeifertMatrix& v, const RootOfUnity& w)
{
    return hermitian_signature(tristram_levine_form(v, w));
}

long tl_signature(const SeifertMatrix& v, const RootOfUnity& w)
{
    if (w.is_one())
        return 0;
    return tl_inertia(v, w).signature();
}

struct InvariantCarrier::Node {
    Source source = Source::formula_backed;
    LaurentPoly delta;
    virtual ~Node() = default;
    // w is reduced and not 1.
    virtual long eval(const RootOfUnity& w) const = 0;
    virtual const SeifertMatrix* matrix() const { return nullptr; }
};

namespace {

using NodePtr = std::shared_ptr<const InvariantCarrier::Node>;

struct UnknotNode final : InvariantCarrier::Node {
    UnknotNode() { delta = LaurentPoly(1L); }
    long eval(const RootOfUnity&) const override { return 0; }
};

struct MatrixNode final : InvariantCarrier::Node {
    SeifertMatrix v;
    mutable std::mutex mutex;
    mutable std::map<std::pair<long, long>, long> cache;

    long eval(const RootOfUnity& w) const override
    {
        const std::pair<long, long> key{w.k(), w.n()};
        {
            std::lock_guard<std::mutex> lock(mutex);
            auto it = cache.find(key);
            if (it != cache.end())
                return it->second;
        }
        long s = 0;
        if (const auto proxy = w.n() > 6 ? arc_proxy(roots(), w, w.n() - 1) : std::nullopt)
            s = eval(*proxy);
        else
            s = tl_signature(v, w);
        std::lock_guard<std::mutex> lock(mutex);
        cache.emplace(key, s);
        return s;
    }
    const SeifertMatrix* matrix() const override { return &v; }

    mutable std::once_flag roots_once;
    mutable std::optional<CircleRootCounter> roots_;
    const CircleRootCounter& roots() const
    {
        std::call_once(roots_once, [this] { roots_.emplace(delta); });
        return *roots_;
    }
};

struct MirrorNode final : InvariantCarrier::Node {
    NodePtr inner;
    long eval(const RootOfUnity& w) const override { return -inner->eval(w); }
};

struct SumNode final : InvariantCarrier::Node {
    std::vector<NodePtr> terms;
    long eval(const RootOfUnity& w) const override
    {
        long s = 0;
        for (const auto& t : terms)
            s += t->eval(w);
        return s;
    }
};

struct CableNode final : InvariantCarrier::Node {
    long m = 1;
    NodePtr pattern;
    NodePtr companion;
    long eval(const RootOfUnity& w) const override
    {
        long s = pattern->eval(w);
        const RootOfUnity wm = w.pow(m).reduced();
        if (!wm.is_one())
            s += companion->eval(wm);
        return s;
    }
};

void check_delta(const LaurentPoly& d)
{
    if (!d.is_symmetric() || d.eval_at_one() != 1)
        throw InternalError("knot polynomial must be symmetric with value 1 at t = 1");
}

std::mutex torus_mutex;
std::map<std::pair<long, long>, InvariantCarrier> torus_cache;

} // namespace

InvariantCarrier InvariantCarrier::unknot()
{
    static const NodePtr node = std::make_shared<UnknotNode>();
    return InvariantCarrier(node);
}

InvariantCarrier InvariantCarrier::from_matrix(SeifertMatrix v)
{
    LaurentPoly d = alexander_poly(v);
    return from_matrix(std::move(v), std::move(d));
}

InvariantCarrier InvariantCarrier::from_matrix(SeifertMatrix v, LaurentPoly delta)
{
    if (!v.is_knot())
        throw DomainError("carrier requires a knot Seifert matrix");
    check_delta(delta);
    auto node = std::make_shared<MatrixNode>();
    node->source = Source::matrix_backed;
    node->delta = std::move(delta);
    node->v = std::move(v);
    return InvariantCarrier(node);
}

InvariantCarrier InvariantCarrier::mirror_of(const InvariantCarrier& c)
{
    auto node = std::make_shared<MirrorNode>();
    node->delta = c.delta();
    node->inner = c.node_;
    return InvariantCarrier(node);
}

InvariantCarrier InvariantCarrier::sum_of(const std::vector<InvariantCarrier>& terms)
{
    auto node = std::make_shared<SumNode>();
    node->delta = LaurentPoly(1L);
    for (const auto& t : terms) {
        node->delta *= t.delta();
        node->terms.push_back(t.node_);
    }
    check_delta(node->delta);
    return InvariantCarrier(node);
}

InvariantCarrier InvariantCarrier::cable_of(long m, long r, const InvariantCarrier& companion)
{
    if (m < 1)
        throw DomainError("cable parameter m must be at least 1");
    if (std::gcd(m, r) != 1)
        throw DomainError("cable parameters not coprime");
    const InvariantCarrier pattern = torus_carrier(m, r);
    auto node = std::make_shared<CableNode>();
    node->m = m;
    node->pattern = pattern.node_;
    node->companion = companion.node_;
    node->delta = pattern.delta() * companion.delta().substitute_power(m);
    check_delta(node->delta);
    return InvariantCarrier(node);
}

const LaurentPoly& InvariantCarrier::delta() const { return node_->delta; }

InvariantCarrier::Source InvariantCarrier::source() const { return node_->source; }

const SeifertMatrix* InvariantCarrier::matrix() const { return node_->matrix(); }

long InvariantCarrier::signature(const RootOfUnity& w) const
{
    const RootOfUnity r = w.reduced();
    if (r.is_one())
        return 0;
    return node_->eval(r);
}

InvariantCarrier torus_carrier(long p, long q)
{
    if (std::labs(p) <= 1 || std::labs(q) <= 1)
        return InvariantCarrier::unknot();
    if (std::gcd(p, q) != 1)
        throw DomainError("torus parameters not coprime: this is a link");
    const long a = std::min(std::labs(p), std::labs(q));
    const long b = std::max(std::labs(p), std::labs(q));
    InvariantCarrier base = InvariantCarrier::unknot();
    {
        std::lock_guard<std::mutex> lock(torus_mutex);
        auto it = torus_cache.find({a, b});
        if (it != torus_cache.end())
            base = it->second;
        else
            base = torus_cache
                       .emplace(std::make_pair(a, b),
                                InvariantCarrier::from_matrix(torus_seifert(a, b), torus_alexander(a, b)))
                       .first->second;
    }
    return (p < 0) != (q < 0) ? InvariantCarrier::mirror_of(base) : base;
}

InvariantCarrier carrier_of(const KnotExpr& k)
{
    return std::visit(
        [](const auto& n) -> InvariantCarrier {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, expr::Unknot>) {
                return InvariantCarrier::unknot();
            } else if constexpr (std::is_same_v<T, expr::Torus>) {
                return torus_carrier(n.p, n.q);
            } else if constexpr (std::is_same_v<T, expr::Twist>) {
                return InvariantCarrier::from_matrix(twist_seifert(n.m));
            } else if constexpr (std::is_same_v<T, expr::Literal>) {
                return InvariantCarrier::from_matrix(n.v);
            } else if constexpr (std::is_same_v<T, expr::Mirror>) {
                return InvariantCarrier::mirror_of(carrier_of(*n.inner));
            } else if constexpr (std::is_same_v<T, expr::Sum>) {
                std::vector<InvariantCarrier> terms;
                for (const auto& t : n.terms)
                    terms.push_back(carrier_of(*t));
                return InvariantCarrier::sum_of(terms);
            } else {
                return InvariantCarrier::cable_of(n.m, n.r, carrier_of(*n.companion));
            }
        },
        k.node());
}

long tl_signature(const InvariantCarrier& c, const RootOfUnity& w) { return c.signature(w); }

} // namespace knotshake
