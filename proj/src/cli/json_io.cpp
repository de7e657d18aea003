#include "knotshake/json_io.hpp"
#include "knotshake/error.hpp"

namespace knotshake {

json to_json(const BigInt& x)
{
    if (const auto v = to_int64(x))
        return *v;
    return to_string(x);
}

BigInt big_from_json(const json& j)
{
    if (j.is_number_integer())
        return BigInt(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        BigInt z;
        if (z.set_str(j.get<std::string>(), 10) != 0)
            throw DomainError("malformed integer: " + j.get<std::string>());
        return z;
    }
    throw DomainError("expected an integer");
}

json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer())
        return Rational(big_from_json(j));
    if (!j.is_string())
        throw DomainError("expected a rational \"p/q\"");
    const auto q = parse_rational(j.get<std::string>());
    if (!q)
        throw DomainError("malformed rational: " + j.get<std::string>());
    return *q;
}

json to_json(const LaurentPoly& p)
{
    json coeffs = json::array();
    for (const BigInt& c : p.coeffs())
        coeffs.push_back(to_json(c));
    return {{"lo", p.is_zero() ? 0 : p.lo()}, {"coeffs", coeffs}};
}

LaurentPoly laurent_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("lo") || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw DomainError("Laurent polynomial needs \"lo\" and \"coeffs\"");
    std::vector<BigInt> c;
    for (const json& x : j["coeffs"])
        c.push_back(big_from_json(x));
    return LaurentPoly(j["lo"].get<std::int64_t>(), std::move(c));
}

json to_json(const IntMatrix& m)
{
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

IntMatrix int_matrix_from_json(const json& j)
{
    if (!j.is_array())
        throw DomainError("matrix must be an array of rows");
    const auto n = static_cast<Eigen::Index>(j.size());
    IntMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
            throw DomainError("matrix must be square");
        for (Eigen::Index k = 0; k < n; ++k)
            m(i, k) = big_from_json(row[static_cast<std::size_t>(k)]);
    }
    return m;
}

json to_json(const BranchedOrder& b)
{
    return {{"order", b.infinite ? json(nullptr) : to_json(b.order)}, {"infinite", b.infinite}};
}

json to_json(const Inertia& i) { return {{"pos", i.pos}, {"neg", i.neg}, {"null", i.null}}; }

json to_json(const ShakeReport& r)
{
    json ci = {{"pass", r.cond_i.pass}, {"automatic", r.cond_i.automatic}};
    if (r.cond_i.order) {
        ci["order"] = r.cond_i.order->infinite ? json(nullptr) : to_json(r.cond_i.order->order);
        ci["infinite"] = r.cond_i.order->infinite;
    }
    if (r.cond_i.delta)
        ci["delta"] = to_json(*r.cond_i.delta);

    json sigs = json::array();
    for (const auto& [k, s] : r.cond_iii.signatures)
        sigs.push_back({{"k", k}, {"sigma", s}});

    return {{"n", r.n},
            {"conditions",
             {{"i", ci},
              {"ii", {{"pass", r.cond_ii.pass}, {"automatic", r.cond_ii.automatic}, {"arf", r.cond_ii.arf}}},
              {"iii", {{"pass", r.cond_iii.pass}, {"automatic", r.cond_iii.automatic}, {"signatures", sigs}}}}},
            {"verdict", r.verdict},
            {"notes", r.notes}};
}

json to_json(const GenusWitness& w)
{
    json sub = json::array();
    for (Eigen::Index i : w.subbasis)
        sub.push_back(i);
    return {{"g", w.g},
            {"h", w.h},
            {"m", to_json(w.m.matrix())},
            {"subbasis", sub},
            {"m_sub", to_json(w.m_sub.matrix())},
            {"basis", to_json(w.basis)},
            {"determinant", to_json(w.determinant)},
            {"verified", w.verified}};
}

GroupRingForm group_ring_form_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw DomainError("form needs an integer \"n\"");
    const long n = j["n"].get<long>();
    if (j.contains("seifert"))
        return tristram_levine_group_form(SeifertMatrix::infer(int_matrix_from_json(j["seifert"])), n);
    if (!j.contains("matrix") || !j["matrix"].is_array())
        throw DomainError("form needs \"matrix\" or \"seifert\"");
    const json& rows = j["matrix"];
    const auto size = static_cast<Eigen::Index>(rows.size());
    Matrix<LaurentPoly> a(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
        const json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != size)
            throw DomainError("form matrix must be square");
        for (Eigen::Index k = 0; k < size; ++k)
            a(i, k) = laurent_from_json(row[static_cast<std::size_t>(k)]);
    }
    return GroupRingForm(n, std::move(a));
}

} // namespace knotshake
