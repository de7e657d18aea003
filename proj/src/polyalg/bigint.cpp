#include "knotshake/bigint.hpp"
#include "knotshake/error.hpp"
#include "knotshake/linalg.hpp"

#include <limits>

namespace knotshake {

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rational> parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto valid = [](const std::string& s) {
        if (s.empty())
            return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    if (!valid(num) || !valid(den))
        return std::nullopt;
    BigInt p(num[0] == '+' ? num.substr(1) : num);
    BigInt q(den[0] == '+' ? den.substr(1) : den);
    if (q == 0)
        return std::nullopt;
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::optional<std::int64_t> to_int64(const BigInt& z)
{
    if (z < BigInt(std::to_string(std::numeric_limits<std::int64_t>::min())) ||
        z > BigInt(std::to_string(std::numeric_limits<std::int64_t>::max())))
        return std::nullopt;
    return std::stoll(z.get_str());
}

Matrix<Rational> to_rational(const IntMatrix& m)
{
    Matrix<Rational> r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

Matrix<Rational> solve_rational(const Matrix<Rational>& a, const Matrix<Rational>& b)
{
    const Eigen::Index n = a.rows();
    Matrix<Rational> m = a;
    Matrix<Rational> x = b;
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index p = k;
        while (p < n && sgn(m(p, k)) == 0)
            ++p;
        if (p == n)
            throw DomainError("singular matrix");
        if (p != k) {
            m.row(k).swap(m.row(p));
            x.row(k).swap(x.row(p));
        }
        const Rational inv = 1 / m(k, k);
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == k || sgn(m(i, k)) == 0)
                continue;
            const Rational f = m(i, k) * inv;
            for (Eigen::Index j = k; j < n; ++j)
                m(i, j) -= f * m(k, j);
            for (Eigen::Index j = 0; j < x.cols(); ++j)
                x(i, j) -= f * x(k, j);
        }
    }
    for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            x(k, j) /= m(k, k);
    return x;
}

IntMatrix unimodular_inverse(const IntMatrix& m)
{
    const Eigen::Index n = m.rows();
    Matrix<Rational> id = Matrix<Rational>::Identity(n, n);
    const Matrix<Rational> inv = solve_rational(to_rational(m), id);
    IntMatrix out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            if (inv(i, j).get_den() != 1)
                throw DomainError("matrix is not unimodular");
            out(i, j) = inv(i, j).get_num();
        }
    return out;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix out = IntMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

} // namespace knotshake
