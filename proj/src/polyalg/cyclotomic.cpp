#include "knotshake/cyclotomic.hpp"
#include "knotshake/cyclotomic_field.hpp"
#include "knotshake/error.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace knotshake {

long euler_phi(long n)
{
    if (n < 1)
        throw DomainError("euler_phi requires n >= 1");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0)
            continue;
        while (m % p == 0)
            m /= p;
        result -= result / p;
    }
    if (m > 1)
        result -= result / m;
    return result;
}

namespace {

std::mutex field_mutex;
std::map<long, std::unique_ptr<const CyclotomicField>> field_cache;

std::unique_ptr<const CyclotomicField> build_field(long n)
{
    // t^n - 1 over all Phi_d with d | n, d < n.
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    c[0] = -1;
    c[static_cast<std::size_t>(n)] = 1;
    LaurentPoly p(0, std::move(c));
    for (long d = 1; d < n; ++d)
        if (n % d == 0)
            p = exact_quotient(p, cyclotomic_field(d).phi_poly);
    auto f = std::make_unique<CyclotomicField>();
    f->n = n;
    f->degree = euler_phi(n);
    f->phi_poly = p;
    for (long i = 0; i < f->degree; ++i)
        if (p.coeff(i) != 0)
            f->low_terms.emplace_back(i, p.coeff(i));
    return f;
}

} // namespace

const CyclotomicField& cyclotomic_field(long n)
{
    if (n < 1)
        throw DomainError("cyclotomic polynomial index must be positive");
    {
        std::lock_guard<std::mutex> lock(field_mutex);
        auto it = field_cache.find(n);
        if (it != field_cache.end())
            return *it->second;
    }
    auto built = build_field(n);
    std::lock_guard<std::mutex> lock(field_mutex);
    auto [it, inserted] = field_cache.emplace(n, std::move(built));
    return *it->second;
}

const LaurentPoly& cyclotomic_poly(long n) { return cyclotomic_field(n).phi_poly; }

void CyclotomicField::reduce(std::vector<BigInt>& a) const
{
    const std::size_t phi = static_cast<std::size_t>(degree);
    for (std::size_t d = a.size(); d-- > phi;) {
        if (a[d] == 0)
            continue;
        const std::size_t base = d - phi;
        for (const auto& [i, c] : low_terms)
            mpz_submul(a[base + static_cast<std::size_t>(i)].get_mpz_t(), a[d].get_mpz_t(),
                       c.get_mpz_t());
        a[d] = 0;
    }
    if (a.size() > phi)
        a.resize(phi);
}

RootOfUnity::RootOfUnity(long k, long n) : k_(0), n_(n)
{
    if (n < 1)
        throw DomainError("root of unity order must be positive");
    k_ = ((k % n) + n) % n;
}

RootOfUnity RootOfUnity::reduced() const
{
    if (k_ == 0)
        return RootOfUnity(0, 1);
    const long g = std::gcd(k_, n_);
    return RootOfUnity(k_ / g, n_ / g);
}

RootOfUnity RootOfUnity::pow(long m) const
{
    // k * m mod n without overflow for moderate sizes.
    const __int128 km = static_cast<__int128>(k_) * m;
    const long r = static_cast<long>(((km % n_) + n_) % n_);
    return RootOfUnity(r, n_);
}

std::string to_string(const RootOfUnity& w)
{
    return "exp(2*pi*i*" + std::to_string(w.k()) + "/" + std::to_string(w.n()) + ")";
}

} // namespace knotshake
