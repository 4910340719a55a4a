#include "qz/cyclotomic.hpp"

#include <mutex>

namespace qz {

int euler_phi(int r)
{
    int phi = r;
    for (int p = 2; p * p <= r; ++p) {
        if (r % p)
            continue;
        phi -= phi / p;
        while (r % p == 0)
            r /= p;
    }
    if (r > 1)
        phi -= phi / r;
    return phi;
}

namespace {

// Univariate exact division with rational coefficients, dense vectors,
// constant term first. Used only to build cyclotomic polynomials.
std::vector<Rational> poly_div_exact(std::vector<Rational> num, const std::vector<Rational>& den)
{
    std::vector<Rational> quot(num.size() - den.size() + 1, Rational(0));
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        Rational c = num[k + den.size() - 1] / den.back();
        quot[k] = c;
        if (is_zero(c))
            continue;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[k + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (!is_zero(c))
            throw NonExactDivision("cyclotomic polynomial construction");
    return quot;
}

std::map<int, std::vector<Rational>> g_cyclo_cache;
std::mutex g_cyclo_mutex;

// Phi_d for all divisors d of r, bottom-up: Phi_d = (x^d - 1) / prod of the
// Phi_e over proper divisors e of d.
std::vector<Rational> compute_cyclotomic(int r, std::map<int, std::vector<Rational>>& local)
{
    for (int d = 1; d <= r; ++d) {
        if (r % d || local.count(d))
            continue;
        std::vector<Rational> num(static_cast<std::size_t>(d) + 1, Rational(0));
        num[0] = -1;
        num[static_cast<std::size_t>(d)] = 1;
        std::vector<Rational> den{Rational(1)};
        for (int e = 1; e < d; ++e) {
            if (d % e)
                continue;
            const auto& phi_e = local.at(e);
            std::vector<Rational> next(den.size() + phi_e.size() - 1, Rational(0));
            for (std::size_t i = 0; i < den.size(); ++i)
                for (std::size_t j = 0; j < phi_e.size(); ++j)
                    next[i + j] += den[i] * phi_e[j];
            den = std::move(next);
        }
        local.emplace(d, poly_div_exact(std::move(num), den));
    }
    return local.at(r);
}

} // namespace

const std::vector<Rational>& cyclotomic_polynomial(int r)
{
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    auto it = g_cyclo_cache.find(r);
    if (it != g_cyclo_cache.end())
        return it->second;
    std::map<int, std::vector<Rational>> local;
    compute_cyclotomic(r, local);
    for (auto& [d, poly] : local)
        g_cyclo_cache.emplace(d, std::move(poly));
    return g_cyclo_cache.at(r);
}

CyclotomicElt::CyclotomicElt(int r) : r_(r), c_(static_cast<std::size_t>(euler_phi(r)), Rational(0)) {}

CyclotomicElt::CyclotomicElt(int r, const Rational& c) : CyclotomicElt(r) { c_[0] = c; }

bool CyclotomicElt::is_zero_elt() const
{
    for (const auto& x : c_)
        if (!is_zero(x))
            return false;
    return true;
}

bool CyclotomicElt::is_rational() const
{
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!is_zero(c_[i]))
            return false;
    return true;
}

Rational CyclotomicElt::rational_value() const { return c_[0]; }

CyclotomicElt CyclotomicElt::zeta_power(int r, long k)
{
    long e = k % r;
    if (e < 0)
        e += r;
    // Reduce x^e modulo Phi_r by long division against the monic Phi_r.
    const auto& phi = cyclotomic_polynomial(r);
    int deg = static_cast<int>(phi.size()) - 1; // == euler_phi(r)
    std::vector<Rational> rem(static_cast<std::size_t>(e) + 1, Rational(0));
    rem[static_cast<std::size_t>(e)] = 1;
    for (int k2 = static_cast<int>(rem.size()) - 1; k2 >= deg; --k2) {
        Rational c = rem[k2];
        if (is_zero(c))
            continue;
        for (int j = 0; j <= deg; ++j)
            rem[k2 - deg + j] -= c * phi[static_cast<std::size_t>(j)];
    }
    CyclotomicElt out(r);
    for (int i = 0; i < deg && i < static_cast<int>(rem.size()); ++i)
        out.c_[static_cast<std::size_t>(i)] = rem[static_cast<std::size_t>(i)];
    return out;
}

CyclotomicElt CyclotomicElt::operator+(const CyclotomicElt& o) const
{
    CyclotomicElt r(r_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        r.c_[i] = c_[i] + o.c_[i];
    return r;
}

CyclotomicElt CyclotomicElt::operator-(const CyclotomicElt& o) const
{
    CyclotomicElt r(r_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        r.c_[i] = c_[i] - o.c_[i];
    return r;
}

CyclotomicElt CyclotomicElt::operator*(const CyclotomicElt& o) const
{
    const auto& phi = cyclotomic_polynomial(r_);
    int deg = static_cast<int>(phi.size()) - 1;
    std::vector<Rational> prod(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (is_zero(c_[i]))
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            prod[i + j] += c_[i] * o.c_[j];
    }
    for (int k = static_cast<int>(prod.size()) - 1; k >= deg; --k) {
        Rational c = prod[static_cast<std::size_t>(k)];
        if (is_zero(c))
            continue;
        for (int j = 0; j <= deg; ++j)
            prod[static_cast<std::size_t>(k - deg + j)] -= c * phi[static_cast<std::size_t>(j)];
    }
    CyclotomicElt out(r_);
    for (int i = 0; i < deg; ++i)
        out.c_[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(i)];
    return out;
}

CyclotomicElt CyclotomicElt::scaled(const Rational& c) const
{
    CyclotomicElt r(r_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        r.c_[i] = c_[i] * c;
    return r;
}

CycloPoly eval_cyclotomic(const LaurentPoly& x, Var var, int r)
{
    CycloPoly out;
    for (const auto& [m, c] : x.terms()) {
        Monomial rest = m;
        rest[var] = 0;
        CyclotomicElt value = CyclotomicElt::zeta_power(r, m[var]).scaled(c);
        auto [it, inserted] = out.emplace(rest, value);
        if (!inserted)
            it->second = it->second + value;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero_elt() ? out.erase(it) : std::next(it);
    return out;
}

bool cyclo_equals_rational(const CycloPoly& x, const LaurentPoly& y)
{
    LaurentPoly residual = y;
    for (const auto& [m, v] : x) {
        if (!v.is_rational())
            return false;
        residual.add_term(m, -v.rational_value());
    }
    return residual.is_zero_poly();
}

} // namespace qz
