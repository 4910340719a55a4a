#include "qz/partitions.hpp"

#include <algorithm>
#include <numeric>

namespace qz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw InvalidComposition("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidComposition("partition parts must be weakly decreasing");
    }
}

Partition Partition::rectangle(int m, int n)
{
    if (m <= 0)
        return n > 0 && m < 0 ? throw InvalidComposition("negative rectangle") : Partition();
    return Partition(std::vector<int>(static_cast<std::size_t>(n), m));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const
{
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::conj_part(int i) const
{
    int count = 0;
    for (int p : parts_)
        if (p >= i)
            ++count;
    return count;
}

Partition Partition::conjugate() const
{
    std::vector<int> conj;
    for (int i = 1; i <= part(1); ++i)
        conj.push_back(conj_part(i));
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& mu) const
{
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i))
            return false;
    return true;
}

bool Partition::fits_in_rectangle(int m, int n) const { return length() <= n && part(1) <= m; }

std::string Partition::str() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Partition conjugate(const Partition& la) { return la.conjugate(); }

Partition complement_in_rectangle(const Partition& mu, int m, int n)
{
    if (!mu.fits_in_rectangle(m, n))
        throw NotInRectangle(mu.str() + " in (" + std::to_string(m) + "^" + std::to_string(n) + ")");
    std::vector<int> nu;
    for (int i = 1; i <= n; ++i) {
        int v = m - mu.part(n + 1 - i);
        if (v > 0)
            nu.push_back(v);
    }
    return Partition(std::move(nu));
}

namespace {

void gen_in_rectangle(int m, int n, std::vector<int>& cur, std::vector<Partition>& out)
{
    out.emplace_back(Partition(cur));
    if (static_cast<int>(cur.size()) == n)
        return;
    int hi = cur.empty() ? m : cur.back();
    for (int next = 1; next <= hi; ++next) {
        cur.push_back(next);
        gen_in_rectangle(m, n, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_in_rectangle(int m, int n)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    if (m < 0 || n < 0)
        throw NotInRectangle("negative rectangle");
    gen_in_rectangle(m, n, cur, out);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return a.parts() < b.parts(); });
    return out;
}

std::vector<Partition> partitions_of_size(int n)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.emplace_back(Partition(cur));
            return;
        }
        for (int next = std::min(rem, maxpart); next >= 1; --next) {
            cur.push_back(next);
            rec(rem - next, next);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

namespace {

void require_polynomial(const LaurentPoly& p, const char* what)
{
    for (const auto& [m, c] : p.terms())
        for (int i = 0; i < kNumVars; ++i)
            if (m.e[i] < 0)
                throw NonExactDivision(std::string(what) + " produced a negative exponent");
}

} // namespace

LaurentPoly hall_g(const Partition& la, const Partition& mu, const Monomial& step)
{
    if (!la.contains(mu))
        return LaurentPoly::zero();
    Monomial inv_step = step.pow(-1);
    long texp = 0;
    LaurentPoly out = LaurentPoly::one();
    for (int i = 1; i <= la.part(1); ++i) {
        int lc = la.conj_part(i), mc = mu.conj_part(i), mc1 = mu.conj_part(i + 1);
        texp += static_cast<long>(mc) * (lc - mc);
        out *= qbinom(lc - mc1, lc - mc, inv_step);
        if (out.is_zero_poly())
            return out;
    }
    out = out.shifted(Term(Rational(1), step.pow(static_cast<int>(texp))));
    require_polynomial(out, "hall_g");
    return out;
}

LaurentPoly aut_count(const Partition& la, const Monomial& step)
{
    Monomial inv_step = step.pow(-1);
    Term inv(Rational(1), inv_step);
    long sq = 0;
    LaurentPoly out = LaurentPoly::one();
    for (int i = 1; i <= la.part(1); ++i) {
        int lc = la.conj_part(i);
        sq += static_cast<long>(lc) * lc;
        out *= poch_poly(inv, inv, lc - la.conj_part(i + 1));
    }
    out = out.shifted(Term(Rational(1), step.pow(static_cast<int>(sq))));
    require_polynomial(out, "aut_count");
    return out;
}

LaurentPoly real_structure_count(const Partition& la)
{
    LaurentPoly num = aut_count(la, mono(Var::q, 2));
    LaurentPoly den = aut_count(la, mono(Var::q));
    return exact_div(num, den);
}

LaurentPoly B_count(int m, int n, const Partition& la, const Partition& mu)
{
    if (!la.fits_in_rectangle(m, n) || !mu.fits_in_rectangle(m, n))
        throw NotInRectangle("B_count arguments must fit in (m^n)");
    if (!la.contains(mu))
        return LaurentPoly::zero();

    Partition rect = Partition::rectangle(m, n);
    Monomial q = mono(Var::q), q2 = mono(Var::q, 2);

    // Grassmannian-ratio route.
    LaurentPoly num = hall_g(rect, la, q2) * hall_g(la, mu, q) * real_structure_count(la);
    LaurentPoly den = hall_g(rect, mu, q2) * real_structure_count(mu);
    LaurentPoly route1 = exact_div(num, den);

    // Product simplification route, bases q^{-1} and q^{-2}.
    long e = 0;
    for (int i = 1; i <= la.part(1); ++i)
        e += static_cast<long>(2 * n - la.conj_part(i)) * (la.conj_part(i) - mu.conj_part(i));
    Monomial qinv = mono(Var::q, -1), qinv2 = mono(Var::q, -2);
    LaurentPoly route2 =
        poch_poly(Term(Rational(-1), qinv), Term(Rational(1), qinv), la.conj_part(1) - mu.conj_part(1));
    route2 *= qbinom(n - mu.conj_part(1), n - la.conj_part(1), qinv2);
    for (int i = 1; i <= la.part(1); ++i)
        route2 *= qbinom(la.conj_part(i) - mu.conj_part(i + 1), la.conj_part(i) - la.conj_part(i + 1),
                         qinv);
    route2 = route2.shifted(Term(Rational(1), mono(Var::q, static_cast<int>(e))));

    if (!(route1 == route2))
        throw FormMismatch("B_count: ratio and product forms disagree for " + la.str() + "," + mu.str());
    for (const auto& [mm, c] : route1.terms())
        if (sgn(c) < 0 || !is_integer(c))
            throw FormMismatch("B_count not in N[q]");
    require_polynomial(route1, "B_count");
    return route1;
}

} // namespace qz
