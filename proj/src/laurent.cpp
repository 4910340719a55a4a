#include "qz/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qz {

void LaurentPoly::add_term(const Monomial& m, const Rational& c)
{
    if (is_zero(c))
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second))
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const
{
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const
{
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r;
    for (const auto& [m, c] : terms_)
        r.terms_[m] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const
{
    LaurentPoly r;
    if (terms_.empty() || o.terms_.empty())
        return r;
    // Iterate the smaller operand on the outside.
    const LaurentPoly& a = size() <= o.size() ? *this : o;
    const LaurentPoly& b = size() <= o.size() ? o : *this;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const
{
    LaurentPoly r;
    if (is_zero(c))
        return r;
    for (const auto& [m, v] : terms_)
        r.terms_[m] = v * c;
    return r;
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& p) { return p.scaled(c); }

LaurentPoly LaurentPoly::shifted(const Term& t) const
{
    LaurentPoly r;
    if (is_zero(t.coef))
        return r;
    for (const auto& [m, v] : terms_)
        r.terms_[m * t.mono] = v * t.coef;
    return r;
}

LaurentPoly LaurentPoly::pow(int k) const
{
    if (k < 0)
        throw NonExactDivision("LaurentPoly::pow with negative exponent");
    LaurentPoly out = one();
    LaurentPoly base = *this;
    while (k) {
        if (k & 1)
            out *= base;
        if (k >>= 1)
            base *= base;
    }
    return out;
}

std::pair<int, int> LaurentPoly::exponent_range(Var v) const
{
    if (terms_.empty())
        return {0, 0};
    int lo = terms_.begin()->first[v], hi = lo;
    for (const auto& [m, c] : terms_) {
        lo = std::min(lo, m[v]);
        hi = std::max(hi, m[v]);
    }
    return {lo, hi};
}

bool LaurentPoly::depends_on(Var v) const
{
    for (const auto& [m, c] : terms_)
        if (m[v] != 0)
            return true;
    return false;
}

LaurentPoly LaurentPoly::subst(const std::map<Var, Term>& assignment) const
{
    LaurentPoly r;
    for (const auto& [m, c] : terms_) {
        Rational coef = c;
        Monomial stripped = m;
        Monomial targets; // substitution happens in one simultaneous pass
        for (const auto& [v, val] : assignment) {
            int e = m[v];
            stripped[v] = 0;
            if (e == 0)
                continue;
            if (is_zero(val.coef) && e < 0)
                throw PoleAtPoint("substituting zero into negative exponent of " +
                                  std::string(1, kVarNames[static_cast<int>(v)]));
            Term p = val.pow(e);
            coef *= p.coef;
            targets = targets * p.mono;
            if (is_zero(coef))
                break;
        }
        r.add_term(stripped * targets, coef);
    }
    return r;
}

LaurentPoly LaurentPoly::subst_const(Var v, const Rational& value) const
{
    return subst(v, Term::constant(value));
}

Rational LaurentPoly::eval(const std::map<Var, Rational>& point) const
{
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < kNumVars; ++i) {
            if (m.e[i] == 0)
                continue;
            auto it = point.find(static_cast<Var>(i));
            if (it == point.end())
                throw PoleAtPoint(std::string("unassigned variable ") + kVarNames[i] + " in eval");
            v *= rat_pow(it->second, m.e[i]);
        }
        acc += v;
    }
    return acc;
}

Rational LaurentPoly::coeff_sum() const
{
    Rational acc(0);
    for (const auto& [m, c] : terms_)
        acc += c;
    return acc;
}

std::string LaurentPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        if (!first)
            os << (sgn(c) >= 0 ? " + " : " - ");
        else if (sgn(c) < 0)
            os << "-";
        first = false;
        Rational ac = abs(c);
        if (it->first.is_one())
            os << ac.get_str();
        else if (is_one(ac))
            os << it->first.str();
        else
            os << ac.get_str() << "*" << it->first.str();
    }
    return os.str();
}

LaurentPoly exact_div(const LaurentPoly& x, const LaurentPoly& y)
{
    if (y.is_zero_poly())
        throw NonExactDivision("division by zero polynomial");
    if (x.is_zero_poly())
        return LaurentPoly::zero();
    if (y.is_constant())
        return x.scaled(Rational(1) / y.constant_coeff());

    // Leading-term elimination under the lex order of the term map. The
    // quotient support is confined to a box computed from the exponent
    // ranges; leaving it proves the division is inexact.
    Monomial qlo, qhi;
    for (int i = 0; i < kNumVars; ++i) {
        auto [xlo, xhi] = x.exponent_range(static_cast<Var>(i));
        auto [ylo, yhi] = y.exponent_range(static_cast<Var>(i));
        qlo.e[i] = xlo - yhi;
        qhi.e[i] = xhi - ylo;
    }

    LaurentPoly rem = x;
    LaurentPoly quot;
    const auto& ylead = *y.terms().rbegin();
    while (!rem.is_zero_poly()) {
        const auto& rlead = *rem.terms().rbegin();
        Monomial qm = rlead.first / ylead.first;
        for (int i = 0; i < kNumVars; ++i)
            if (qm.e[i] < qlo.e[i] || qm.e[i] > qhi.e[i])
                throw NonExactDivision("remainder cannot be cleared: " + rem.str());
        Rational qc = rlead.second / ylead.second;
        Term qt(qc, qm);
        quot.add_term(qm, qc);
        rem -= y.shifted(qt);
    }
    return quot;
}

RationalFn::RationalFn(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d))
{
    if (den.is_zero_poly())
        throw PoleAtPoint("RationalFn with zero denominator");
}

RationalFn RationalFn::operator+(const RationalFn& o) const
{
    return RationalFn(num * o.den + o.num * den, den * o.den);
}

RationalFn RationalFn::operator-(const RationalFn& o) const
{
    return RationalFn(num * o.den - o.num * den, den * o.den);
}

RationalFn RationalFn::operator*(const RationalFn& o) const
{
    return RationalFn(num * o.num, den * o.den);
}

RationalFn RationalFn::operator/(const RationalFn& o) const
{
    if (o.num.is_zero_poly())
        throw PoleAtPoint("division by zero rational function");
    return RationalFn(num * o.den, den * o.num);
}

RationalFn RationalFn::subst(const std::map<Var, Term>& assignment) const
{
    return RationalFn(num.subst(assignment), den.subst(assignment));
}

Rational RationalFn::eval(const std::map<Var, Rational>& point) const
{
    Rational d = den.eval(point);
    if (is_zero(d))
        throw PoleAtPoint("denominator vanishes at sample point");
    return num.eval(point) / d;
}

bool rf_equal(const RationalFn& x, const RationalFn& y)
{
    return x.num * y.den == y.num * x.den;
}

} // namespace qz
