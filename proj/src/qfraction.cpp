#include "qz/qfraction.hpp"

namespace qz {

void FactorBag::insert(const Factor& f, int mult)
{
    if (mult == 0)
        return;
    auto [it, inserted] = m_.emplace(f, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second <= 0)
            m_.erase(it);
    }
}

bool FactorBag::contains_vanishing() const
{
    for (const auto& [f, k] : m_)
        if (f.vanishes())
            return true;
    return false;
}

FactorBag FactorBag::united_max(const FactorBag& o) const
{
    FactorBag r = *this;
    for (const auto& [f, k] : o.m_) {
        auto it = r.m_.find(f);
        if (it == r.m_.end())
            r.m_.emplace(f, k);
        else
            it->second = std::max(it->second, k);
    }
    return r;
}

FactorBag FactorBag::minus(const FactorBag& o) const
{
    FactorBag r = *this;
    for (const auto& [f, k] : o.m_)
        r.insert(f, -k);
    return r;
}

FactorBag FactorBag::plus(const FactorBag& o) const
{
    FactorBag r = *this;
    for (const auto& [f, k] : o.m_)
        r.insert(f, k);
    return r;
}

void FactorBag::cancel(FactorBag& num, FactorBag& den)
{
    for (auto it = num.m_.begin(); it != num.m_.end();) {
        auto jt = den.m_.find(it->first);
        if (jt == den.m_.end()) {
            ++it;
            continue;
        }
        int k = std::min(it->second, jt->second);
        it->second -= k;
        jt->second -= k;
        if (jt->second == 0)
            den.m_.erase(jt);
        it = it->second == 0 ? num.m_.erase(it) : std::next(it);
    }
}

LaurentPoly FactorBag::expand() const
{
    LaurentPoly out = LaurentPoly::one();
    for (const auto& [f, k] : m_)
        out *= f.to_poly().pow(k);
    return out;
}

Rational FactorBag::eval(const std::map<Var, Rational>& point) const
{
    Rational out(1);
    for (const auto& [f, k] : m_) {
        Rational v = f.to_poly().eval(point);
        out *= rat_pow(v, k); // rat_pow throws PoleAtPoint on v = 0
    }
    return out;
}

FactorBag FactorBag::subst(const std::map<Var, Term>& assignment) const
{
    FactorBag out;
    for (const auto& [f, k] : m_) {
        Rational coef = f.coef;
        Monomial stripped = f.mono;
        Monomial targets;
        for (const auto& [v, val] : assignment) {
            int e = f.mono[v];
            stripped[v] = 0;
            if (e == 0)
                continue;
            Term p = val.pow(e);
            coef *= p.coef;
            targets = targets * p.mono;
        }
        out.insert(Factor{stripped * targets, coef}, k);
    }
    return out;
}

QSeries FactorBag::to_series(const std::map<Var, Term>& params, int Q) const
{
    QSeries out = QSeries::one(Q);
    for (const auto& [f, k] : m_) {
        QSeries fs = series_from_poly(f.to_poly(), params, Q);
        for (int i = 0; i < k; ++i)
            out *= fs;
    }
    return out;
}

FactorBag poch_bag(const Term& A, const Term& step, int len)
{
    FactorBag bag;
    Term cur = A;
    for (int j = 0; j < len; ++j) {
        if (!is_zero(cur.coef))
            bag.insert(Factor{cur.mono, cur.coef});
        cur = cur * step;
    }
    return bag;
}

FactorBag poch_bag(const Term& A, const Monomial& step, int len)
{
    return poch_bag(A, Term(Rational(1), step), len);
}

QFraction QFraction::operator+(const QFraction& o) const
{
    FactorBag common = den.united_max(o.den);
    LaurentPoly lhs = num * common.minus(den).expand();
    LaurentPoly rhs = o.num * common.minus(o.den).expand();
    return QFraction(lhs + rhs, common);
}

QFraction QFraction::operator-(const QFraction& o) const
{
    FactorBag common = den.united_max(o.den);
    LaurentPoly lhs = num * common.minus(den).expand();
    LaurentPoly rhs = o.num * common.minus(o.den).expand();
    return QFraction(lhs - rhs, common);
}

QFraction QFraction::operator*(const QFraction& o) const
{
    return QFraction(num * o.num, den.plus(o.den));
}

QFraction QFraction::mul_poly(const LaurentPoly& p) const { return QFraction(num * p, den); }

QFraction QFraction::div_bag(const FactorBag& bag) const { return QFraction(num, den.plus(bag)); }

QFraction QFraction::mul_bag(const FactorBag& bag) const
{
    FactorBag numerator = bag;
    FactorBag denominator = den;
    FactorBag::cancel(numerator, denominator);
    return QFraction(num * numerator.expand(), denominator);
}

QFraction QFraction::subst(const std::map<Var, Term>& assignment) const
{
    return QFraction(num.subst(assignment), den.subst(assignment));
}

Rational QFraction::eval(const std::map<Var, Rational>& point) const
{
    Rational d = den.eval(point);
    if (qz::is_zero(d))
        throw PoleAtPoint("denominator factor vanishes at sample point");
    return num.eval(point) / d;
}

QSeries QFraction::to_series(const std::map<Var, Term>& params, int Q) const
{
    QSeries n = series_from_poly(num, params, Q);
    QSeries d = den.to_series(params, Q);
    return n * d.inverse();
}

bool qfrac_equal(const QFraction& x, const QFraction& y)
{
    FactorBag xd = x.den, yd = y.den;
    FactorBag::cancel(xd, yd); // shared part drops from both cross products
    return x.num * yd.expand() == y.num * xd.expand();
}

TermBuilder& TermBuilder::mul_num_bag(const FactorBag& b)
{
    if (b.contains_vanishing()) {
        is_zero_ = true;
        return *this;
    }
    num_ = num_.plus(b);
    return *this;
}

TermBuilder& TermBuilder::div_den_bag(const FactorBag& b)
{
    den_ = den_.plus(b);
    return *this;
}

QFraction TermBuilder::build() const
{
    if (is_zero_ || qz::is_zero(scalar_))
        return QFraction();
    FactorBag n = num_, d = den_;
    FactorBag::cancel(n, d);
    LaurentPoly out(Term(scalar_, mono_));
    out *= n.expand();
    for (const auto& p : polys_)
        out *= p;
    return QFraction(std::move(out), std::move(d));
}

} // namespace qz
