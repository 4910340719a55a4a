#include "qz/qseries.hpp"

namespace qz {

bool QSeries::is_zero_series() const
{
    for (const auto& c : c_)
        if (!is_zero(c))
            return false;
    return true;
}

QSeries QSeries::operator+(const QSeries& o) const
{
    QSeries r(std::min(order_, o.order_));
    for (int k = 0; k <= r.order_; ++k)
        r.c_[k] = c_[k] + o.c_[k];
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const
{
    QSeries r(std::min(order_, o.order_));
    for (int k = 0; k <= r.order_; ++k)
        r.c_[k] = c_[k] - o.c_[k];
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const
{
    QSeries r(std::min(order_, o.order_));
    for (int i = 0; i <= r.order_; ++i) {
        if (is_zero(c_[i]))
            continue;
        for (int j = 0; i + j <= r.order_; ++j) {
            if (is_zero(o.c_[j]))
                continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

QSeries QSeries::scaled(const Rational& c) const
{
    QSeries r(order_);
    for (int k = 0; k <= order_; ++k)
        r.c_[k] = c_[k] * c;
    return r;
}

QSeries QSeries::shifted(int deg, const Rational& c) const
{
    QSeries r(order_);
    for (int k = 0; k + deg <= order_; ++k)
        r.c_[k + deg] = c_[k] * c;
    return r;
}

QSeries QSeries::inverse() const
{
    if (is_zero(c_[0]))
        throw NonUnitSeries("series has zero constant coefficient");
    QSeries r(order_);
    Rational inv0 = Rational(1) / c_[0];
    r.c_[0] = inv0;
    for (int k = 1; k <= order_; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j)
            acc += c_[j] * r.c_[k - j];
        r.c_[k] = -acc * inv0;
    }
    return r;
}

QSeries series_invert(const QSeries& x) { return x.inverse(); }

QSeries series_from_poly(const LaurentPoly& x, const std::map<Var, Term>& params, int Q)
{
    QSeries r(Q);
    for (const auto& [m, c] : x.terms()) {
        Rational coef = c;
        long qdeg = m[Var::q];
        for (int i = 0; i < kNumVars; ++i) {
            Var v = static_cast<Var>(i);
            if (v == Var::q || m.e[i] == 0)
                continue;
            auto it = params.find(v);
            if (it == params.end())
                throw NegativeExponent(std::string("variable ") + kVarNames[i] +
                                       " not assigned in series_from_poly");
            const Term& val = it->second;
            for (int j = 0; j < kNumVars; ++j)
                if (j != static_cast<int>(Var::q) && val.mono.e[j] != 0)
                    throw NegativeExponent("series assignments must be monomials in q");
            if (is_zero(val.coef)) {
                if (m.e[i] < 0)
                    throw NegativeExponent("zero assigned to negative exponent");
                coef = 0;
                break;
            }
            coef *= rat_pow(val.coef, m.e[i]);
            qdeg += static_cast<long>(val.mono[Var::q]) * m.e[i];
        }
        if (is_zero(coef))
            continue;
        if (qdeg < 0)
            throw NegativeExponent("negative q-exponent after substitution");
        if (qdeg <= Q)
            r[static_cast<int>(qdeg)] += coef;
    }
    return r;
}

QSeries poch_series(const Term& A, const Term& step, int len, int Q)
{
    for (int j = 0; j < kNumVars; ++j) {
        if (j == static_cast<int>(Var::q))
            continue;
        if (A.mono.e[j] != 0 || step.mono.e[j] != 0)
            throw NegativeExponent("poch_series arguments must be monomials in q");
    }
    int adeg = A.mono[Var::q];
    int sdeg = step.mono[Var::q];
    if (len < 0 && sdeg <= 0 && !is_zero(A.coef))
        throw DivergentSpec("infinite Pochhammer product needs a step of positive degree");

    QSeries out = QSeries::one(Q);
    Rational shift_coef(1);
    for (int j = 0; len < 0 || j < len; ++j) {
        long deg = adeg + static_cast<long>(sdeg) * j;
        Rational c = A.coef * shift_coef;
        shift_coef *= step.coef;
        if (is_zero(c))
            break;
        if (deg < 0)
            throw NegativeExponent("Pochhammer factor with negative q-degree in series regime");
        if (deg > Q) {
            if (len < 0)
                break; // remaining factors are 1 + O(q^{Q+1})
            continue;
        }
        QSeries factor = QSeries::one(Q);
        factor[static_cast<int>(deg)] -= c;
        out *= factor;
    }
    return out;
}

} // namespace qz
