#ifndef QZ_QFRACTION_HPP
#define QZ_QFRACTION_HPP

#include <map>

#include "qz/laurent.hpp"
#include "qz/qseries.hpp"

namespace qz {

// Binomial factor (1 - coef*mono), coef != 0. Every Pochhammer symbol in the
// formulas splits into such factors, so fractions can cancel on factor keys
// instead of doing polynomial gcds.
struct Factor {
    Monomial mono;
    Rational coef;

    bool operator==(const Factor& o) const { return mono == o.mono && coef == o.coef; }
    bool operator<(const Factor& o) const
    {
        if (mono != o.mono)
            return mono < o.mono;
        return cmp(coef, o.coef) < 0;
    }

    LaurentPoly to_poly() const
    {
        LaurentPoly p = LaurentPoly::one();
        p.add_term(mono, -coef);
        return p;
    }
    bool vanishes() const { return mono.is_one() && is_one(coef); } // factor == 0
};

// Multiset of factors with positive multiplicities.
class FactorBag {
  public:
    FactorBag() = default;

    void insert(const Factor& f, int mult = 1);
    const std::map<Factor, int>& factors() const { return m_; }
    bool empty() const { return m_.empty(); }
    bool contains_vanishing() const;

    FactorBag united_max(const FactorBag& o) const; // per-factor max (lcm)
    FactorBag minus(const FactorBag& o) const;      // per-factor difference, clamped at 0
    FactorBag plus(const FactorBag& o) const;

    // Cancel common factors between a numerator bag and this bag in place.
    static void cancel(FactorBag& num, FactorBag& den);

    LaurentPoly expand() const;
    Rational eval(const std::map<Var, Rational>& point) const;
    FactorBag subst(const std::map<Var, Term>& assignment) const;
    QSeries to_series(const std::map<Var, Term>& params, int Q) const;

    bool operator==(const FactorBag& o) const { return m_ == o.m_; }

  private:
    std::map<Factor, int> m_;
};

// (A; step)_len as a factor bag, len >= 0: factors (1 - A*step^j), 0 <= j < len.
FactorBag poch_bag(const Term& A, const Term& step, int len);
FactorBag poch_bag(const Term& A, const Monomial& step, int len);

// Fraction num / prod(den). Denominator kept factored; no gcd reduction.
struct QFraction {
    LaurentPoly num;
    FactorBag den;

    QFraction() : num(LaurentPoly::zero()) {}
    explicit QFraction(LaurentPoly n, FactorBag d = {}) : num(std::move(n)), den(std::move(d)) {}
    explicit QFraction(const Rational& c) : num(LaurentPoly(c)) {}

    static QFraction one() { return QFraction(LaurentPoly::one()); }

    QFraction operator+(const QFraction& o) const;
    QFraction operator-(const QFraction& o) const;
    QFraction operator*(const QFraction& o) const;
    QFraction& operator+=(const QFraction& o) { return *this = *this + o; }
    QFraction& operator*=(const QFraction& o) { return *this = *this * o; }

    QFraction mul_poly(const LaurentPoly& p) const;
    QFraction div_bag(const FactorBag& bag) const;
    QFraction mul_bag(const FactorBag& bag) const;

    QFraction subst(const std::map<Var, Term>& assignment) const;
    Rational eval(const std::map<Var, Rational>& point) const; // PoleAtPoint when den = 0

    RationalFn to_rational_fn() const { return RationalFn(num, den.expand()); }
    QSeries to_series(const std::map<Var, Term>& params, int Q) const;
};

bool qfrac_equal(const QFraction& x, const QFraction& y); // cross-multiplication

// Term builder used by the multisum implementations: accumulates scalar,
// monomial, numerator factors and denominator factors, cancelling factor
// keys before anything gets expanded.
class TermBuilder {
  public:
    TermBuilder() : scalar_(1) {}

    TermBuilder& mul_scalar(const Rational& c)
    {
        scalar_ *= c;
        return *this;
    }
    TermBuilder& mul_term(const Term& t)
    {
        scalar_ *= t.coef;
        mono_ = mono_ * t.mono;
        return *this;
    }
    TermBuilder& mul_mono(const Monomial& m)
    {
        mono_ = mono_ * m;
        return *this;
    }
    TermBuilder& mul_poly(const LaurentPoly& p)
    {
        polys_.push_back(p);
        return *this;
    }
    TermBuilder& mul_num_bag(const FactorBag& b);
    TermBuilder& div_den_bag(const FactorBag& b);

    bool is_zero() const { return is_zero_; }
    // Finish: cancel, expand numerator, return fraction.
    QFraction build() const;

  private:
    Rational scalar_;
    Monomial mono_;
    std::vector<LaurentPoly> polys_;
    FactorBag num_;
    FactorBag den_;
    bool is_zero_ = false;
};

} // namespace qz

#endif
