#ifndef QZ_LAURENT_HPP
#define QZ_LAURENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qz/monomial.hpp"

namespace qz {

// Sparse multivariate Laurent polynomial over exact rationals.
// Invariant: no zero coefficients stored, so equality is map equality.
class LaurentPoly {
  public:
    using TermMap = std::map<Monomial, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c)
    {
        if (!is_zero(c))
            terms_[mono_one()] = c;
    }
    explicit LaurentPoly(const Term& t)
    {
        if (!is_zero(t.coef))
            terms_[t.mono] = t.coef;
    }

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(Rational(1)); }
    static LaurentPoly variable(Var v, int exp = 1) { return LaurentPoly(Term::var(v, exp)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }
    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_coeff() const { return coeff(mono_one()); }

    void add_term(const Monomial& m, const Rational& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly shifted(const Term& t) const; // multiply by c*mono
    LaurentPoly pow(int k) const;             // k >= 0

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    // Exponent range of a variable over the support; [0,0] when absent.
    std::pair<int, int> exponent_range(Var v) const;
    bool depends_on(Var v) const;

    // Simultaneous substitution v -> coef*mono for the listed variables.
    // Each substitution coefficient must be nonzero when the variable occurs
    // with a negative exponent.
    LaurentPoly subst(const std::map<Var, Term>& assignment) const;
    LaurentPoly subst(Var v, const Term& value) const { return subst(std::map<Var, Term>{{v, value}}); }
    // v -> rational constant; zero allowed only if all exponents of v are >= 0.
    LaurentPoly subst_const(Var v, const Rational& value) const;

    // Full evaluation at a rational point (every occurring variable assigned).
    Rational eval(const std::map<Var, Rational>& point) const;

    // Sum of coefficients (evaluation at all-ones).
    Rational coeff_sum() const;

    std::string str() const;

  private:
    TermMap terms_;
};

LaurentPoly operator*(const Rational& c, const LaurentPoly& p);

// Exact division in the Laurent ring; throws NonExactDivision if y does not
// divide x. Signals a formula transcription bug, never a data error.
LaurentPoly exact_div(const LaurentPoly& x, const LaurentPoly& y);

// Rational function as an unreduced fraction. Equality is decided by
// cross-multiplication; gcd normalization is deliberately avoided.
struct RationalFn {
    LaurentPoly num;
    LaurentPoly den;

    RationalFn() : num(LaurentPoly::zero()), den(LaurentPoly::one()) {}
    RationalFn(LaurentPoly n, LaurentPoly d);

    static RationalFn from_poly(const LaurentPoly& p) { return RationalFn(p, LaurentPoly::one()); }

    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator/(const RationalFn& o) const;

    RationalFn subst(const std::map<Var, Term>& assignment) const;

    Rational eval(const std::map<Var, Rational>& point) const; // PoleAtPoint on zero denominator
};

bool rf_equal(const RationalFn& x, const RationalFn& y);

} // namespace qz

#endif
