#ifndef QZ_CYCLOTOMIC_HPP
#define QZ_CYCLOTOMIC_HPP

#include <map>
#include <vector>

#include "qz/laurent.hpp"

namespace qz {

// Element of Q(zeta_r), stored as a polynomial in zeta_r of degree < phi(r),
// reduced modulo the r-th cyclotomic polynomial.
class CyclotomicElt {
  public:
    explicit CyclotomicElt(int r);
    CyclotomicElt(int r, const Rational& c);

    int root_order() const { return r_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    static CyclotomicElt zeta_power(int r, long k); // zeta_r^k, any integer k

    bool is_zero_elt() const;
    bool is_rational() const;
    Rational rational_value() const; // requires is_rational()

    CyclotomicElt operator+(const CyclotomicElt& o) const;
    CyclotomicElt operator-(const CyclotomicElt& o) const;
    CyclotomicElt operator*(const CyclotomicElt& o) const;
    CyclotomicElt scaled(const Rational& c) const;
    bool operator==(const CyclotomicElt& o) const { return r_ == o.r_ && c_ == o.c_; }

  private:
    int r_;
    std::vector<Rational> c_; // length phi(r)
};

// phi(r) and the r-th cyclotomic polynomial coefficients (constant first).
int euler_phi(int r);
const std::vector<Rational>& cyclotomic_polynomial(int r);

// Laurent polynomial with cyclotomic coefficients; keys never involve the
// evaluated variable.
using CycloPoly = std::map<Monomial, CyclotomicElt>;

// Substitute var -> zeta_r (exponents reduced mod r first), other variables
// stay symbolic.
CycloPoly eval_cyclotomic(const LaurentPoly& x, Var var, int r);

// True iff every coefficient lies in Q and equals the matching coefficient
// of the rational polynomial y.
bool cyclo_equals_rational(const CycloPoly& x, const LaurentPoly& y);

} // namespace qz

#endif
