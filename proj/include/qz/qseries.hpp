#ifndef QZ_QSERIES_HPP
#define QZ_QSERIES_HPP

#include <vector>

#include "qz/laurent.hpp"

namespace qz {

// Power series in q truncated at a fixed order Q, exact rational coefficients.
// All operations silently discard degrees above Q.
class QSeries {
  public:
    explicit QSeries(int order) : order_(order), c_(static_cast<std::size_t>(order) + 1, Rational(0)) {}

    static QSeries zero(int order) { return QSeries(order); }
    static QSeries one(int order)
    {
        QSeries s(order);
        s.c_[0] = 1;
        return s;
    }
    static QSeries monomial(int order, int deg, const Rational& c = Rational(1))
    {
        QSeries s(order);
        if (deg >= 0 && deg <= order)
            s.c_[static_cast<std::size_t>(deg)] = c;
        return s;
    }

    int order() const { return order_; }
    const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    Rational& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero_series() const;

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }
    QSeries scaled(const Rational& c) const;

    // Multiply by c*q^deg (deg >= 0).
    QSeries shifted(int deg, const Rational& c = Rational(1)) const;

    // Multiplicative inverse; requires coeff at q^0 != 0 (NonUnitSeries).
    QSeries inverse() const;

    bool operator==(const QSeries& o) const { return order_ == o.order_ && c_ == o.c_; }

  private:
    int order_;
    std::vector<Rational> c_;
};

// Substitute every non-q variable by c*q^e and truncate at Q. All resulting
// q-exponents must be nonnegative (NegativeExponent otherwise).
QSeries series_from_poly(const LaurentPoly& x, const std::map<Var, Term>& params, int Q);

QSeries series_invert(const QSeries& x);

// (A; step)_len as a truncated series. A and step are monomials in q
// (c*q^e); step must have positive degree when len is unbounded.
// len = -1 means the infinite product.
QSeries poch_series(const Term& A, const Term& step, int len, int Q);

} // namespace qz

#endif
