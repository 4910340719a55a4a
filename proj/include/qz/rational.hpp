#ifndef QZ_RATIONAL_HPP
#define QZ_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "qz/errors.hpp"

namespace qz {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// r^e for integer e; negative e requires r != 0.
inline Rational rat_pow(const Rational& r, long e)
{
    if (e == 0)
        return Rational(1);
    if (is_zero(r)) {
        if (e > 0)
            return Rational(0);
        throw PoleAtPoint("0 raised to negative power");
    }
    Rational base = e > 0 ? r : Rational(1) / r;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational out(1);
    while (k) {
        if (k & 1)
            out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

} // namespace qz

#endif
