#ifndef QZ_MONOMIAL_HPP
#define QZ_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <string>

#include "qz/rational.hpp"

namespace qz {

// Fixed variable universe. z is an independent symbol; the translation
// z = q^{-1} is always an explicit substitution, never implicit.
enum class Var : int { q = 0, z = 1, t = 2, u = 3, a = 4 };

constexpr int kNumVars = 5;
constexpr std::array<char, kNumVars> kVarNames = {'q', 'z', 't', 'u', 'a'};

// Laurent monomial: exponent vector over {q,z,t,u,a}, negative allowed.
struct Monomial {
    std::array<int, kNumVars> e{};

    int operator[](Var v) const { return e[static_cast<int>(v)]; }
    int& operator[](Var v) { return e[static_cast<int>(v)]; }

    bool is_one() const
    {
        for (int x : e)
            if (x != 0)
                return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const
    {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i)
            r.e[i] = e[i] + o.e[i];
        return r;
    }

    Monomial operator/(const Monomial& o) const
    {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i)
            r.e[i] = e[i] - o.e[i];
        return r;
    }

    Monomial pow(int k) const
    {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i)
            r.e[i] = e[i] * k;
        return r;
    }

    auto operator<=>(const Monomial& o) const = default;

    std::string str() const;
};

inline Monomial mono_one() { return Monomial{}; }

inline Monomial mono(Var v, int exp = 1)
{
    Monomial m;
    m[v] = exp;
    return m;
}

// Scalar-times-monomial, e.g. the "A" of a Pochhammer symbol or a
// substitution target q |-> c*m.
struct Term {
    Rational coef;
    Monomial mono;

    Term() : coef(0) {}
    Term(Rational c, Monomial m) : coef(std::move(c)), mono(m) {}

    static Term constant(const Rational& c) { return Term(c, mono_one()); }
    static Term var(Var v, int exp = 1) { return Term(Rational(1), qz::mono(v, exp)); }

    Term operator*(const Term& o) const { return Term(coef * o.coef, mono * o.mono); }

    Term pow(int k) const
    {
        if (k >= 0 && is_zero(coef))
            return k == 0 ? Term(Rational(1), mono_one()) : Term(Rational(0), mono_one());
        return Term(rat_pow(coef, k), mono.pow(k));
    }
};

inline std::string Monomial::str() const
{
    std::string s;
    for (int i = 0; i < kNumVars; ++i) {
        if (e[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += kVarNames[i];
        if (e[i] != 1) {
            s += '^';
            s += std::to_string(e[i]);
        }
    }
    return s.empty() ? "1" : s;
}

} // namespace qz

#endif
