#include "qz/rrsums.hpp"

#include <functional>
#include <mutex>

namespace qz {

namespace {

const Monomial kQm = mono(Var::q);

// chains 0 <= c[0] <= ... <= c[m-1] <= cap
void for_chains(int m, int cap, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> cur(static_cast<std::size_t>(m));
    std::function<void(int, int)> rec = [&](int depth, int low) {
        if (depth == m) {
            f(cur);
            return;
        }
        for (int v = low; v <= cap; ++v) {
            cur[static_cast<std::size_t>(depth)] = v;
            rec(depth + 1, v);
        }
    };
    rec(0, 0);
}

// denominator composition [n-c_m, c_m-c_{m-1}, ..., c_2-c_1, c_1]
std::vector<int> chain_parts(int n, const std::vector<int>& c)
{
    std::vector<int> parts{n - c.back()};
    for (int i = static_cast<int>(c.size()) - 1; i >= 1; --i)
        parts.push_back(c[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(i - 1)]);
    parts.push_back(c.front());
    return parts;
}

long isum(const std::vector<int>& c)
{
    long s = 0;
    for (int x : c)
        s += x;
    return s;
}

long isumsq(const std::vector<int>& c)
{
    long s = 0;
    for (int x : c)
        s += static_cast<long>(x) * x;
    return s;
}

void require_q_monomial_param(const Term& t, const char* what)
{
    for (int i = 0; i < kNumVars; ++i)
        if (i != static_cast<int>(Var::q) && t.mono.e[i] != 0)
            throw DivergentSpec(std::string(what) + " must be a monomial in q");
    if (is_zero(t.coef) || t.mono[Var::q] < 1)
        throw DivergentSpec(std::string(what) + " must have positive q-degree");
}

// prod_{j=0}^{len-1} (a - t q^j) as a q-series: the polynomial form of
// a^len (a^{-1} t; q)_len used whenever a has larger degree than t.
QSeries folded_poch_series(const Term& a_q, const Term& t_q, int len, int Q)
{
    QSeries out = QSeries::one(Q);
    for (int j = 0; j < len; ++j) {
        QSeries f = QSeries::zero(Q);
        int da = a_q.mono[Var::q];
        long dt = t_q.mono[Var::q] + j;
        if (da >= 0 && da <= Q)
            f[da] += a_q.coef;
        if (dt >= 0 && dt <= Q)
            f[static_cast<int>(dt)] -= t_q.coef;
        out *= f;
    }
    return out;
}

QSeries finite_poch_inv(const Term& A, int len, int Q)
{
    return poch_series(A, Term::var(Var::q), len, Q).inverse();
}

} // namespace

// ---- Andrews-Gordon / Bressoud sums ------------------------------------------

QFraction ag_finite(int m, int n, const Term& t_assign, Var base)
{
    Monomial b = mono(base);
    QFraction acc;
    for_chains(m, n, [&](const std::vector<int>& c) {
        TermBuilder tb;
        tb.mul_term(t_assign.pow(static_cast<int>(2 * isum(c))));
        tb.mul_mono(mono(base, static_cast<int>(isumsq(c))));
        tb.mul_poly(qmultinom(n, chain_parts(n, c), b));
        acc += tb.build();
    });
    return acc;
}

QFraction ag_dagger(int m, int n, const Term& t_assign, Var base)
{
    Monomial b = mono(base);
    QFraction acc;
    for_chains(m, n, [&](const std::vector<int>& c) {
        TermBuilder tb;
        tb.mul_term(t_assign.pow(static_cast<int>(isum(c))));
        tb.mul_mono(mono(base, static_cast<int>(isumsq(c))));
        tb.mul_poly(qmultinom(n, chain_parts(n, c), b));
        acc += tb.build();
    });
    return acc;
}

QFraction br_finite(BrVariant v, int m, int n, const Term& t_assign, Var base)
{
    Monomial b = mono(base);
    Term bq = Term::var(base);
    QFraction acc;
    for_chains(m, n, [&](const std::vector<int>& c) {
        TermBuilder tb;
        int n1 = c.front();
        switch (v) {
        case BrVariant::Plain:
            tb.mul_term(t_assign.pow(static_cast<int>(2 * isum(c))));
            tb.div_den_bag(poch_bag(Term(-t_assign.coef, t_assign.mono) * bq, b, n1));
            break;
        case BrVariant::Dagger:
            tb.mul_term(t_assign.pow(static_cast<int>(isum(c))));
            tb.div_den_bag(poch_bag(Term(Rational(-1), b), b, n1)); // (-q;q)_{n_1}
            break;
        case BrVariant::DoubleDagger:
            tb.mul_term(Term(-t_assign.coef, t_assign.mono).pow(static_cast<int>(isum(c))));
            tb.div_den_bag(poch_bag(Term(-t_assign.coef, t_assign.mono) * bq, b, n1));
            break;
        }
        tb.mul_mono(mono(base, static_cast<int>(isumsq(c))));
        tb.mul_poly(qmultinom(n, chain_parts(n, c), b));
        acc += tb.build();
    });
    return acc;
}

QFraction single_sum(SingleSumVariant v, int m, int n)
{
    Term q = Term::var(Var::q);
    Term t = Term::var(Var::t);
    Term tq = t * q;
    Monomial tm = mono(Var::t);
    FactorBag qn = poch_bag(q, kQm, n);
    QFraction acc;
    for (int r = 0; r <= n; ++r) {
        TermBuilder tb;
        tb.mul_scalar(rat_pow(Rational(-1), r));
        FactorBag num = qn;
        num.insert(Factor{tm * kQm.pow(2 * r), Rational(1)}); // (1 - t q^{2r})
        FactorBag den = poch_bag(tq, kQm, n + r);
        den = den.plus(poch_bag(q, kQm, n - r));
        if (v == SingleSumVariant::AGSingle) {
            tb.mul_mono(mono(Var::t, (m + 1) * r) * mono(Var::q, r * (r - 1) / 2 + (m + 1) * r * r));
            num = num.plus(poch_bag(t, kQm, r)); // (t;q)_r; cancels the (1-t) below
            den.insert(Factor{tm, Rational(1)});
            den = den.plus(poch_bag(q, kQm, r));
        } else {
            tb.mul_mono(mono(Var::t, m * r) * mono(Var::q, (m + 1) * r * r));
            if (r >= 1) {
                num.insert(Factor{tm, Rational(-1)}); // (1+t)
                num = num.plus(
                    poch_bag(Term(Rational(1), tm.pow(2) * kQm.pow(2)), Term(Rational(1), kQm.pow(2)), r - 1));
            } else {
                den.insert(Factor{tm, Rational(1)});
            }
            den = den.plus(poch_bag(Term(Rational(1), kQm.pow(2)), Term(Rational(1), kQm.pow(2)), r));
        }
        tb.mul_num_bag(num);
        tb.div_den_bag(den);
        acc += tb.build();
    }
    return acc;
}

// ---- the ghost-parameter multisum ---------------------------------------------

QFraction x_multisum(int m, int N, const Term& a_assign, const Term& t_assign, Var base)
{
    Monomial b = mono(base);
    Term bq = Term::var(base);
    QFraction acc;
    for_chains(m, N, [&](const std::vector<int>& r) {
        // s-chain: 0 <= s_1 <= ... <= s_m with s_i <= r_i
        std::vector<int> s(static_cast<std::size_t>(m));
        std::function<void(int, int)> rec = [&](int depth, int low) {
            if (depth == m) {
                long ssum = isum(s);
                long qexp = 0;
                for (int i = 0; i < m; ++i) {
                    long ri = r[static_cast<std::size_t>(i)], si = s[static_cast<std::size_t>(i)];
                    qexp += ri * ri - ri * si + si * si;
                }
                TermBuilder tb;
                tb.mul_term(a_assign.pow(static_cast<int>(ssum)));
                tb.mul_term(t_assign.pow(static_cast<int>(2 * isum(r) - ssum)));
                tb.mul_mono(mono(base, static_cast<int>(qexp)));
                int r1 = r.front(), s1 = s.front();
                // (aq)_{r_1}/(aq)_{s_1} and (atq)_N/(atq)_{r_1}
                tb.mul_num_bag(poch_bag(a_assign * Term(Rational(1), b.pow(s1 + 1)), b, r1 - s1));
                tb.mul_num_bag(
                    poch_bag(a_assign * t_assign * Term(Rational(1), b.pow(r1 + 1)), b, N - r1));
                for (int i = m - 1; i >= 1; --i)
                    tb.mul_poly(qbinom(r[static_cast<std::size_t>(i)] - s[static_cast<std::size_t>(i - 1)],
                                       r[static_cast<std::size_t>(i)] - s[static_cast<std::size_t>(i)], b));
                tb.mul_poly(qbinom(r1, r1 - s1, b));
                FactorBag den = poch_bag(bq, b, N - r.back());
                for (int i = 1; i < m; ++i)
                    den = den.plus(poch_bag(bq, b,
                                            r[static_cast<std::size_t>(i)] - r[static_cast<std::size_t>(i - 1)]));
                den = den.plus(poch_bag(bq, b, r1));
                den = den.plus(poch_bag(t_assign * bq, b, r1));
                tb.div_den_bag(den);
                acc += tb.build();
                return;
            }
            for (int v = low; v <= r[static_cast<std::size_t>(depth)]; ++v) {
                s[static_cast<std::size_t>(depth)] = v;
                rec(depth + 1, v);
            }
        };
        rec(0, 0);
    });
    return acc;
}

QFraction x_closed(int m, int N, const Term& t_assign, Var base)
{
    Monomial b = mono(base);
    Term bq = Term::var(base);
    QFraction acc;
    for_chains(m, N, [&](const std::vector<int>& c) {
        TermBuilder tb;
        tb.mul_term(t_assign.pow(static_cast<int>(2 * isum(c))));
        tb.mul_mono(mono(base, static_cast<int>(isumsq(c))));
        FactorBag den = poch_bag(bq, b, N - c.back());
        for (int i = 1; i < m; ++i)
            den = den.plus(
                poch_bag(bq, b, c[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(i - 1)]));
        den = den.plus(poch_bag(bq, b, c.front()));
        den = den.plus(poch_bag(t_assign * bq, b, c.front()));
        tb.div_den_bag(den);
        acc += tb.build();
    });
    return acc;
}

// ---- series regime -------------------------------------------------------------

QSeries x_new_series(int m, int N, const Term& a_q, const Term& t_q, int Q)
{
    require_q_monomial_param(a_q, "a");
    require_q_monomial_param(t_q, "t");
    const int alpha = a_q.mono[Var::q], tau = t_q.mono[Var::q];
    Term q = Term::var(Var::q);
    Term t2q(t_q.coef * t_q.coef, t_q.mono.pow(2) * kQm);

    QSeries acc = QSeries::zero(Q);
    for_chains(m, N, [&](const std::vector<int>& u) {
        // u[0] <= ... <= u[m-1] <= N plays (u_1, ..., u_m)
        long ubase = (static_cast<long>(alpha) + tau) * isum(u) + isumsq(u);
        LaurentPoly ubinom = LaurentPoly::one();
        for (int i = m - 1; i >= 1; --i)
            ubinom *= qbinom(u[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(i - 1)], kQm);
        QSeries ufixed = series_from_poly(ubinom, {}, Q);
        ufixed *= finite_poch_inv(q, N - u.back(), Q);
        ufixed *= finite_poch_inv(q, u.back(), Q);
        ufixed *= finite_poch_inv(a_q * q, u.front(), Q);

        // v anti-chain v_1 >= v_2 >= ... >= v_m >= 0
        std::vector<int> v(static_cast<std::size_t>(m));
        std::function<void(int)> rec = [&](int depth) {
            if (depth == m) {
                long e = ubase;
                long v1 = v.front();
                e += -v1 * v1 + v1 + u.front() * v1 + v1 * v1;
                for (int i = 1; i < m; ++i) {
                    long vi = v[static_cast<std::size_t>(i)];
                    e += 2L * tau * vi + vi * vi + u[static_cast<std::size_t>(i)] * vi;
                }
                if (e > Q)
                    return;
                QSeries term = ufixed;
                Rational coef = rat_pow(a_q.coef, isum(u));
                long tpow = isum(u);
                for (int i = 1; i < m; ++i)
                    tpow += 2L * v[static_cast<std::size_t>(i)];
                coef *= rat_pow(t_q.coef, tpow);
                term *= poch_series(t_q, q, static_cast<int>(v1), Q);
                term *= folded_poch_series(a_q, t_q, static_cast<int>(v1), Q);
                for (int i = 1; i < m; ++i)
                    term *= series_from_poly(
                        qbinom(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)], kQm), {},
                        Q);
                term *= finite_poch_inv(t2q, N + v.back(), Q);
                term *= finite_poch_inv(q, static_cast<int>(v1), Q);
                acc += term.shifted(static_cast<int>(e), coef);
                return;
            }
            int hi;
            if (depth == 0) {
                // e grows by v_1 (1 + u_1) at the minimum
                hi = static_cast<int>(Q - ubase) / (1 + u.front());
                if (Q - ubase < 0)
                    hi = -1;
            } else {
                hi = v[static_cast<std::size_t>(depth - 1)];
            }
            for (int x = 0; x <= hi; ++x) {
                v[static_cast<std::size_t>(depth)] = x;
                rec(depth + 1);
            }
        };
        if (ubase <= Q)
            rec(0);
    });

    QSeries pref = poch_series(a_q * q, q, -1, Q);
    pref *= poch_series(t2q, q, -1, Q);
    pref *= poch_series(t_q * q, q, -1, Q).inverse();
    pref *= poch_series(a_q * t_q * Term(Rational(1), kQm.pow(N + 1)), q, -1, Q).inverse();
    return pref * acc;
}

QSeries v_multisum_series(int m, int N, const Term& a_q, const Term& t_q, int Q)
{
    require_q_monomial_param(a_q, "a");
    require_q_monomial_param(t_q, "t");
    const int alpha = a_q.mono[Var::q], tau = t_q.mono[Var::q];
    Term q = Term::var(Var::q);

    QSeries acc = QSeries::zero(Q);
    for_chains(m, N, [&](const std::vector<int>& u) {
        long ubase = (static_cast<long>(alpha) + tau) * isum(u) + isumsq(u);
        if (ubase > Q)
            return;
        LaurentPoly ubinom = LaurentPoly::one();
        for (int i = m - 1; i >= 1; --i)
            ubinom *= qbinom(u[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(i - 1)], kQm);
        QSeries ufixed = series_from_poly(ubinom, {}, Q);
        ufixed *= finite_poch_inv(q, N - u.back(), Q);
        ufixed *= finite_poch_inv(q, u.back(), Q);
        ufixed *= finite_poch_inv(a_q * q, u.front(), Q);

        std::vector<int> v(static_cast<std::size_t>(m));
        std::function<void(int)> rec = [&](int depth) {
            if (depth == m) {
                long e = ubase;
                long v1 = v.front();
                e += v1 + u.front() * v1;
                for (int i = 1; i < m; ++i) {
                    long vi = v[static_cast<std::size_t>(i)];
                    e += 2L * tau * vi + vi * vi + u[static_cast<std::size_t>(i)] * vi;
                }
                if (e > Q)
                    return;
                QSeries term = ufixed;
                Rational coef = rat_pow(a_q.coef, isum(u));
                long tpow = isum(u);
                for (int i = 1; i < m; ++i)
                    tpow += 2L * v[static_cast<std::size_t>(i)];
                coef *= rat_pow(t_q.coef, tpow);
                term *= poch_series(t_q, q, static_cast<int>(v1), Q);
                term *= folded_poch_series(a_q, t_q, static_cast<int>(v1), Q);
                for (int i = 1; i < m; ++i)
                    term *= series_from_poly(
                        qbinom(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)], kQm), {},
                        Q);
                term *= finite_poch_inv(q, static_cast<int>(v1), Q);
                acc += term.shifted(static_cast<int>(e), coef);
                return;
            }
            int hi = depth == 0 ? static_cast<int>((Q - ubase) / (1 + u.front()))
                                : v[static_cast<std::size_t>(depth - 1)];
            for (int x = 0; x <= hi; ++x) {
                v[static_cast<std::size_t>(depth)] = x;
                rec(depth + 1);
            }
        };
        rec(0);
    });
    return acc;
}

QSeries v_expression_series(int m, int N, const Term& a_q, const Term& t_q, int Q)
{
    require_q_monomial_param(a_q, "a");
    require_q_monomial_param(t_q, "t");
    const int tau = t_q.mono[Var::q];
    Term q = Term::var(Var::q);
    Term atq = a_q * t_q * q;

    QSeries acc = QSeries::zero(Q);
    int nm_cap = 0;
    while (static_cast<long>(tau) * (nm_cap + 1) + static_cast<long>(nm_cap + 1) * (nm_cap + 2) / 2 <= Q)
        ++nm_cap;
    for_chains(m, nm_cap, [&](const std::vector<int>& c) {
        int nm = c.back();
        long tpow = 2 * isum(c) - nm;
        long e = static_cast<long>(tau) * tpow - static_cast<long>(nm) * (nm - 1) / 2 + isumsq(c);
        if (e > Q || e < 0)
            return;
        Rational coef = rat_pow(t_q.coef, tpow);
        if (nm % 2)
            coef = -coef;
        QSeries term = poch_series(t_q, q, nm, Q);
        for (int i = m - 1; i >= 1; --i)
            term *= series_from_poly(
                qbinom(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i - 1)], kQm), {}, Q);
        term *= finite_poch_inv(q, nm, Q);
        term *= finite_poch_inv(atq, N + c.front(), Q);
        acc += term.shifted(static_cast<int>(e), coef);
    });
    QSeries pref = poch_series(atq, q, -1, Q);
    pref *= poch_series(a_q * q, q, -1, Q).inverse();
    pref *= finite_poch_inv(q, N, Q);
    return pref * acc;
}

QSeries v_recursion_rhs_series(int m, int N, const Term& a_q, const Term& t_q, int Q)
{
    require_q_monomial_param(a_q, "a");
    require_q_monomial_param(t_q, "t");
    const int alpha = a_q.mono[Var::q], tau = t_q.mono[Var::q];
    Term q = Term::var(Var::q);

    QSeries acc = QSeries::zero(Q);
    for (int u = 0; u <= N; ++u) {
        for (int v = 0;; ++v) {
            long e = static_cast<long>(alpha) * u + static_cast<long>(tau) * (u + 2L * (m - 1) * v) +
                     static_cast<long>(u) * u + static_cast<long>(u + 1) * v +
                     static_cast<long>(m - 1) * v * v + static_cast<long>(alpha) * 0;
            if (e > Q)
                break;
            Rational coef = rat_pow(a_q.coef, u) *
                            rat_pow(t_q.coef, u + 2L * (m - 1) * v);
            QSeries term = poch_series(t_q, q, v, Q);
            term *= folded_poch_series(a_q, t_q, v, Q);
            term *= finite_poch_inv(q, N - u, Q);
            term *= finite_poch_inv(q, v, Q);
            Term t_shift(t_q.coef, t_q.mono * kQm.pow(v));
            term *= v_multisum_series(m - 1, u, a_q, t_shift, Q);
            acc += term.shifted(static_cast<int>(e), coef);
        }
    }
    return acc;
}

QSeries x_exp2_series(int m, int N, const Term& t_q, int Q)
{
    require_q_monomial_param(t_q, "t");
    const int tau = t_q.mono[Var::q];
    Term q = Term::var(Var::q);
    Term t2q(t_q.coef * t_q.coef, t_q.mono.pow(2) * kQm);

    QSeries acc = QSeries::zero(Q);
    int nm_cap = 0;
    while (static_cast<long>(tau) * (nm_cap + 1) + static_cast<long>(nm_cap + 1) * (nm_cap + 2) / 2 <= Q)
        ++nm_cap;
    for_chains(m, nm_cap, [&](const std::vector<int>& c) {
        if (c.front() > N)
            return;
        int nm = c.back();
        long tpow = 2 * isum(c) - nm;
        long e = static_cast<long>(tau) * tpow - static_cast<long>(nm) * (nm - 1) / 2 + isumsq(c);
        if (e > Q || e < 0)
            return;
        Rational coef = rat_pow(t_q.coef, tpow);
        if (nm % 2)
            coef = -coef;
        QSeries term = poch_series(t_q, q, nm, Q);
        for (int i = m - 1; i >= 1; --i)
            term *= series_from_poly(
                qbinom(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i - 1)], kQm), {}, Q);
        term *= finite_poch_inv(t2q, N + c[1], Q);
        term *= finite_poch_inv(q, N - c.front(), Q);
        term *= finite_poch_inv(q, nm, Q);
        acc += term.shifted(static_cast<int>(e), coef);
    });
    QSeries pref = poch_series(t2q, q, -1, Q);
    pref *= poch_series(t_q * q, q, -1, Q).inverse();
    return pref * acc;
}

QSeries x_exp2_companion_lhs_series(int m, int N, const Term& t_q, int Q)
{
    require_q_monomial_param(t_q, "t");
    const int tau = t_q.mono[Var::q];
    Term q = Term::var(Var::q);
    Term t2q(t_q.coef * t_q.coef, t_q.mono.pow(2) * kQm);

    QSeries acc = QSeries::zero(Q);
    int nm_cap = 0;
    while (static_cast<long>(tau) * (nm_cap + 1) + static_cast<long>(nm_cap + 1) * (nm_cap + 2) / 2 <= Q)
        ++nm_cap;
    for_chains(m, nm_cap, [&](const std::vector<int>& c) {
        int nm = c.back();
        long tpow = 2 * isum(c) - nm;
        long e = static_cast<long>(tau) * tpow - static_cast<long>(nm) * (nm - 1) / 2 + isumsq(c);
        if (e > Q || e < 0)
            return;
        Rational coef = rat_pow(t_q.coef, tpow);
        if (nm % 2)
            coef = -coef;
        QSeries term = poch_series(t_q, q, nm, Q);
        for (int i = m - 1; i >= 1; --i)
            term *= series_from_poly(
                qbinom(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i - 1)], kQm), {}, Q);
        term *= finite_poch_inv(t2q, N + c.front(), Q);
        term *= finite_poch_inv(q, nm, Q);
        acc += term.shifted(static_cast<int>(e), coef);
    });
    return acc;
}

QSeries trans2_lhs_series(int M, int N, const Term& a_q, const Term& t_q, int Q)
{
    Term q = Term::var(Var::q);
    QSeries acc = QSeries::zero(Q);
    for (int n = 0; n <= N; ++n) {
        long e = static_cast<long>(2 * t_q.mono[Var::q]) * n + static_cast<long>(n) * n +
                 static_cast<long>(M) * n;
        if (e > Q)
            continue;
        QSeries term = poch_series(a_q * q, q, M + n, Q);
        term *= finite_poch_inv(q, N - n, Q);
        term *= finite_poch_inv(q, n, Q);
        term *= finite_poch_inv(t_q * q, M + n, Q);
        term *= finite_poch_inv(a_q * t_q * q, M + n, Q);
        acc += term.shifted(static_cast<int>(e), rat_pow(t_q.coef, 2L * n));
    }
    return acc;
}

QSeries trans2_rhs_series(int M, int N, const Term& a_q, const Term& t_q, int Q)
{
    Term q = Term::var(Var::q);
    Term t2q(t_q.coef * t_q.coef, t_q.mono.pow(2) * kQm);
    QSeries acc = QSeries::zero(Q);
    for (int n = 0; static_cast<long>(M + 1) * n <= Q; ++n) {
        long e = static_cast<long>(M + 1) * n;
        QSeries term = poch_series(t_q, q, n, Q);
        term *= folded_poch_series(a_q, t_q, n, Q);
        term *= finite_poch_inv(q, n, Q);
        term *= finite_poch_inv(t2q, M + N + n, Q);
        acc += term.shifted(static_cast<int>(e), Rational(1));
    }
    QSeries pref = poch_series(a_q * q, q, -1, Q);
    pref *= poch_series(t2q, q, -1, Q);
    pref *= poch_series(t_q * q, q, -1, Q).inverse();
    pref *= poch_series(a_q * t_q * q, q, -1, Q).inverse();
    pref *= finite_poch_inv(q, N, Q);
    return pref * acc;
}

// ---- central identities ----------------------------------------------------------

QSeries ag_infinite_sum_series(int m, int Q)
{
    Term q = Term::var(Var::q);
    QSeries acc = QSeries::zero(Q);
    int cap = 0;
    while ((cap + 1) * (cap + 1) <= Q)
        ++cap;
    for_chains(m, cap, [&](const std::vector<int>& c) {
        long e = isumsq(c);
        if (e > Q)
            return;
        QSeries term = QSeries::one(Q);
        for (int i = m - 1; i >= 1; --i)
            term *= finite_poch_inv(
                q, c[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(i - 1)], Q);
        term *= finite_poch_inv(q, c.front(), Q);
        acc += term.shifted(static_cast<int>(e), Rational(1));
    });
    return acc;
}

QSeries ag_infinite_product_series(int m, int Q)
{
    Term q = Term::var(Var::q);
    Term step(Rational(1), kQm.pow(2 * m + 3));
    QSeries out = poch_series(Term(Rational(1), kQm.pow(m + 1)), step, -1, Q);
    out *= poch_series(Term(Rational(1), kQm.pow(m + 2)), step, -1, Q);
    out *= poch_series(step, step, -1, Q);
    out *= poch_series(q, q, -1, Q).inverse();
    return out;
}

QSeries br_infinite_sum_series(int m, int Q)
{
    Term q = Term::var(Var::q);
    QSeries acc = QSeries::zero(Q);
    int cap = 0;
    while ((cap + 1) * (cap + 1) <= Q)
        ++cap;
    for_chains(m, cap, [&](const std::vector<int>& c) {
        long e = isumsq(c);
        if (e > Q)
            return;
        QSeries term = QSeries::one(Q);
        for (int i = m - 1; i >= 1; --i)
            term *= finite_poch_inv(
                q, c[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(i - 1)], Q);
        term *= finite_poch_inv(q, c.front(), Q);
        term *= poch_series(Term(Rational(-1), kQm), q, c.front(), Q).inverse();
        acc += term.shifted(static_cast<int>(e), Rational(1));
    });
    return acc;
}

QSeries br_infinite_product_series(int m, int Q)
{
    Term q = Term::var(Var::q);
    Term step(Rational(1), kQm.pow(2 * m + 2));
    QSeries half = poch_series(Term(Rational(1), kQm.pow(m + 1)), step, -1, Q);
    QSeries out = half * half;
    out *= poch_series(step, step, -1, Q);
    out *= poch_series(q, q, -1, Q).inverse();
    return out;
}

// ---- finite key identities ---------------------------------------------------------

namespace {

const Monomial kA = mono(Var::a);
const Monomial kT = mono(Var::t);

FactorBag q_poch(int len) { return poch_bag(Term::var(Var::q), kQm, len); }

} // namespace

QFraction x1_key_lhs(int N)
{
    QFraction acc;
    for (int u = 0; u <= N; ++u) {
        for (int v = 0; u + v <= N; ++v) {
            TermBuilder tb;
            tb.mul_scalar(rat_pow(Rational(-1), v));
            tb.mul_mono(kA.pow(u + v) * kT.pow(u + v) *
                        kQm.pow(u * u + u * v + v * (v + 1) / 2));
            tb.mul_num_bag(poch_bag(Term(Rational(1), kA.pow(-1) * kT), Term::var(Var::q), v));
            FactorBag den = q_poch(N - u - v).plus(q_poch(u)).plus(q_poch(v));
            den = den.plus(poch_bag(Term(Rational(1), kT * kQm), kQm, u + v));
            tb.div_den_bag(den);
            acc += tb.build();
        }
    }
    return acc;
}

QFraction induction_key_lhs(int N, int l1)
{
    QFraction acc;
    for (int u = 0; u <= N; ++u) {
        for (int v = 0; v <= l1; ++v) {
            TermBuilder tb;
            tb.mul_scalar(rat_pow(Rational(-1), v));
            tb.mul_mono(kA.pow(u + v) * kT.pow(u + v) *
                        kQm.pow(u * u + u * v + v * (v + 1) / 2));
            tb.mul_num_bag(poch_bag(Term(Rational(1), kA.pow(-1) * kT), Term::var(Var::q), v));
            FactorBag den = q_poch(N - u).plus(q_poch(l1 - v)).plus(q_poch(u)).plus(q_poch(v));
            den = den.plus(poch_bag(Term(Rational(1), kA * kT * kQm), kQm, l1 + u));
            tb.div_den_bag(den);
            acc += tb.build();
        }
    }
    return acc;
}

QFraction induction_key_rhs(int N, int l1)
{
    QFraction acc;
    for (int l0 = 0; l0 <= l1; ++l0) {
        TermBuilder tb;
        tb.mul_mono(kT.pow(2 * l0) * kQm.pow(l0 * l0));
        FactorBag den = q_poch(N).plus(q_poch(l1 - l0)).plus(q_poch(l0));
        den = den.plus(poch_bag(Term(Rational(1), kA * kT * kQm), kQm, N + l0));
        tb.div_den_bag(den);
        acc += tb.build();
    }
    return acc;
}

QFraction a_indep_key_lhs(int N, int l1)
{
    Term t2q(Rational(1), kT.pow(2) * kQm);
    FactorBag atqN = poch_bag(Term(Rational(1), kA * kT * kQm), kQm, N);
    QFraction acc;
    for (int u = 0; u <= N; ++u) {
        for (int v = 0; v <= l1; ++v) {
            TermBuilder tb;
            tb.mul_scalar(rat_pow(Rational(-1), v));
            tb.mul_mono(kA.pow(u + v) * kT.pow(u + v) *
                        kQm.pow(u * u + u * v + v * (v + 1) / 2));
            tb.mul_num_bag(atqN);
            tb.mul_num_bag(poch_bag(Term(Rational(1), kA.pow(-1) * kT), Term::var(Var::q), v));
            FactorBag den = q_poch(N - u).plus(q_poch(l1 - v)).plus(q_poch(u)).plus(q_poch(v));
            den = den.plus(poch_bag(t2q, kQm, N + v));
            den = den.plus(poch_bag(Term(Rational(1), kA * kT * kQm), kQm, l1 + u));
            tb.div_den_bag(den);
            acc += tb.build();
        }
    }
    return acc;
}

QFraction a_indep_key_rhs(int N, int l1)
{
    Term t2q(Rational(1), kT.pow(2) * kQm);
    QFraction acc;
    for (int l0 = 0; l0 <= std::min(N, l1); ++l0) {
        TermBuilder tb;
        tb.mul_mono(kT.pow(2 * l0) * kQm.pow(l0 * l0));
        FactorBag den = q_poch(N - l0).plus(q_poch(l1 - l0)).plus(q_poch(l0));
        den = den.plus(poch_bag(t2q, kQm, N + l1));
        tb.div_den_bag(den);
        acc += tb.build();
    }
    return acc;
}

QFraction z1z2_lhs(int L, int M)
{
    QFraction acc;
    for (int n = L; n <= M; ++n) {
        TermBuilder tb;
        tb.mul_scalar(rat_pow(Rational(-1), n));
        tb.mul_mono(kT.pow(n) * kA.pow(-n) * kQm.pow(n + n * (n - 1) / 2));
        tb.mul_num_bag(poch_bag(Term::var(Var::a), kQm, n));
        tb.div_den_bag(q_poch(M - n).plus(q_poch(n - L)));
        acc += tb.build();
    }
    return acc;
}

QFraction z1z2_rhs(int L, int M)
{
    Term binvtq(Rational(1), kA.pow(-1) * kT * kQm);
    QFraction acc;
    for (int n = L; n <= M; ++n) {
        TermBuilder tb;
        tb.mul_scalar(rat_pow(Rational(-1), L));
        tb.mul_mono(kA.pow(-L) * kT.pow(n) * kQm.pow(n * n - L * (L - 1) / 2));
        tb.mul_num_bag(poch_bag(Term::var(Var::a), kQm, L));
        tb.mul_num_bag(poch_bag(binvtq, kQm, M));
        FactorBag den = q_poch(M - n).plus(q_poch(n - L));
        den = den.plus(poch_bag(binvtq, kQm, n));
        tb.div_den_bag(den);
        acc += tb.build();
    }
    return acc;
}

// ---- master polynomial ----------------------------------------------------------------

namespace {

std::map<std::pair<int, int>, LaurentPoly> g_master_cache;
std::mutex g_master_mutex;

LaurentPoly build_master(int m, int n)
{
    Monomial zM = mono(Var::z);
    LaurentPoly acc;
    for_chains(m, n, [&](const std::vector<int>& c) {
        LaurentPoly term = qmultinom(n, chain_parts(n, c), zM);
        // (u^{-1} t z; z)_n / (u^{-1} t z; z)_{n_1}
        for (int j = c.front(); j < n; ++j) {
            LaurentPoly f = LaurentPoly::one();
            f.add_term(mono(Var::u, -1) * mono(Var::t) * mono(Var::z, j + 1), Rational(-1));
            term *= f;
        }
        long usum = static_cast<long>(m) * n - isum(c);
        long zsum = -static_cast<long>(m) * n * n + isumsq(c);
        term = term.shifted(
            Term(Rational(1), mono(Var::u, static_cast<int>(usum)) * mono(Var::z, static_cast<int>(zsum))));
        acc += term;
    });
    // integrality: the sum lies in Z[u, t, z^{-1}]
    for (const auto& [mm, cc] : acc.terms()) {
        bool ok = is_integer(cc) && mm[Var::u] >= 0 && mm[Var::t] >= 0 && mm[Var::z] <= 0 &&
                  mm[Var::q] == 0 && mm[Var::a] == 0;
        if (!ok)
            throw NonExactDivision("master polynomial left Z[u,t,z^{-1}]: " + mm.str());
    }
    return acc;
}

} // namespace

const LaurentPoly& master_poly(int m, int n)
{
    std::lock_guard<std::mutex> lock(g_master_mutex);
    auto key = std::make_pair(m, n);
    auto it = g_master_cache.find(key);
    if (it != g_master_cache.end())
        return it->second;
    return g_master_cache.emplace(key, build_master(m, n)).first->second;
}

bool master_reflection_holds(int m, int n)
{
    const LaurentPoly& Z = master_poly(m, n);
    LaurentPoly reflected = Z.subst({{Var::u, Term(Rational(1), mono(Var::u, -1) * mono(Var::z, 2 * n))},
                                     {Var::t, Term(Rational(1), mono(Var::u, -1) * mono(Var::t) *
                                                                    mono(Var::z, n))}});
    reflected = reflected.shifted(
        Term(Rational(1), mono(Var::u, m * n) * mono(Var::z, -m * n * n)));
    return Z == reflected;
}

LaurentPoly sieve_closed_form(int m, int n, int r)
{
    if (n % r != 0)
        throw UnknownIdentity("sieve requires r | n");
    LaurentPoly num = LaurentPoly::one();
    num.add_term(mono(Var::t, r), Rational(-1));
    num.add_term(mono(Var::u, m * r) * mono(Var::t, r), Rational(1));
    num.add_term(mono(Var::u, (m + 1) * r), Rational(-1));
    LaurentPoly den = LaurentPoly::one();
    den.add_term(mono(Var::u, r), Rational(-1));
    return exact_div(num.pow(n / r), den.pow(n / r));
}

bool sieve_closed_form_holds(int m, int n, int r, std::string* witness)
{
    CycloPoly lhs = eval_cyclotomic(master_poly(m, n), Var::z, r);
    LaurentPoly rhs = sieve_closed_form(m, n, r);
    bool ok = cyclo_equals_rational(lhs, rhs);
    if (witness)
        *witness = rhs.str();
    return ok;
}

bool master_parametrization_holds(const std::string& which, int m, int n)
{
    LaurentPoly Z = master_poly(m, n);
    Term q = Term::var(Var::q);
    Term zq = Term::var(Var::q); // z |-> q
    Monomial tinv = mono(Var::t, -1);
    auto prefactor = [&](int tpow, Rational sign = Rational(1)) {
        return Term(sign, mono(Var::t, tpow) * mono(Var::q, m * n * n));
    };

    if (which == "ag" || which == "ag-dagger") {
        LaurentPoly Z0 = Z.subst_const(Var::t, Rational(0));
        int upow = which == "ag" ? -2 : -1;
        LaurentPoly rhs = Z0.subst({{Var::z, zq}, {Var::u, Term(Rational(1), mono(Var::t, upow))}});
        rhs = rhs.shifted(prefactor(which == "ag" ? 2 * m * n : m * n));
        QFraction lhs = which == "ag" ? ag_finite(m, n) : ag_dagger(m, n);
        return qfrac_equal(lhs, QFraction(rhs));
    }
    if (which == "br") {
        LaurentPoly rhs = Z.subst({{Var::z, zq},
                                   {Var::u, Term(Rational(1), mono(Var::t, -2))},
                                   {Var::t, Term(Rational(-1), tinv)}});
        rhs = rhs.shifted(prefactor(2 * m * n));
        QFraction lhs = br_finite(BrVariant::Plain, m, n).mul_bag(
            poch_bag(Term(Rational(-1), mono(Var::t) * mono(Var::q)), kQm, n));
        return qfrac_equal(lhs, QFraction(rhs));
    }
    if (which == "br-dagger") {
        LaurentPoly rhs = Z.subst({{Var::z, zq},
                                   {Var::u, Term(Rational(1), tinv)},
                                   {Var::t, Term(Rational(-1), tinv)}});
        rhs = rhs.shifted(prefactor(m * n));
        QFraction lhs = br_finite(BrVariant::Dagger, m, n).mul_bag(
            poch_bag(Term(Rational(-1), mono(Var::q)), kQm, n));
        return qfrac_equal(lhs, QFraction(rhs));
    }
    if (which == "br-ddagger") {
        LaurentPoly rhs = Z.subst({{Var::z, zq},
                                   {Var::u, Term(Rational(-1), tinv)},
                                   {Var::t, Term::constant(Rational(1))}});
        rhs = rhs.shifted(prefactor(m * n, rat_pow(Rational(-1), static_cast<long>(m) * n)));
        QFraction lhs = br_finite(BrVariant::DoubleDagger, m, n).mul_bag(
            poch_bag(Term(Rational(-1), mono(Var::t) * mono(Var::q)), kQm, n));
        return qfrac_equal(lhs, QFraction(rhs));
    }
    throw UnknownIdentity("master parametrization: " + which);
}

} // namespace qz
