#include "qz/zeta.hpp"

#include <functional>

namespace qz {

namespace {

const Monomial kZm = mono(Var::z);
const Monomial kTm = mono(Var::t);

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

// master specialization Z~_{m,n}(u -> t^{upow}, t -> eps*t, z)
LaurentPoly master_specialized(int m, int n, int upow, int eps)
{
    return master_poly(m, n).subst(
        {{Var::u, Term(Rational(1), kTm.pow(upow))}, {Var::t, Term(Rational(eps), kTm)}});
}

// the direct m-fold sums of the section-6 proposition: one of the four
// displays, selected by the numerator/denominator Pochhammer base
// (1 - sign * t^{tpow_inv} z^{j+1}) and the prefactor power t^{pref*(mn-sum)}
LaurentPoly nu_direct_sum(int m, int n, int pref, const Rational& sign, int tinv_pow)
{
    LaurentPoly acc;
    for_chains(m, n, [&](const std::vector<int>& c) {
        LaurentPoly term = qmultinom(n, chain_parts(n, c), kZm);
        for (int j = c.front(); j < n; ++j) {
            LaurentPoly f = LaurentPoly::one();
            f.add_term(kTm.pow(tinv_pow) * kZm.pow(j + 1), -sign);
            term *= f;
        }
        long tsum = static_cast<long>(pref) * (static_cast<long>(m) * n - isum(c));
        long zsum = -static_cast<long>(m) * n * n + isumsq(c);
        term = term.shifted(Term(
            Rational(1), mono(Var::t, static_cast<int>(tsum)) * mono(Var::z, static_cast<int>(zsum))));
        acc += term;
    });
    return acc;
}

LaurentPoly q_to_z(const LaurentPoly& p)
{
    return p.subst(Var::q, Term(Rational(1), mono(Var::z, -1)));
}

} // namespace

RationalFn solomon_zeta(int n, int e)
{
    LaurentPoly den = poch_poly(Term(Rational(1), kTm.pow(e)), Term(Rational(1), kZm.pow(e)), n);
    return RationalFn(LaurentPoly::one(), den);
}

LaurentPoly nu_tilde(const OrderId& order, int n)
{
    int m = order.m;
    LaurentPoly master = master_specialized(m, n, 1, order.epsilon());
    switch (order.kind) {
    case OrderKind::Split: {
        LaurentPoly direct = nu_direct_sum(m, n, 1, Rational(1), 0); // (z;z)_n/(z;z)_{n_1} tail
        if (!(master == direct))
            throw FormMismatch("nu_tilde split: master vs direct m-fold");
        break;
    }
    case OrderKind::Inert: {
        LaurentPoly direct = nu_direct_sum(m, n, 1, Rational(-1), 0); // (-z;z) tail
        if (!(master == direct))
            throw FormMismatch("nu_tilde inert: master vs direct m-fold");
        LaurentPoly psum;
        for (const auto& la : partitions_in_rectangle(m, n)) {
            LaurentPoly piece = hall_g(Partition::rectangle(m, n), la, mono(Var::q, 2));
            piece *= real_structure_count(la);
            psum += q_to_z(piece).shifted(Term(Rational(1), kTm.pow(la.size())));
        }
        if (!(master == psum))
            throw FormMismatch("nu_tilde inert: master vs partition sum");
        break;
    }
    case OrderKind::Ramified: {
        QFraction dag = ag_dagger(m, n, Term(Rational(1), kTm.pow(-1)), Var::z);
        LaurentPoly expect = dag.num.shifted(
            Term(Rational(1), mono(Var::t, m * n) * mono(Var::z, -m * n * n)));
        if (!dag.den.empty() || !(master == expect))
            throw FormMismatch("nu_tilde ramified: master vs dagger Andrews-Gordon route");
        break;
    }
    }
    return master;
}

LaurentPoly nu_order(const OrderId& order, int n)
{
    int m = order.m;
    LaurentPoly master = master_specialized(m, n, 2, order.epsilon());
    switch (order.kind) {
    case OrderKind::Split: {
        LaurentPoly direct = nu_direct_sum(m, n, 2, Rational(1), -1); // (t^{-1}z;z) tail
        if (!(master == direct))
            throw FormMismatch("nu_order split: master vs direct m-fold");
        break;
    }
    case OrderKind::Inert: {
        LaurentPoly direct = nu_direct_sum(m, n, 2, Rational(-1), -1);
        if (!(master == direct))
            throw FormMismatch("nu_order inert: master vs direct m-fold");
        // first explicit formula: double partition sum over la, mu in (m^n)
        LaurentPoly dsum;
        Partition rect = Partition::rectangle(m, n);
        auto box = partitions_in_rectangle(m, n);
        for (const auto& mu : box) {
            LaurentPoly common = poch_poly(Term(Rational(1), kTm.pow(2)),
                                           Term(Rational(1), mono(Var::q, 2)), mu.conj_part(1));
            common *= hall_g(rect, mu, mono(Var::q));
            for (const auto& la : box) {
                if (!la.contains(mu))
                    continue;
                LaurentPoly piece = common * B_count(m, n, la, mu);
                int tpow = m * n + la.size() - 2 * mu.size();
                dsum += q_to_z(piece).shifted(Term(Rational(1), kTm.pow(tpow)));
            }
        }
        if (!(master == dsum))
            throw FormMismatch("nu_order inert: master vs first explicit formula");
        break;
    }
    case OrderKind::Ramified: {
        QFraction ag = ag_finite(m, n, Term(Rational(1), kTm.pow(-1)), Var::z);
        LaurentPoly expect = ag.num.shifted(
            Term(Rational(1), mono(Var::t, 2 * m * n) * mono(Var::z, -m * n * n)));
        if (!ag.den.empty() || !(master == expect))
            throw FormMismatch("nu_order ramified: master vs Andrews-Gordon route");
        break;
    }
    }
    return master;
}

QFraction coh_zeta_finitized(const OrderId& order, int n)
{
    int m = order.m;
    QFraction sum;
    switch (order.kind) {
    case OrderKind::Ramified:
        sum = ag_finite(m, n, Term::var(Var::t), Var::z);
        break;
    case OrderKind::Split:
        sum = br_finite(BrVariant::Plain, m, n, Term(Rational(-1), kTm), Var::z);
        break;
    case OrderKind::Inert:
        sum = br_finite(BrVariant::Plain, m, n, Term::var(Var::t), Var::z);
        break;
    }
    return sum.div_bag(poch_bag(Term(Rational(1), kTm * kZm), kZm, n));
}

QFraction zeta_new_multisum(int m, int n)
{
    Term z2(Rational(1), kZm.pow(2));
    Term t2z2(Rational(1), kTm.pow(2) * kZm.pow(2));
    QFraction acc;
    for_chains(m, n, [&](const std::vector<int>& r) {
        LaurentPoly multinom = qmultinom(n, chain_parts(n, r), kZm);
        std::vector<int> s(static_cast<std::size_t>(m));
        std::function<void(int, int)> rec = [&](int depth, int low) {
            if (depth == m) {
                long ssum = isum(s);
                long zexp = 0;
                for (int i = 0; i < m; ++i) {
                    long ri = r[static_cast<std::size_t>(i)], si = s[static_cast<std::size_t>(i)];
                    zexp += ri * ri - ri * si + si * si;
                }
                int r1 = r.front(), s1 = s.front();
                TermBuilder tb;
                tb.mul_mono(kTm.pow(static_cast<int>(2 * isum(r) - ssum)) *
                            kZm.pow(static_cast<int>(zexp)));
                tb.mul_poly(multinom);
                // (-z;z)_{r_1} / (-z;z)_{s_1}
                tb.mul_num_bag(poch_bag(Term(Rational(-1), kZm.pow(s1 + 1)), kZm, r1 - s1));
                for (int i = m - 1; i >= 1; --i)
                    tb.mul_poly(qbinom(r[static_cast<std::size_t>(i)] - s[static_cast<std::size_t>(i - 1)],
                                       r[static_cast<std::size_t>(i)] - s[static_cast<std::size_t>(i)],
                                       kZm));
                tb.mul_poly(qbinom(r1, r1 - s1, kZm));
                tb.div_den_bag(poch_bag(t2z2, z2, r1));
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

QFraction split_multisum(int m, int n)
{
    Term zq = Term::var(Var::z);
    Term tz(Rational(1), kTm * kZm);
    QFraction acc;
    for_chains(m, n, [&](const std::vector<int>& r) {
        LaurentPoly multinom = qmultinom(n, chain_parts(n, r), kZm);
        std::vector<int> s(static_cast<std::size_t>(m));
        std::function<void(int, int)> rec = [&](int depth, int low) {
            if (depth == m) {
                long ssum = isum(s);
                long zexp = 0;
                for (int i = 0; i < m; ++i) {
                    long ri = r[static_cast<std::size_t>(i)], si = s[static_cast<std::size_t>(i)];
                    zexp += ri * ri - ri * si + si * si;
                }
                int r1 = r.front(), s1 = s.front();
                TermBuilder tb;
                tb.mul_mono(kTm.pow(static_cast<int>(2 * isum(r) - ssum)) *
                            kZm.pow(static_cast<int>(zexp)));
                tb.mul_poly(multinom);
                tb.mul_num_bag(poch_bag(zq, kZm, r1)); // re-multiply the (z;z)_{r_1} the multinomial ate
                for (int i = m - 1; i >= 1; --i)
                    tb.mul_poly(qbinom(r[static_cast<std::size_t>(i)] - s[static_cast<std::size_t>(i - 1)],
                                       r[static_cast<std::size_t>(i)] - s[static_cast<std::size_t>(i)],
                                       kZm));
                tb.mul_poly(qbinom(r1, r1 - s1, kZm));
                FactorBag den = poch_bag(tz, kZm, r1).plus(poch_bag(tz, kZm, r1));
                den = den.plus(poch_bag(zq, kZm, s1));
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

bool geo_reflection_holds(const OrderId& order, int n)
{
    int m = order.m;
    LaurentPoly nu = nu_order(order, n);
    LaurentPoly reflected =
        nu.subst(Var::t, Term(Rational(1), kTm.pow(-1) * kZm.pow(n)))
            .shifted(Term(Rational(1), mono(Var::t, 2 * m * n) * mono(Var::z, -m * n * n)));
    return nu == reflected;
}

bool fine_reflection_holds(const OrderId& order, int n)
{
    int m = order.m;
    Rational eps(order.epsilon());
    LaurentPoly lhs = master_poly(m, n).subst(Var::t, Term(eps, kTm));
    LaurentPoly rhs = master_poly(m, n).subst(
        {{Var::u, Term(Rational(1), mono(Var::u, -1) * kZm.pow(2 * n))},
         {Var::t, Term(eps, mono(Var::u, -1) * kTm * kZm.pow(n))}});
    rhs = rhs.shifted(Term(Rational(1), mono(Var::u, m * n) * mono(Var::z, -m * n * n)));
    return lhs == rhs;
}

bool hilb_quot_rank1_holds(const OrderId& order)
{
    LaurentPoly lhs = nu_order(order, 1);
    LaurentPoly rhs = nu_tilde(order, 1).subst(Var::z, Term(Rational(1), kTm.pow(-1) * kZm));
    return lhs == rhs;
}

bool ramified_rank_rule_holds(int m, int n)
{
    OrderId ram{OrderKind::Ramified, m};
    // the epsilon = 0 specialization must not involve the deformation slot
    LaurentPoly eps0 = master_poly(m, n).subst_const(Var::t, Rational(0));
    if (eps0.depends_on(Var::t))
        return false;
    return nu_order(ram, n) == nu_tilde(ram, n).subst(Var::t, Term(Rational(1), kTm.pow(2)));
}

SieveOutcome nu_cyclic_sieving(const OrderId& order, NuKind e, int n, int r)
{
    if (n % r != 0)
        throw UnknownIdentity("cyclic sieving requires r | n");
    int m = order.m;
    int upow = e == NuKind::OfNormalization ? 1 : 2;
    LaurentPoly nu = e == NuKind::OfNormalization ? nu_tilde(order, n) : nu_order(order, n);
    CycloPoly lhs = eval_cyclotomic(nu, Var::z, r);

    // closed form with u -> t^{upow} and the master t -> eps*t, so the
    // rank-1 side carries (eps t)^r
    LaurentPoly closed = sieve_closed_form(m, n, r).subst(
        {{Var::u, Term(Rational(1), kTm.pow(upow))}, {Var::t, Term(Rational(order.epsilon()), kTm)}});
    SieveOutcome out;
    out.pass = cyclo_equals_rational(lhs, closed);
    out.closed_form = closed.str();

    // the naive reading scales t inside nu_E(rs) first: eps * t^r
    LaurentPoly naive_base = sieve_closed_form(m, 1, 1).subst(
        {{Var::u, Term(Rational(1), kTm.pow(upow * r))},
         {Var::t, Term(Rational(order.epsilon()), kTm.pow(r))}});
    out.naive_form_agrees = cyclo_equals_rational(lhs, naive_base.pow(n / r));
    return out;
}

namespace {

// expand f as a t-power series to degree kmax; coefficients are z-Laurent
// polynomials. All denominator factors must have positive t-degree.
std::vector<LaurentPoly> t_expansion(const QFraction& f, int kmax)
{
    std::vector<LaurentPoly> rows(static_cast<std::size_t>(kmax) + 1);
    for (const auto& [mo, c] : f.num.terms()) {
        int td = mo[Var::t];
        if (td < 0)
            throw NegativeExponent("t-expansion of a Laurent numerator");
        if (td > kmax)
            continue;
        Monomial rest = mo;
        rest[Var::t] = 0;
        rows[static_cast<std::size_t>(td)].add_term(rest, c);
    }
    for (const auto& [factor, mult] : f.den.factors()) {
        int tb = factor.mono[Var::t];
        if (tb <= 0)
            throw NegativeExponent("t-expansion needs denominators with positive t-degree");
        Monomial zpart = factor.mono;
        zpart[Var::t] = 0;
        for (int rep = 0; rep < mult; ++rep) {
            std::vector<LaurentPoly> next(rows.size());
            // multiply by sum_j (c * z^a t^b)^j
            Rational cj(1);
            for (int j = 0; static_cast<long>(j) * tb <= kmax; ++j) {
                Monomial zj = zpart.pow(j);
                for (int k = 0; k + j * tb <= kmax; ++k)
                    next[static_cast<std::size_t>(k + j * tb)] +=
                        rows[static_cast<std::size_t>(k)].shifted(Term(cj, zj));
                cj *= factor.coef;
            }
            rows = std::move(next);
        }
    }
    return rows;
}

} // namespace

LaurentPoly coh_t_coefficient(const OrderId& order, int n, int k)
{
    return t_expansion(coh_zeta_finitized(order, n), k)[static_cast<std::size_t>(k)];
}

int coh_stabilization_witness(const OrderId& order, int k, int n_max)
{
    // The t^k coefficients converge z-adically, not as fixed polynomials
    // (for k = 1 the coefficient is z + ... + z^n). Stabilization is
    // witnessed modulo z^{k+1}, matching the z-degree reach of the t^k
    // layer of the limit.
    auto truncate_z = [k](const LaurentPoly& p) {
        LaurentPoly out;
        for (const auto& [m, c] : p.terms())
            if (m[Var::z] <= k)
                out.add_term(m, c);
        return out;
    };
    std::vector<LaurentPoly> coeffs;
    for (int n = 0; n <= n_max; ++n)
        coeffs.push_back(truncate_z(coh_t_coefficient(order, n, k)));
    int n0 = n_max;
    while (n0 > 0 && coeffs[static_cast<std::size_t>(n0 - 1)] == coeffs[static_cast<std::size_t>(n_max)])
        --n0;
    // at least two agreeing tail samples are needed to witness stabilization
    return n0 < n_max ? n0 : -1;
}

ZetaValue zeta_table(const std::string& what, const OrderId& order, int n, int kmax)
{
    ZetaValue out;
    out.label = what;
    out.order = order;
    out.n = n;
    if (what == "coh") {
        out.t_rows = t_expansion(coh_zeta_finitized(order, n), kmax);
        return out;
    }
    LaurentPoly nu = what == "nu-tilde" ? nu_tilde(order, n)
                     : what == "nu"     ? nu_order(order, n)
                                        : throw ConfigError("zeta table kind must be coh, nu or nu-tilde");
    out.t_rows = t_expansion(QFraction(nu), kmax);
    return out;
}

} // namespace qz
