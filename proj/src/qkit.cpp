#include "qz/qkit.hpp"

#include <map>

namespace qz {

LaurentPoly poch_poly(const Term& A, const Term& step, int len)
{
    LaurentPoly out = LaurentPoly::one();
    Term cur = A;
    for (int j = 0; j < len; ++j) {
        LaurentPoly factor = LaurentPoly::one();
        factor.add_term(cur.mono, -cur.coef);
        out *= factor;
        cur = cur * step;
    }
    return out;
}

PochValue pochhammer(const Term& A, const Term& step, int len)
{
    PochValue out;
    if (len >= 0) {
        out.value = QFraction(poch_poly(A, step, len));
        return out;
    }
    // (a; q)_{-n} = 1 / ((a q^{-n}; q)_n)
    int n = -len;
    Term cur = A * step.pow(-n);
    FactorBag bag;
    for (int j = 0; j < n; ++j) {
        Factor f{cur.mono, cur.coef};
        if (f.vanishes()) {
            out.reciprocal_zero = true;
            return out;
        }
        if (!is_zero(cur.coef))
            bag.insert(f);
        cur = cur * step;
    }
    out.value = QFraction(LaurentPoly::one(), bag);
    return out;
}

LaurentPoly qbinom(int N, int M, const Monomial& step)
{
    if (M < 0 || M > N || N < 0)
        return LaurentPoly::zero();
    M = std::min(M, N - M);
    // q-Pascal: [n,m] = [n-1,m-1] + x^m [n-1,m]
    std::vector<LaurentPoly> row{LaurentPoly::one()};
    for (int n = 1; n <= N; ++n) {
        int top = std::min(n, M);
        std::vector<LaurentPoly> next(static_cast<std::size_t>(top) + 1);
        next[0] = LaurentPoly::one();
        for (int m = 1; m <= top; ++m) {
            LaurentPoly v = row[static_cast<std::size_t>(m - 1)];
            if (m < static_cast<int>(row.size()))
                v += row[static_cast<std::size_t>(m)].shifted(Term(Rational(1), step.pow(m)));
            next[static_cast<std::size_t>(m)] = std::move(v);
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(M)];
}

LaurentPoly qmultinom(int N, const std::vector<int>& parts, const Monomial& step)
{
    long sum = 0;
    for (int p : parts) {
        if (p < 0)
            throw InvalidComposition("negative part in q-multinomial");
        sum += p;
    }
    if (sum != N)
        throw InvalidComposition("parts do not sum to N");
    LaurentPoly out = LaurentPoly::one();
    int rem = N;
    for (int p : parts) {
        out *= qbinom(rem, p, step);
        rem -= p;
    }
    return out;
}

Rational qmultinom_at_root(int N, const std::vector<int>& parts, int r)
{
    long sum = 0;
    for (int p : parts)
        sum += p;
    if (sum != N)
        throw InvalidComposition("parts do not sum to N");
    for (int p : parts)
        if (p % r != 0)
            return Rational(0);
    Integer acc(1);
    int rem = N / r;
    for (int p : parts) {
        int k = p / r;
        for (int j = 0; j < k; ++j) {
            acc *= rem - j;
            acc /= j + 1; // binomial partial products stay integral
        }
        rem -= k;
    }
    return Rational(acc);
}

// ---- phi series -------------------------------------------------------------

namespace {

void require_q_monomial(const Term& t, const char* what)
{
    for (int i = 0; i < kNumVars; ++i)
        if (i != static_cast<int>(Var::q) && t.mono.e[i] != 0)
            throw DivergentSpec(std::string(what) + " must be a monomial in q");
}

} // namespace

QSeries phi_eval(const PhiSeriesSpec& spec, int Q)
{
    for (const auto& t : spec.upper)
        require_q_monomial(t, "upper parameter");
    for (const auto& t : spec.lower)
        require_q_monomial(t, "lower parameter");
    require_q_monomial(spec.argument, "argument");

    const int r = static_cast<int>(spec.upper.size());
    const int s = static_cast<int>(spec.lower.size());
    const int sgnpow = s - r + 1;
    const int argdeg = spec.argument.mono[Var::q];

    // An upper parameter q^{-N} terminates the sum at n = N.
    std::optional<int> term_n;
    for (const auto& A : spec.upper) {
        int e = A.mono[Var::q];
        if (is_one(A.coef) && e < 0)
            term_n = term_n ? std::min(*term_n, -e) : -e;
    }

    if (term_n) {
        // Exact mode: individual summands are Laurent in q; only the total is
        // a power series.
        QFraction acc;
        Monomial qm = mono(Var::q);
        for (int n = 0; n <= *term_n; ++n) {
            TermBuilder tb;
            tb.mul_term(spec.argument.pow(n));
            if (sgnpow != 0) {
                Term extra(rat_pow(Rational(-1), static_cast<long>(n) * sgnpow),
                           mono(Var::q, sgnpow * (n * (n - 1) / 2)));
                tb.mul_term(extra);
            }
            for (const auto& A : spec.upper)
                tb.mul_poly(poch_poly(A, Term::var(Var::q), n));
            tb.div_den_bag(poch_bag(Term::var(Var::q), qm, n));
            for (const auto& B : spec.lower)
                tb.div_den_bag(poch_bag(B, qm, n));
            acc += tb.build();
        }
        return acc.to_series({}, Q);
    }

    for (const auto& A : spec.upper)
        if (A.mono[Var::q] < 0)
            throw DivergentSpec("negative-degree upper parameter without termination");
    if (argdeg < 1 && sgnpow < 1)
        throw DivergentSpec("term degrees do not grow: sum does not truncate");

    QSeries acc = QSeries::zero(Q);
    QSeries upper_prod = QSeries::one(Q);
    QSeries lower_prod = QSeries::one(Q);
    Rational arg_pow(1);
    for (int n = 0;; ++n) {
        long mindeg = static_cast<long>(argdeg) * n + static_cast<long>(sgnpow) * n * (n - 1) / 2;
        if (mindeg > Q)
            break;
        if (mindeg < 0)
            throw NegativeExponent("phi term of negative degree in series regime");
        if (n > 0) {
            // extend (A;q)_{n-1} -> (A;q)_n and the denominator likewise
            for (const auto& A : spec.upper) {
                long d = A.mono[Var::q] + (n - 1);
                QSeries f = QSeries::one(Q);
                if (d <= Q)
                    f[static_cast<int>(d)] -= A.coef;
                upper_prod *= f;
            }
            {
                QSeries f = QSeries::one(Q);
                if (n <= Q)
                    f[n] -= 1;
                lower_prod *= f;
            }
            for (const auto& B : spec.lower) {
                long d = B.mono[Var::q] + (n - 1);
                QSeries f = QSeries::one(Q);
                if (d >= 0 && d <= Q)
                    f[static_cast<int>(d)] -= B.coef;
                else if (d < 0)
                    throw DivergentSpec("lower parameter with negative degree");
                lower_prod *= f;
            }
            arg_pow *= spec.argument.coef;
        }
        QSeries term = upper_prod * lower_prod.inverse();
        long shift = mindeg;
        Rational c = arg_pow;
        if (sgnpow != 0 && (static_cast<long>(n) * sgnpow) % 2 != 0)
            c = -c;
        acc += term.shifted(static_cast<int>(shift), c);
    }
    return acc;
}

// ---- Bailey pairs -----------------------------------------------------------

namespace {

const Monomial kQ = mono(Var::q);
const Monomial kT = mono(Var::t);

QFraction bailey_rhs(const BaileyPair& pair, int n)
{
    Term aq = pair.rel_param * Term::var(Var::q);
    QFraction acc;
    for (int k = 0; k <= n; ++k) {
        QFraction term = pair.alpha(k);
        FactorBag den = poch_bag(Term::var(Var::q), kQ, n - k).plus(poch_bag(aq, kQ, n + k));
        acc += term.div_bag(den);
    }
    return acc;
}

} // namespace

BaileyPair bailey_pair_andrews_gordon()
{
    BaileyPair p;
    p.name = "andrews-gordon";
    p.rel_param = Term::var(Var::t);
    p.alpha = [](int k) {
        TermBuilder tb;
        tb.mul_scalar(rat_pow(Rational(-1), k));
        tb.mul_mono(mono(Var::q, k * (k - 1) / 2));
        FactorBag num = poch_bag(Term::var(Var::t), kQ, k);
        num.insert(Factor{kT * kQ.pow(2 * k), Rational(1)}); // (1 - t q^{2k})
        tb.mul_num_bag(num);
        FactorBag den = poch_bag(Term::var(Var::q), kQ, k);
        den.insert(Factor{kT, Rational(1)}); // (1 - t)
        tb.div_den_bag(den);
        return tb.build();
    };
    p.beta = [](int k) { return k == 0 ? QFraction::one() : QFraction(); };
    return p;
}

BaileyPair bailey_pair_bressoud_dagger()
{
    BaileyPair p;
    p.name = "bressoud-dagger";
    p.rel_param = Term::var(Var::t);
    Term q2(Rational(1), kQ.pow(2));
    p.alpha = [q2](int k) {
        TermBuilder tb;
        tb.mul_scalar(rat_pow(Rational(-1), k));
        tb.mul_mono(mono(Var::q, k * k));
        FactorBag num;
        num.insert(Factor{kT * kQ.pow(2 * k), Rational(1)});
        if (k >= 1) {
            // (t^2;q^2)_k / (1-t) = (1+t)(t^2 q^2; q^2)_{k-1}
            num.insert(Factor{kT, Rational(-1)});
            num = num.plus(poch_bag(Term(Rational(1), kT.pow(2) * kQ.pow(2)), q2, k - 1));
            tb.mul_num_bag(num);
        } else {
            tb.mul_num_bag(num);
            FactorBag one_minus_t;
            one_minus_t.insert(Factor{kT, Rational(1)});
            tb.div_den_bag(one_minus_t);
        }
        tb.div_den_bag(poch_bag(q2, q2, k));
        return tb.build();
    };
    p.beta = [q2](int k) {
        return QFraction(LaurentPoly::one(), poch_bag(q2, q2, k));
    };
    return p;
}

BaileyPair bailey_pair_trivial()
{
    BaileyPair p;
    p.name = "trivial";
    p.rel_param = Term(Rational(-1), kT);
    p.alpha = [](int k) { return k == 0 ? QFraction::one() : QFraction(); };
    p.beta = [](int k) {
        FactorBag den = poch_bag(Term::var(Var::q), kQ, k);
        den = den.plus(poch_bag(Term(Rational(-1), kT * kQ), kQ, k));
        return QFraction(LaurentPoly::one(), den);
    };
    return p;
}

bool bailey_relation_holds(const BaileyPair& pair, int n_max, std::string* detail)
{
    for (int n = 0; n <= n_max; ++n) {
        QFraction lhs = pair.beta(n);
        QFraction rhs = bailey_rhs(pair, n);
        if (!qfrac_equal(lhs, rhs)) {
            if (detail)
                *detail = "relation fails at n = " + std::to_string(n);
            return false;
        }
    }
    if (detail)
        *detail = "convention: standard Bailey relation";
    return true;
}

// ---- classical identities ---------------------------------------------------

namespace {

struct ClassicalPoint {
    std::map<char, Term> p; // named parameters a,b,c,d,e,z and N
    int N = 0;
};

Term qp(int e, long c = 1, long cd = 1) { return Term(rat(c, cd), mono(Var::q, e)); }

const std::map<std::string, std::vector<ClassicalPoint>>& classical_points()
{
    static const std::map<std::string, std::vector<ClassicalPoint>> pts = [] {
        std::map<std::string, std::vector<ClassicalPoint>> m;
        m["q-binomial-theorem"] = {
            {{{'a', qp(1)}, {'z', qp(1)}}},      {{{'a', qp(2)}, {'z', qp(1)}}},
            {{{'a', qp(1)}, {'z', qp(2)}}},      {{{'a', qp(3)}, {'z', qp(2)}}},
            {{{'a', qp(2, 2)}, {'z', qp(3)}}},   {{{'a', qp(2, 1, 2)}, {'z', qp(1)}}},
        };
        m["q-gauss"] = {
            {{{'a', qp(1)}, {'b', qp(2)}, {'c', qp(5)}}}, {{{'a', qp(1)}, {'b', qp(1)}, {'c', qp(3)}}},
            {{{'a', qp(1)}, {'b', qp(2)}, {'c', qp(4)}}}, {{{'a', qp(2)}, {'b', qp(2)}, {'c', qp(5)}}},
            {{{'a', qp(2, 2)}, {'b', qp(1)}, {'c', qp(5)}}}, {{{'a', qp(1)}, {'b', qp(3)}, {'c', qp(6)}}},
        };
        m["q-chu-vandermonde-1"] = {
            {{{'a', qp(1)}, {'c', qp(3)}}, 2}, {{{'a', qp(2)}, {'c', qp(3)}}, 2},
            {{{'a', qp(1)}, {'c', qp(2)}}, 3}, {{{'a', qp(2)}, {'c', qp(4)}}, 1},
            {{{'a', qp(2)}, {'c', qp(3)}}, 4}, {{{'a', qp(1, 2)}, {'c', qp(2)}}, 2},
        };
        m["q-chu-vandermonde-2"] = {
            {{{'a', qp(1)}, {'c', qp(3)}}, 2}, {{{'a', qp(2)}, {'c', qp(5)}}, 3},
            {{{'a', qp(1)}, {'c', qp(4)}}, 4}, {{{'a', qp(2)}, {'c', qp(3)}}, 1},
            {{{'a', qp(3)}, {'c', qp(7)}}, 5}, {{{'a', qp(1, 3)}, {'c', qp(2)}}, 2},
        };
        m["heine-1"] = {
            {{{'a', qp(1)}, {'b', qp(2)}, {'c', qp(4)}, {'z', qp(3)}}},
            {{{'a', qp(1)}, {'b', qp(1)}, {'c', qp(3)}, {'z', qp(2)}}},
            {{{'a', qp(2)}, {'b', qp(2)}, {'c', qp(5)}, {'z', qp(1)}}},
            {{{'a', qp(1)}, {'b', qp(3)}, {'c', qp(4)}, {'z', qp(2)}}},
            {{{'a', qp(2)}, {'b', qp(1)}, {'c', qp(4)}, {'z', qp(3)}}},
        };
        m["heine-2"] = {
            {{{'a', qp(1)}, {'b', qp(1)}, {'c', qp(3)}, {'z', qp(2)}}},
            {{{'a', qp(1)}, {'b', qp(2)}, {'c', qp(4)}, {'z', qp(2)}}},
            {{{'a', qp(2)}, {'b', qp(1)}, {'c', qp(4)}, {'z', qp(3)}}},
            {{{'a', qp(1)}, {'b', qp(1)}, {'c', qp(4)}, {'z', qp(3)}}},
            {{{'a', qp(2)}, {'b', qp(2)}, {'c', qp(5)}, {'z', qp(2)}}},
        };
        m["heine-3"] = {
            {{{'a', qp(1)}, {'b', qp(1)}, {'c', qp(3)}, {'z', qp(3)}}},
            {{{'a', qp(1)}, {'b', qp(2)}, {'c', qp(3)}, {'z', qp(2)}}},
            {{{'a', qp(2)}, {'b', qp(1)}, {'c', qp(4)}, {'z', qp(2)}}},
            {{{'a', qp(1)}, {'b', qp(1)}, {'c', qp(2)}, {'z', qp(3)}}},
            {{{'a', qp(2)}, {'b', qp(2)}, {'c', qp(5)}, {'z', qp(3)}}},
        };
        m["3phi2-iii9"] = {
            {{{'a', qp(1)}, {'b', qp(1)}, {'c', qp(2)}, {'d', qp(4)}, {'e', qp(4)}}},
            {{{'a', qp(1)}, {'b', qp(1)}, {'c', qp(1)}, {'d', qp(3)}, {'e', qp(3)}}},
            {{{'a', qp(1)}, {'b', qp(2)}, {'c', qp(2)}, {'d', qp(5)}, {'e', qp(4)}}},
            {{{'a', qp(2)}, {'b', qp(1)}, {'c', qp(1)}, {'d', qp(4)}, {'e', qp(4)}}},
            {{{'a', qp(1)}, {'b', qp(1)}, {'c', qp(2)}, {'d', qp(3)}, {'e', qp(5)}}},
        };
        return m;
    }();
    return pts;
}

Term tdiv(const Term& x, const Term& y) { return Term(x.coef / y.coef, x.mono / y.mono); }

QSeries inf_poch(const Term& A, int Q) { return poch_series(A, Term::var(Var::q), -1, Q); }

} // namespace

std::vector<std::string> classical_identity_ids()
{
    std::vector<std::string> ids;
    for (const auto& [id, pts] : classical_points())
        ids.push_back(id);
    return ids;
}

int classical_point_count(const std::string& id)
{
    auto it = classical_points().find(id);
    if (it == classical_points().end())
        throw UnknownIdentity(id);
    return static_cast<int>(it->second.size());
}

SeriesComparison verify_classical(const std::string& id, int point_index, int Q)
{
    auto it = classical_points().find(id);
    if (it == classical_points().end())
        throw UnknownIdentity(id);
    const auto& pt = it->second.at(static_cast<std::size_t>(point_index));
    auto P = [&pt](char name) { return pt.p.at(name); };

    QSeries lhs = QSeries::zero(Q), rhs = QSeries::zero(Q);
    if (id == "q-binomial-theorem") {
        lhs = phi_eval({{P('a')}, {}, P('z')}, Q);
        rhs = inf_poch(P('a') * P('z'), Q) * inf_poch(P('z'), Q).inverse();
    } else if (id == "q-gauss") {
        Term arg = tdiv(P('c'), P('a') * P('b'));
        lhs = phi_eval({{P('a'), P('b')}, {P('c')}, arg}, Q);
        rhs = inf_poch(tdiv(P('c'), P('a')), Q) * inf_poch(tdiv(P('c'), P('b')), Q) *
              (inf_poch(P('c'), Q) * inf_poch(arg, Q)).inverse();
    } else if (id == "q-chu-vandermonde-1" || id == "q-chu-vandermonde-2") {
        int N = pt.N;
        Term qminusN = qp(-N);
        bool second = id.back() == '2';
        Term arg = second ? qp(1) : tdiv(P('c'), P('a')) * qp(N);
        lhs = phi_eval({{P('a'), qminusN}, {P('c')}, arg}, Q);
        TermBuilder tb;
        if (second)
            tb.mul_term(P('a').pow(N));
        tb.mul_poly(poch_poly(tdiv(P('c'), P('a')), Term::var(Var::q), N));
        tb.div_den_bag(poch_bag(P('c'), mono(Var::q), N));
        rhs = tb.build().to_series({}, Q);
    } else if (id == "heine-1") {
        lhs = phi_eval({{P('a'), P('b')}, {P('c')}, P('z')}, Q);
        rhs = inf_poch(P('b'), Q) * inf_poch(P('a') * P('z'), Q) *
              (inf_poch(P('c'), Q) * inf_poch(P('z'), Q)).inverse() *
              phi_eval({{tdiv(P('c'), P('b')), P('z')}, {P('a') * P('z')}, P('b')}, Q);
    } else if (id == "heine-2") {
        lhs = phi_eval({{P('a'), P('b')}, {P('c')}, P('z')}, Q);
        rhs = inf_poch(tdiv(P('c'), P('b')), Q) * inf_poch(P('b') * P('z'), Q) *
              (inf_poch(P('c'), Q) * inf_poch(P('z'), Q)).inverse() *
              phi_eval({{tdiv(P('a') * P('b') * P('z'), P('c')), P('b')},
                        {P('b') * P('z')},
                        tdiv(P('c'), P('b'))},
                       Q);
    } else if (id == "heine-3") {
        Term abz_c = tdiv(P('a') * P('b') * P('z'), P('c'));
        lhs = phi_eval({{P('a'), P('b')}, {P('c')}, P('z')}, Q);
        rhs = inf_poch(abz_c, Q) * inf_poch(P('z'), Q).inverse() *
              phi_eval({{tdiv(P('c'), P('a')), tdiv(P('c'), P('b'))}, {P('c')}, abz_c}, Q);
    } else if (id == "3phi2-iii9") {
        Term de_abc = tdiv(P('d') * P('e'), P('a') * P('b') * P('c'));
        Term de_bc = tdiv(P('d') * P('e'), P('b') * P('c'));
        Term e_a = tdiv(P('e'), P('a'));
        lhs = phi_eval({{P('a'), P('b'), P('c')}, {P('d'), P('e')}, de_abc}, Q);
        rhs = inf_poch(e_a, Q) * inf_poch(de_bc, Q) *
              (inf_poch(P('e'), Q) * inf_poch(de_abc, Q)).inverse() *
              phi_eval({{P('a'), tdiv(P('d'), P('b')), tdiv(P('d'), P('c'))}, {P('d'), de_bc}, e_a},
                       Q);
    } else {
        throw UnknownIdentity(id);
    }
    return SeriesComparison{lhs == rhs, lhs, rhs};
}

} // namespace qz
