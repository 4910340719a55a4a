#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qz/cyclotomic.hpp"
#include "qz/qkit.hpp"

using namespace qz;

namespace {
const Monomial kQ = mono(Var::q);
}

TEST_CASE("pochhammer basics")
{
    Term t = Term::var(Var::t), q = Term::var(Var::q);
    LaurentPoly p = poch_poly(t * q, q, 2); // (tq;q)_2 = (1-tq)(1-tq^2)
    LaurentPoly expect = LaurentPoly::one();
    expect.add_term(mono(Var::t) * mono(Var::q), Rational(-1));
    LaurentPoly f2 = LaurentPoly::one();
    f2.add_term(mono(Var::t) * mono(Var::q, 2), Rational(-1));
    CHECK(p == expect * f2);

    CHECK(poch_poly(Term::var(Var::a), q, 0) == LaurentPoly::one());

    // negative length convention: 1/(q^2;q^2)_{-1} = 0
    PochValue pv = pochhammer(Term(Rational(1), kQ.pow(2)), Term(Rational(1), kQ.pow(2)), -1);
    CHECK(pv.reciprocal_zero);

    // a nonvanishing negative-length value: (tq;q)_{-1} = 1/(1-t)
    PochValue pv2 = pochhammer(Term(Rational(1), mono(Var::t) * kQ), Term::var(Var::q), -1);
    CHECK_FALSE(pv2.reciprocal_zero);
    LaurentPoly omt = LaurentPoly::one();
    omt.add_term(mono(Var::t), Rational(-1));
    CHECK(rf_equal(pv2.value.to_rational_fn(), RationalFn(LaurentPoly::one(), omt)));
}

TEST_CASE("q-binomials")
{
    LaurentPoly b = qbinom(4, 2);
    CHECK(b.eval({{Var::q, Rational(2)}}) == Rational(35));
    CHECK(b.coeff(mono(Var::q, 2)) == Rational(2));
    CHECK(qbinom(5, 0) == LaurentPoly::one());
    CHECK(qbinom(2, 3) == LaurentPoly::zero());

    // symmetry and both Pascal recurrences up to N = 12
    for (int N = 1; N <= 12; ++N)
        for (int M = 0; M <= N; ++M) {
            CHECK(qbinom(N, M) == qbinom(N, N - M));
            LaurentPoly lhs = qbinom(N, M);
            LaurentPoly r1 = qbinom(N - 1, M - 1) +
                             qbinom(N - 1, M).shifted(Term(Rational(1), mono(Var::q, M)));
            LaurentPoly r2 = qbinom(N - 1, M - 1).shifted(Term(Rational(1), mono(Var::q, N - M))) +
                             qbinom(N - 1, M);
            CHECK(lhs == r1);
            CHECK(lhs == r2);
        }

    // against the Pochhammer-quotient route (exercises exact_div)
    Term q = Term::var(Var::q);
    for (int N = 0; N <= 8; ++N)
        for (int M = 0; M <= N; ++M) {
            LaurentPoly quotient =
                exact_div(poch_poly(q, q, N), poch_poly(q, q, M) * poch_poly(q, q, N - M));
            CHECK(quotient == qbinom(N, M));
        }
}

TEST_CASE("q-multinomials")
{
    CHECK(qmultinom(2, {1, 1}) == qbinom(2, 1));
    CHECK(qmultinom(3, {3}) == LaurentPoly::one());
    CHECK(qmultinom(4, {2, 1, 1}).eval({{Var::q, Rational(1)}}) == Rational(12));
    CHECK_THROWS_AS(qmultinom(4, {2, 1}), InvalidComposition);

    CHECK(qmultinom_at_root(4, {2, 2}, 2) == Rational(2));
    CHECK(qmultinom_at_root(4, {3, 1}, 2) == Rational(0));
    CHECK(qmultinom_at_root(3, {3}, 3) == Rational(1));
}

TEST_CASE("q-multinomial agrees with cyclotomic evaluation")
{
    for (int N = 1; N <= 8; ++N)
        for (int r = 1; r <= N; ++r) {
            if (N % r)
                continue;
            // a representative spread of compositions
            std::vector<std::vector<int>> comps = {{N}, {N - 1, 1}};
            if (N >= 2)
                comps.push_back({N / 2, N - N / 2});
            if (N >= 3)
                comps.push_back({N - 2, 1, 1});
            if (N >= 4)
                comps.push_back({N / 2, N / 4 + (N % 4 ? N % 4 : 0), N - N / 2 - (N / 4 + (N % 4 ? N % 4 : 0))});
            for (auto& parts : comps) {
                int sum = 0;
                bool ok = true;
                for (int p : parts) {
                    sum += p;
                    ok = ok && p >= 0;
                }
                if (sum != N || !ok)
                    continue;
                CycloPoly ev = eval_cyclotomic(qmultinom(N, parts), Var::q, r);
                CHECK(cyclo_equals_rational(ev, LaurentPoly(qmultinom_at_root(N, parts, r))));
            }
        }
}

TEST_CASE("phi series")
{
    // empty upper and lower with argument 0 is 1
    QSeries one = phi_eval({{}, {}, Term::constant(Rational(0))}, 10);
    CHECK(one == QSeries::one(10));

    // 1phi0(q^2; -; q, q) = (q^3;q)_inf / (q;q)_inf
    int Q = 25;
    QSeries lhs = phi_eval({{Term(Rational(1), kQ.pow(2))}, {}, Term::var(Var::q)}, Q);
    QSeries rhs = poch_series(Term(Rational(1), kQ.pow(3)), Term::var(Var::q), -1, Q) *
                  poch_series(Term::var(Var::q), Term::var(Var::q), -1, Q).inverse();
    CHECK(lhs == rhs);
}

TEST_CASE("classical identity suite")
{
    for (const auto& id : classical_identity_ids())
        for (int k = 0; k < classical_point_count(id); ++k) {
            CAPTURE(id);
            CAPTURE(k);
            CHECK(verify_classical(id, k, 30).pass);
        }
    CHECK_THROWS_AS(verify_classical("no-such-identity", 0, 10), UnknownIdentity);
}

TEST_CASE("bailey pairs")
{
    for (const auto& pair :
         {bailey_pair_andrews_gordon(), bailey_pair_bressoud_dagger(), bailey_pair_trivial()}) {
        std::string note;
        CAPTURE(pair.name);
        CHECK(bailey_relation_holds(pair, 6, &note));
    }
}
