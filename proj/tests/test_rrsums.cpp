#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qz/rrsums.hpp"

using namespace qz;

namespace {

const Monomial kQ = mono(Var::q);
const Monomial kT = mono(Var::t);

// test-side oracle: number of partitions of n with parts allowed by pred
std::vector<long> partition_counts(int nmax, const std::function<bool(int)>& pred)
{
    std::vector<long> dp(static_cast<std::size_t>(nmax) + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= nmax; ++part) {
        if (!pred(part))
            continue;
        for (int s = part; s <= nmax; ++s)
            dp[static_cast<std::size_t>(s)] += dp[static_cast<std::size_t>(s - part)];
    }
    return dp;
}

} // namespace

TEST_CASE("Andrews-Gordon sums")
{
    CHECK(qfrac_equal(ag_finite(2, 0), QFraction::one()));

    // AG_1^{(5)}(t,q) = 1 + t^2 q
    QFraction ag11 = ag_finite(1, 1);
    LaurentPoly expect = LaurentPoly::one();
    expect.add_term(kT.pow(2) * kQ, Rational(1));
    CHECK(qfrac_equal(ag11, QFraction(expect)));

    // reflection AG_n = t^{2mn} q^{mn^2} AG_n(1/(t q^n), q) at (m,n) = (2,3)
    int m = 2, n = 3;
    QFraction ag = ag_finite(m, n);
    QFraction refl = ag.subst({{Var::t, Term(Rational(1), kT.pow(-1) * kQ.pow(-n))}})
                         .mul_poly(LaurentPoly(
                             Term(Rational(1), mono(Var::t, 2 * m * n) * mono(Var::q, m * n * n))));
    CHECK(qfrac_equal(ag, refl));
}

TEST_CASE("infinite sum sides against the partition oracle")
{
    // m = 1: parts congruent to 1 or 4 mod 5
    QSeries rr = ag_infinite_sum_series(1, 10);
    auto dp = partition_counts(10, [](int p) { return p % 5 == 1 || p % 5 == 4; });
    for (int k = 0; k <= 10; ++k)
        CHECK(rr[k] == Rational(dp[static_cast<std::size_t>(k)]));

    // m = 2: parts not congruent to 0, +-3 mod 7
    QSeries ag7 = ag_infinite_sum_series(2, 12);
    auto dp7 = partition_counts(12, [](int p) { return p % 7 != 0 && p % 7 != 3 && p % 7 != 4; });
    for (int k = 0; k <= 12; ++k)
        CHECK(ag7[k] == Rational(dp7[static_cast<std::size_t>(k)]));

    CHECK(ag_infinite_sum_series(1, 25) == ag_infinite_product_series(1, 25));
    CHECK(br_infinite_sum_series(1, 25) == br_infinite_product_series(1, 25));
}

TEST_CASE("Bressoud sums")
{
    CHECK(qfrac_equal(br_finite(BrVariant::Plain, 3, 0), QFraction::one()));

    // ddagger variant collapses to 1/(-tq;q)_n at (m,n) = (2,3)
    QFraction dd = br_finite(BrVariant::DoubleDagger, 2, 3);
    QFraction closed(LaurentPoly::one(), poch_bag(Term(Rational(-1), kT * kQ), kQ, 3));
    CHECK(qfrac_equal(dd, closed));

    // Br_1^{(4)}(t,q) = (1 + tq + t^2 q)/(1 + tq)
    QFraction br11 = br_finite(BrVariant::Plain, 1, 1);
    LaurentPoly num = LaurentPoly::one();
    num.add_term(kT * kQ, Rational(1));
    num.add_term(kT.pow(2) * kQ, Rational(1));
    LaurentPoly den = LaurentPoly::one();
    den.add_term(kT * kQ, Rational(1));
    CHECK(rf_equal(br11.to_rational_fn(), RationalFn(num, den)));
}

TEST_CASE("single-sum forms of the dagger deformations")
{
    for (int m = 1; m <= 3; ++m)
        for (int n = 0; n <= 4; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(qfrac_equal(single_sum(SingleSumVariant::AGSingle, m, n), ag_dagger(m, n)));
            CHECK(qfrac_equal(single_sum(SingleSumVariant::BrDaggerSingle, m, n),
                              br_finite(BrVariant::Dagger, m, n)));
        }
}

TEST_CASE("ghost-parameter sum")
{
    CHECK(qfrac_equal(x_multisum(2, 0, Term::var(Var::a), Term::var(Var::t)), QFraction::one()));

    // anchor value 32/15 for several a
    for (long av : {0L, 1L, -1L, 2L}) {
        QFraction x = x_multisum(1, 1, Term::constant(Rational(av)), Term::var(Var::t));
        CHECK(x.eval({{Var::q, rat(1, 2)}, {Var::t, rat(1, 3)}}) == rat(32, 15));
    }
    {
        QFraction x = x_multisum(1, 1, Term::constant(rat(1, 2)), Term::var(Var::t));
        CHECK(x.eval({{Var::q, rat(1, 2)}, {Var::t, rat(1, 3)}}) == rat(32, 15));
    }

    // a = 0 lands exactly on the a-free form, symbolically
    for (int m = 1; m <= 2; ++m)
        for (int N = 0; N <= 3; ++N)
            CHECK(qfrac_equal(x_multisum(m, N, Term::constant(Rational(0)), Term::var(Var::t)),
                              x_closed(m, N)));

    // x_closed(1,1) = (1 - tq + t^2 q)/((1-q)(1-tq))
    QFraction c = x_closed(1, 1);
    LaurentPoly num = LaurentPoly::one();
    num.add_term(kT * kQ, Rational(-1));
    num.add_term(kT.pow(2) * kQ, Rational(1));
    LaurentPoly den = LaurentPoly::one();
    den.add_term(kQ, Rational(-1));
    LaurentPoly tq = LaurentPoly::one();
    tq.add_term(kT * kQ, Rational(-1));
    CHECK(rf_equal(c.to_rational_fn(), RationalFn(num, den * tq)));
}

TEST_CASE("series reformulations")
{
    // X-new against the multisum
    QSeries lhs = x_new_series(1, 1, Term::var(Var::q), Term::var(Var::q), 25);
    QSeries rhs = x_multisum(1, 1, Term::var(Var::q), Term::var(Var::q)).to_series({}, 25);
    CHECK(lhs == rhs);

    // V recursion and evaluation
    CHECK(v_multisum_series(2, 2, Term::var(Var::q), Term::var(Var::q), 20) ==
          v_recursion_rhs_series(2, 2, Term::var(Var::q), Term::var(Var::q), 20));
    CHECK(v_multisum_series(1, 2, Term::var(Var::q), Term::var(Var::q), 25) ==
          v_expression_series(1, 2, Term::var(Var::q), Term::var(Var::q), 25));

    // transformation lemma
    CHECK(trans2_lhs_series(1, 2, Term::var(Var::q), Term::var(Var::q), 25) ==
          trans2_rhs_series(1, 2, Term::var(Var::q), Term::var(Var::q), 25));

    // t -> 0 of the a-free sum keeps only the empty chain: 1/(q)_N
    QFraction closed0 = x_closed(2, 2, Term::constant(Rational(0)));
    QFraction expect(LaurentPoly::one(), poch_bag(Term::var(Var::q), kQ, 2));
    CHECK(qfrac_equal(closed0, expect));
}

TEST_CASE("kernel identities")
{
    for (int N = 0; N <= 3; ++N)
        CHECK(qfrac_equal(x1_key_lhs(N), x_closed(1, N)));
    for (int N = 0; N <= 2; ++N)
        for (int l1 = 0; l1 <= 2; ++l1) {
            CAPTURE(N);
            CAPTURE(l1);
            CHECK(qfrac_equal(induction_key_lhs(N, l1), induction_key_rhs(N, l1)));
            CHECK(qfrac_equal(a_indep_key_lhs(N, l1), a_indep_key_rhs(N, l1)));
        }
    for (int L = 0; L <= 2; ++L)
        for (int M = L; M <= 3; ++M)
            CHECK(qfrac_equal(z1z2_lhs(L, M), z1z2_rhs(L, M)));
}

TEST_CASE("master polynomial")
{
    // Z~_{1,1} = 1 - t + u/z
    LaurentPoly expect = LaurentPoly::one();
    expect.add_term(kT, Rational(-1));
    expect.add_term(mono(Var::u) * mono(Var::z, -1), Rational(1));
    CHECK(master_poly(1, 1) == expect);

    CHECK(master_poly(2, 0) == LaurentPoly::one());
    CHECK(master_poly(3, 0) == LaurentPoly::one());

    // rank-1 closed form 1 + (1 - eps*t/(uq)) sum_{r=1}^m (uq)^r with z = 1/q
    for (int m = 1; m <= 3; ++m) {
        LaurentPoly z1 = master_poly(m, 1);
        LaurentPoly closed = LaurentPoly::one();
        for (int r = 1; r <= m; ++r) {
            closed.add_term(mono(Var::u, r) * mono(Var::z, -r), Rational(1));
            closed.add_term(mono(Var::t) * mono(Var::u, r - 1) * mono(Var::z, -(r - 1)), Rational(-1));
        }
        CHECK(z1 == closed);
    }
}

TEST_CASE("master reflection and sieve")
{
    for (int m = 1; m <= 3; ++m)
        for (int n = 0; n <= 4; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(master_reflection_holds(m, n));
        }

    // closed forms from the statement
    LaurentPoly c1 = sieve_closed_form(1, 1, 1);
    LaurentPoly e1 = LaurentPoly::one();
    e1.add_term(mono(Var::u), Rational(1));
    e1.add_term(mono(Var::t), Rational(-1));
    CHECK(c1 == e1); // 1 + u - t

    LaurentPoly c2 = sieve_closed_form(1, 2, 2);
    LaurentPoly e2 = LaurentPoly::one();
    e2.add_term(mono(Var::u, 2), Rational(1));
    e2.add_term(mono(Var::t, 2), Rational(-1));
    CHECK(c2 == e2); // 1 + u^2 - t^2

    CHECK(sieve_closed_form_holds(1, 1, 1));
    CHECK(sieve_closed_form_holds(1, 2, 2));
    CHECK(sieve_closed_form_holds(2, 2, 1));
    CHECK(sieve_closed_form_holds(2, 4, 2));
}

TEST_CASE("parametrization relations")
{
    for (const char* which : {"ag", "ag-dagger", "br", "br-dagger", "br-ddagger"})
        for (int m = 1; m <= 2; ++m)
            for (int n = 0; n <= 3; ++n) {
                CAPTURE(which);
                CAPTURE(m);
                CAPTURE(n);
                CHECK(master_parametrization_holds(which, m, n));
            }
}
