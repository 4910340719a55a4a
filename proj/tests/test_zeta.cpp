#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qz/zeta.hpp"

using namespace qz;

namespace {
const Monomial kZ = mono(Var::z);
const Monomial kT = mono(Var::t);
const OrderId kInert1{OrderKind::Inert, 1};
} // namespace

TEST_CASE("solomon formula")
{
    CHECK(rf_equal(solomon_zeta(0, 1), RationalFn::from_poly(LaurentPoly::one())));
    LaurentPoly omt = LaurentPoly::one();
    omt.add_term(kT, Rational(-1));
    CHECK(rf_equal(solomon_zeta(1, 1), RationalFn(LaurentPoly::one(), omt)));
    // the shifted inert normalization factor (t^2 z^2; z^2)_2
    LaurentPoly den = poch_poly(Term(Rational(1), kT.pow(2) * kZ.pow(2)),
                                Term(Rational(1), kZ.pow(2)), 2);
    RationalFn shifted = solomon_zeta(2, 2).subst({{Var::t, Term(Rational(1), kT * kZ)}});
    CHECK(rf_equal(shifted, RationalFn(LaurentPoly::one(), den)));
}

TEST_CASE("nu over the normalization")
{
    for (OrderKind k : {OrderKind::Ramified, OrderKind::Split, OrderKind::Inert})
        CHECK(nu_tilde(OrderId{k, 2}, 0) == LaurentPoly::one());

    // inert m=1, n=1: 1 + (1 + z^{-1}) t
    LaurentPoly expect = LaurentPoly::one();
    expect.add_term(kT, Rational(1));
    expect.add_term(kT * kZ.pow(-1), Rational(1));
    CHECK(nu_tilde(kInert1, 1) == expect);

    // dual routes (direct sums, partition sums, AG routes) run inside;
    // a clean pass over the grid means they all agreed
    for (OrderKind k : {OrderKind::Ramified, OrderKind::Split, OrderKind::Inert})
        for (int m = 1; m <= 2; ++m)
            for (int n = 0; n <= 3; ++n)
                CHECK_NOTHROW(nu_tilde(OrderId{k, m}, n));
}

TEST_CASE("nu over the order")
{
    // inert m=1, n=1: 1 + t + t^2 z^{-1}
    LaurentPoly expect = LaurentPoly::one();
    expect.add_term(kT, Rational(1));
    expect.add_term(kT.pow(2) * kZ.pow(-1), Rational(1));
    CHECK(nu_order(kInert1, 1) == expect);

    for (OrderKind k : {OrderKind::Ramified, OrderKind::Split, OrderKind::Inert})
        for (int m = 1; m <= 2; ++m)
            for (int n = 0; n <= 3; ++n) {
                CAPTURE(static_cast<int>(k));
                CHECK_NOTHROW(nu_order(OrderId{k, m}, n));
            }

    // constant coefficient of every nu is 1
    for (OrderKind k : {OrderKind::Ramified, OrderKind::Split, OrderKind::Inert})
        for (int n = 0; n <= 3; ++n) {
            CHECK(nu_order(OrderId{k, 1}, n).coeff(mono_one()) == Rational(1));
            CHECK(nu_tilde(OrderId{k, 1}, n).coeff(mono_one()) == Rational(1));
        }
}

TEST_CASE("finitized Coh zeta")
{
    for (OrderKind k : {OrderKind::Ramified, OrderKind::Split, OrderKind::Inert})
        CHECK(qfrac_equal(coh_zeta_finitized(OrderId{k, 2}, 0), QFraction::one()));

    // the inert case equals the explicit 2m-fold multisum
    for (int m = 1; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n)
            CHECK(qfrac_equal(zeta_new_multisum(m, n),
                              coh_zeta_finitized(OrderId{OrderKind::Inert, m}, n)));

    // split multisum against the Bressoud form
    for (int m = 1; m <= 2; ++m)
        for (int n = 0; n <= 3; ++n)
            CHECK(qfrac_equal(split_multisum(m, n),
                              coh_zeta_finitized(OrderId{OrderKind::Split, m}, n)));

    // sign twist between split and inert at the nu level
    for (int m = 1; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n)
            CHECK(nu_order(OrderId{OrderKind::Split, m}, n) ==
                  nu_order(OrderId{OrderKind::Inert, m}, n).subst(Var::t, Term(Rational(-1), kT)));
}

TEST_CASE("reflection principles")
{
    for (OrderKind k : {OrderKind::Ramified, OrderKind::Split, OrderKind::Inert})
        for (int m = 1; m <= 2; ++m)
            for (int n = 0; n <= 3; ++n) {
                OrderId order{k, m};
                CAPTURE(order.name());
                CAPTURE(m);
                CAPTURE(n);
                CHECK(geo_reflection_holds(order, n));
                CHECK(fine_reflection_holds(order, n));
            }
}

TEST_CASE("rank-1 and ramified degenerations")
{
    // inert m=1: both sides 1 + t + t^2 q
    CHECK(hilb_quot_rank1_holds(kInert1));
    {
        LaurentPoly lhs = nu_order(kInert1, 1);
        LaurentPoly rhs =
            nu_tilde(kInert1, 1).subst(Var::z, Term(Rational(1), kT.pow(-1) * kZ));
        LaurentPoly expect = LaurentPoly::one();
        expect.add_term(kT, Rational(1));
        expect.add_term(kT.pow(2) * kZ.pow(-1), Rational(1));
        CHECK(lhs == expect);
        CHECK(rhs == expect);
    }
    // ramified m=1: both sides 1 + t^2 q
    {
        OrderId ram{OrderKind::Ramified, 1};
        LaurentPoly lhs = nu_order(ram, 1);
        LaurentPoly expect = LaurentPoly::one();
        expect.add_term(kT.pow(2) * kZ.pow(-1), Rational(1));
        CHECK(lhs == expect);
        CHECK(hilb_quot_rank1_holds(ram));
    }
    for (OrderKind k : {OrderKind::Ramified, OrderKind::Split, OrderKind::Inert})
        for (int m = 1; m <= 3; ++m)
            CHECK(hilb_quot_rank1_holds(OrderId{k, m}));
    for (int m = 1; m <= 2; ++m)
        for (int n = 0; n <= 3; ++n)
            CHECK(ramified_rank_rule_holds(m, n));
}

TEST_CASE("cyclic sieving at the zeta level")
{
    // q -> 1 evaluation is the n-th power of the rank-1 value
    for (OrderKind k : {OrderKind::Ramified, OrderKind::Split, OrderKind::Inert})
        for (int n = 1; n <= 3; ++n)
            for (NuKind e : {NuKind::OfNormalization, NuKind::OfOrder}) {
                SieveOutcome so = nu_cyclic_sieving(OrderId{k, 1}, e, n, 1);
                CHECK(so.pass);
                CHECK(so.naive_form_agrees); // odd r: no sign subtlety
            }
    // the inert even-r case needs the (eps t)^r twist
    SieveOutcome so = nu_cyclic_sieving(kInert1, NuKind::OfNormalization, 2, 2);
    CHECK(so.pass);
    CHECK_FALSE(so.naive_form_agrees);
    SieveOutcome so2 = nu_cyclic_sieving(kInert1, NuKind::OfOrder, 2, 2);
    CHECK(so2.pass);
    CHECK_THROWS_AS(nu_cyclic_sieving(kInert1, NuKind::OfOrder, 3, 2), UnknownIdentity);
}

TEST_CASE("coh stabilization")
{
    CHECK(coh_t_coefficient(kInert1, 3, 0) == LaurentPoly::one());
    CHECK(coh_stabilization_witness(kInert1, 0, 4) == 0);
    CHECK(coh_stabilization_witness(kInert1, 1, 4) == 1);
    CHECK(coh_stabilization_witness(OrderId{OrderKind::Inert, 2}, 2, 5) >= 0);
}

TEST_CASE("zeta tables")
{
    ZetaValue v = zeta_table("coh", kInert1, 0, 2);
    REQUIRE(v.t_rows.size() == 3);
    CHECK(v.t_rows[0] == LaurentPoly::one());

    ZetaValue nu = zeta_table("nu-tilde", kInert1, 1, 1);
    CHECK(nu.t_rows[0] == LaurentPoly::one());
    LaurentPoly row1 = LaurentPoly::one();
    row1.add_term(kZ.pow(-1), Rational(1));
    CHECK(nu.t_rows[1] == row1); // 1 + z^{-1}

    CHECK_THROWS_AS(zeta_table("bogus", kInert1, 1, 1), ConfigError);
}
