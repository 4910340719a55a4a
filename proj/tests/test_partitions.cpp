#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qz/partitions.hpp"

using namespace qz;

TEST_CASE("conjugate")
{
    CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
    CHECK(Partition({3}).conjugate() == Partition({1, 1, 1}));
    CHECK(Partition().conjugate() == Partition());
    for (const auto& la : partitions_in_rectangle(3, 3)) {
        CHECK(la.conjugate().conjugate() == la);
        if (la.length() > 0)
            CHECK(la.conjugate().part(1) == la.length());
    }
    CHECK_THROWS_AS(Partition({1, 2}), InvalidComposition);
}

TEST_CASE("complement in rectangle")
{
    CHECK(complement_in_rectangle(Partition({1}), 2, 2) == Partition({2, 1}));
    CHECK(complement_in_rectangle(Partition(), 3, 2) == Partition({3, 3}));
    CHECK(complement_in_rectangle(Partition({3, 3}), 3, 2) == Partition());
    CHECK_THROWS_AS(complement_in_rectangle(Partition({4}), 3, 2), NotInRectangle);
    for (const auto& mu : partitions_in_rectangle(3, 2))
        CHECK(complement_in_rectangle(complement_in_rectangle(mu, 3, 2), 3, 2) == mu);
}

TEST_CASE("partitions in a rectangle")
{
    auto r11 = partitions_in_rectangle(1, 1);
    REQUIRE(r11.size() == 2);
    CHECK(r11[0] == Partition());
    CHECK(r11[1] == Partition({1}));

    auto r21 = partitions_in_rectangle(2, 1);
    REQUIRE(r21.size() == 3);
    CHECK(r21[2] == Partition({2}));

    CHECK(partitions_in_rectangle(2, 2).size() == 6);
    // count equals the q=1 Gaussian binomial
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n)
            CHECK(Rational(static_cast<long>(partitions_in_rectangle(m, n).size())) ==
                  qbinom(m + n, n).eval({{Var::q, Rational(1)}}));
}

TEST_CASE("hall polynomial")
{
    LaurentPoly g = hall_g(Partition({1, 1}), Partition({1}));
    LaurentPoly expect = LaurentPoly::one();
    expect.add_term(mono(Var::q), Rational(1));
    CHECK(g == expect); // q + 1

    CHECK(hall_g(Partition({2}), Partition({1})) == LaurentPoly::one());
    CHECK(hall_g(Partition({3, 2, 1}), Partition()) == LaurentPoly::one());
    CHECK(hall_g(Partition({1}), Partition({2})) == LaurentPoly::zero());
}

TEST_CASE("automorphism counts")
{
    LaurentPoly a1 = aut_count(Partition({1}));
    LaurentPoly qm1 = LaurentPoly::variable(Var::q);
    qm1.add_term(mono_one(), Rational(-1));
    CHECK(a1 == qm1); // q - 1

    // a_{(1,1)} = (q^2-1)(q^2-q)
    LaurentPoly a11 = aut_count(Partition({1, 1}));
    CHECK(a11.eval({{Var::q, Rational(2)}}) == Rational(6));
    CHECK(a11.eval({{Var::q, Rational(3)}}) == Rational(48));

    // a_{(2)} = q^2 - q
    LaurentPoly a2 = aut_count(Partition({2}));
    CHECK(a2.eval({{Var::q, Rational(2)}}) == Rational(2));
}

TEST_CASE("real structure counts")
{
    LaurentPoly r1 = real_structure_count(Partition({1}));
    LaurentPoly expect = LaurentPoly::variable(Var::q);
    expect.add_term(mono_one(), Rational(1));
    CHECK(r1 == expect); // q + 1
    CHECK(real_structure_count(Partition()) == LaurentPoly::one());
    // (1,1): a(q^2)/a(q) value at q=2 is (15*12)/(3*2) = 30
    CHECK(real_structure_count(Partition({1, 1})).eval({{Var::q, Rational(2)}}) == Rational(30));
}

TEST_CASE("cTR counting polynomial B")
{
    for (const auto& la : partitions_in_rectangle(2, 2))
        CHECK(B_count(2, 2, la, la) == LaurentPoly::one());

    LaurentPoly b = B_count(1, 1, Partition({1}), Partition());
    LaurentPoly expect = LaurentPoly::variable(Var::q);
    expect.add_term(mono_one(), Rational(1));
    CHECK(b == expect); // q + 1

    CHECK(B_count(2, 2, Partition({1}), Partition({2})) == LaurentPoly::zero());
    CHECK_THROWS_AS(B_count(1, 1, Partition({2}), Partition()), NotInRectangle);

    // coefficients stay nonnegative integers over the whole (3^3) box;
    // the ratio and product routes are compared inside B_count itself
    for (const auto& la : partitions_in_rectangle(3, 3))
        for (const auto& mu : partitions_in_rectangle(3, 3)) {
            if (!la.contains(mu))
                continue;
            LaurentPoly b2 = B_count(3, 3, la, mu);
            for (const auto& [m, c] : b2.terms()) {
                CHECK(is_integer(c));
                CHECK(sgn(c) > 0);
            }
        }
}
