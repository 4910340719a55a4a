#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qz/oracle.hpp"

using namespace qz;

TEST_CASE("field tables")
{
    const SmallField& F4 = build_field(2, 2);
    CHECK(F4.mul(2, 2) == 3); // x * x = x + 1 under x^2 + x + 1
    const SmallField& F2 = build_field(2, 1);
    CHECK(F2.add(1, 1) == 0);
    const SmallField& F9 = build_field(3, 2);
    CHECK(F9.mul(3, 3) == 2); // x * x = -1 = 2 under x^2 + 1
    for (const SmallField* F : {&F2, &F4, &F9})
        for (int a = 1; a < F->q; ++a)
            CHECK(F->mul(a, F->inv(a)) == 1);
    CHECK_THROWS_AS(build_field(5, 3), UnsupportedField);
}

TEST_CASE("module types")
{
    const SmallField& F2 = build_field(2, 1);
    FqModule cyclic = module_of_type(F2, Partition({2}));
    CHECK(module_type(cyclic) == Partition({2}));
    FqModule flat = module_of_type(F2, Partition({1, 1}));
    CHECK(module_type(flat) == Partition({1, 1}));

    // A~ = F4[T]/T^2 viewed over F2[T]/T^2 has type (2,2)
    FqModule amb = inert_ambient(F2, 2, 1);
    CHECK(module_type(amb) == Partition({2, 2}));

    // non-invariant subspace is rejected
    SubmoduleBasis diag{{{1, 1}}};
    FqModule M2 = module_of_type(F2, Partition({2}));
    CHECK_FALSE(is_t_invariant(M2, diag));
    CHECK_THROWS_AS(module_type(M2, diag), NotTInvariant);
}

TEST_CASE("submodule enumeration")
{
    const SmallField& F2 = build_field(2, 1);
    CHECK(enumerate_submodules(module_of_type(F2, Partition({1, 1}))).size() == 5);
    CHECK(enumerate_submodules(module_of_type(F2, Partition({2}))).size() == 3);

    // type-(1) submodules of the (2,2) module match the Hall polynomial at q=2
    FqModule M = module_of_type(F2, Partition({2, 2}));
    Rational expect = hall_g(Partition({2, 2}), Partition({1})).eval({{Var::q, Rational(2)}});
    CHECK(Rational(count_by_type(M, Partition({1}))) == expect);

    CHECK_THROWS_AS(enumerate_subspaces(build_field(3, 1), 7), TooLarge);
}

TEST_CASE("type and cotype census")
{
    const SmallField& F2 = build_field(2, 1);
    FqModule M = module_of_type(F2, Partition({1, 1}));
    CHECK(count_by_type_cotype(M, Partition({1}), Partition({1})) == 3);
    CHECK(count_by_type_cotype(M, Partition(), Partition({1, 1})) == 1);

    // rectangular uniqueness at type (2,2)
    FqModule R = module_of_type(F2, Partition({2, 2}));
    for (const auto& mu : partitions_in_rectangle(2, 2)) {
        long total = 0;
        for (const auto& nu : partitions_in_rectangle(2, 2)) {
            long c = count_by_type_cotype(R, mu, nu);
            if (c > 0)
                CHECK(nu == complement_in_rectangle(mu, 2, 2));
            total += c;
        }
        CHECK(Rational(total) ==
              hall_g(Partition({2, 2}), mu).eval({{Var::q, Rational(2)}}));
    }
}

TEST_CASE("automorphism counts")
{
    const SmallField& F2 = build_field(2, 1);
    CHECK(count_automorphisms(module_of_type(F2, Partition({1, 1}))) == 6);
    CHECK(count_automorphisms(module_of_type(F2, Partition({2}))) == 2);
    const SmallField& F3 = build_field(3, 1);
    for (int sz = 1; sz <= 3; ++sz)
        for (const auto& la : partitions_of_size(sz))
            CHECK(Rational(count_automorphisms(module_of_type(F3, la))) ==
                  aut_count(la).eval({{Var::q, Rational(3)}}));
}

TEST_CASE("totally real and spanning submodules")
{
    const SmallField& F2 = build_field(2, 1);
    FqModule amb = inert_ambient(F2, 1, 1); // F4 over F2
    SubmoduleBasis real_line{inert_real_part(amb, 1, 1)};
    CHECK(is_totally_real(amb, real_line));
    CHECK(is_ctr(amb, real_line));
    SubmoduleBasis zero{};
    CHECK(is_totally_real(amb, zero));
    CHECK_FALSE(is_ctr(amb, zero));
    SubmoduleBasis full{{{1, 0}, {0, 1}}};
    CHECK(is_ctr(amb, full));
    CHECK_FALSE(is_totally_real(amb, full));

    CHECK(count_tr_grassmannian(amb, Partition({1})) == 3);
    CHECK(count_ctr_grassmannian(amb, Partition()) == 1);
}

TEST_CASE("flag fibers")
{
    const SmallField& F2 = build_field(2, 1);
    FqModule amb = inert_ambient(F2, 1, 1);
    auto pr1 = tr_flag_fibers(amb, Partition({1}), Partition(), FlagSide::Pr1);
    REQUIRE(pr1.size() == 1);
    CHECK(pr1.begin()->second == 3);

    auto self = tr_flag_fibers(amb, Partition({1}), Partition({1}), FlagSide::Pr1);
    for (const auto& [w, c] : self)
        CHECK(c == 1);

    FqModule amb21 = inert_ambient(F2, 2, 1);
    Rational expect = B_count(2, 1, Partition({2}), Partition({1})).eval({{Var::q, Rational(2)}});
    auto fibers = tr_flag_fibers(amb21, Partition({2}), Partition({1}), FlagSide::Pr1);
    REQUIRE(!fibers.empty());
    for (const auto& [w, c] : fibers)
        CHECK(Rational(c) == expect);
}

TEST_CASE("boundary lattice invariants")
{
    const SmallField& F2 = build_field(2, 1);
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
        FqModule amb = inert_ambient(F2, m, n);
        FqModule realmod = module_of_type(F2, Partition::rectangle(m, n));
        for (const auto& Wb : enumerate_submodules(realmod)) {
            Mat lifted;
            for (const Row& r : Wb.rows) {
                Row v(static_cast<std::size_t>(amb.dim), 0);
                for (int j = 0; j < realmod.dim; ++j)
                    v[static_cast<std::size_t>(2 * j)] = r[static_cast<std::size_t>(j)];
                lifted.push_back(std::move(v));
            }
            BoundaryCheck bc = boundary_invariants_check(amb, m, n, SubmoduleBasis{rref(F2, lifted)});
            CHECK(bc.part_a);
            CHECK(bc.part_b);
            CHECK(bc.part_c);
        }
    }
}

TEST_CASE("extension orbits")
{
    const SmallField& F2 = build_field(2, 1);
    FqModule amb = inert_ambient(F2, 1, 2);
    CHECK(extension_orbit_count(amb, Partition({1})) == 1);
    CHECK(extension_orbit_count(amb, Partition({1, 1})) == 1);
}
