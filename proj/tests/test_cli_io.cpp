#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qz/suite.hpp"

using namespace qz;

TEST_CASE("registry is populated and runnable by id")
{
    const auto& reg = identity_registry();
    CHECK(reg.size() >= 20);
    SuiteConfig cfg;
    cfg.m_max = 1;
    cfg.n_max = 1;
    cfg.Q = 12;
    auto reports = check_identity("main-theorem", cfg);
    CHECK(!reports.empty());
    for (const auto& r : reports)
        CHECK(r.passed());
    CHECK_THROWS_AS(check_identity("no-such-id", cfg), UnknownIdentity);
}

TEST_CASE("classical suite end to end")
{
    SuiteConfig cfg;
    cfg.suite = "classical";
    cfg.Q = 20;
    auto reports = run_suite(cfg);
    CHECK(reports.size() >= 8 * 5 + 3);
    for (const auto& r : reports) {
        CAPTURE(r.id);
        CAPTURE(r.params);
        CHECK(r.passed());
    }
    // deterministic byte-identical serialization across runs
    auto again = run_suite(cfg);
    CHECK(reports_to_json(reports) == reports_to_json(again));
    // sorted by (id, params)
    for (std::size_t i = 1; i < reports.size(); ++i) {
        bool ordered = std::tie(reports[i - 1].id, reports[i - 1].params) <=
                       std::tie(reports[i].id, reports[i].params);
        CHECK(ordered);
    }
}

TEST_CASE("report serialization shapes")
{
    CheckReport r = make_report("demo", "demo reference", "m=1", "series", true);
    std::string js = reports_to_json({r});
    CHECK(js.find("\"status\": \"PASS\"") != std::string::npos);
    CHECK(js.find("elapsed") == std::string::npos); // timing never serialized
    std::string csv = reports_to_csv({r});
    CHECK(csv.find("demo") != std::string::npos);
}

TEST_CASE("zeta table round trip")
{
    ZetaValue v = zeta_table("nu-tilde", OrderId{OrderKind::Inert, 1}, 2, 3);
    std::string js = zeta_value_to_json(v);
    ZetaValue back = zeta_value_from_json(js);
    CHECK(back.label == v.label);
    CHECK(back.order.kind == v.order.kind);
    CHECK(back.order.m == v.order.m);
    CHECK(back.n == v.n);
    REQUIRE(back.t_rows.size() == v.t_rows.size());
    for (std::size_t k = 0; k < v.t_rows.size(); ++k)
        CHECK(back.t_rows[k] == v.t_rows[k]);
    // rationals serialized as integer strings, never floats
    bool no_floats = js.find('.') == std::string::npos;
    CHECK(no_floats);
    std::string csv = zeta_value_to_csv(v);
    CHECK(csv.rfind("label,order,m,n,t_deg,z_exp,num,den", 0) == 0);
}
