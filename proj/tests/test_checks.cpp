#include "doctest.h"
#include "ndmax/checks.hpp"
#include "ndmax/scan.hpp"
#include "ndmax/util.hpp"

using namespace ndmax;

TEST_CASE("registry lists the eleven checks in order") {
    const std::vector<std::string> ids{"star-weak", "t-centered", "basic-star-grid", "segment", "fiber-identity",
                                       "scaling-slope", "w-trichotomy", "bmo", "dichotomy", "interp", "oracle"};
    const auto& reg = checks::registry();
    REQUIRE(reg.size() == ids.size());
    for (std::size_t k = 0; k < ids.size(); ++k) {
        CHECK(reg[k].id == ids[k]);
        CHECK(checks::registered(ids[k]));
        CHECK_FALSE(reg[k].summary.empty());
    }
    CHECK(reg[6].evidence);
    CHECK(reg[8].evidence);
    CHECK_FALSE(checks::registered("nonexistent"));
}

TEST_CASE("unknown ids and overrides are rejected") {
    CHECK_THROWS_AS(checks::verify("nonexistent"), std::out_of_range);
    checks::CheckOptions o;
    o.overrides["no_such_key"] = "1";
    CHECK_THROWS_AS(checks::verify("star-weak", o), std::invalid_argument);
}

TEST_CASE("a check is deterministic for a fixed seed and honours overrides") {
    checks::CheckOptions o;
    o.seed = 7;
    o.overrides["n_max"] = "4";
    o.overrides["restarts"] = "5";
    const auto a = checks::verify("star-weak", o).to_json();
    const auto b = checks::verify("star-weak", o).to_json();
    CHECK(a == b);
    CHECK(a["verdict"] == "pass");
    CHECK(a["parameters"]["n_max"] == 4);
    CHECK(a["id"] == "star-weak");
}

TEST_CASE("number formatting keeps twelve significant digits") {
    CHECK(checks::num(1.0 / 3).get<double>() == doctest::Approx(0.333333333333).epsilon(1e-13));
    CHECK(checks::num(kInf) == "inf");
    CHECK(checks::num(-kInf) == "-inf");
    CHECK(checks::num(std::nan("")) == "nan");
}

TEST_CASE("a family with constant ratios is bounded everywhere") {
    const auto reg = scan::scan_region(scan::point_components(5), 2.0, 5);
    REQUIRE(reg.cells.size() == 25);
    CHECK(reg.warnings.empty());
    for (const auto& c : reg.cells) {
        CHECK(c.feasible == (c.w <= c.u + 1e-12));
        if (c.feasible) {
            CHECK_FALSE(c.diverging);
            CHECK(std::fabs(c.slope) < 1e-9);
        }
    }
    const auto csv = scan::region_csv(reg);
    CHECK(csv.rfind("u,w,class,slope", 0) == 0);
    CHECK(csv.find("n/a") != std::string::npos);
    CHECK(csv.find("diverging") == std::string::npos);
    CHECK_THROWS_AS(scan::scan_region(scan::point_components(5), 2.0, 1), std::invalid_argument);
}

TEST_CASE("verdict names") {
    CHECK(checks::verdict_name(checks::Verdict::pass) == "pass");
    CHECK(checks::verdict_name(checks::Verdict::fail) == "fail");
    CHECK(checks::verdict_name(checks::Verdict::evidence) == "evidence");
}
