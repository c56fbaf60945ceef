#include <cmath>

#include "doctest.h"
#include "ndmax/constants.hpp"
#include "ndmax/space.hpp"
#include "ndmax/util.hpp"
#include "ndmax/zoo.hpp"

using namespace ndmax;

namespace {

zoo::Recipe recipe(const std::string& kind, const std::vector<std::string>& kv) { return zoo::Recipe::parse(kind, kv); }

}  // namespace

TEST_CASE("every catalog kind builds a valid space at a small size") {
    const std::map<std::string, std::vector<std::string>> small = {
        {"gen1_star", {"tau=3"}},
        {"gen1_s1", {"p0=2", "n=3"}},
        {"gen1_s1p", {"p0=1", "n=3"}},
        {"gen1_s2_1", {"n=3"}},
        {"gen1_s2", {"p0=2", "n=3"}},
        {"gen1_s3", {"p0=2", "n=2"}},
        {"gen2_simple", {"tau=3"}},
        {"gen2_basic", {"tau=3", "d=2"}},
        {"gen2_t1", {"p0=2", "n=3"}},
        {"gen2_t1p", {"p0=2", "n=3"}},
        {"gen2_t2", {"p0=1", "n=3"}},
        {"gen2_t3", {"p0=2", "n=1"}},
        {"gen2_modified", {"base=gen2_simple", "tau=3"}},
        {"segment", {"n=4", "subtype=1", "kappa=2"}},
        {"composite_prefix", {"family=S_hat", "kh=2", "n=2"}},
        {"typeI", {"m=1,2,4"}},
        {"typeI_trend", {"p0=2", "r0=2", "l=3"}},
        {"typeI_p1", {"mt=1,2,4"}},
        {"typeII", {"p=2", "q=2", "r=3", "l=2"}},
        {"typeII_inf", {"p=2", "q=3", "l=2"}},
        {"typeIII", {"p=2", "N=2", "M=2"}},
        {"typeIII_cor", {"p=2", "lambda=1", "a=1", "b=1", "kappa=2"}},
        {"composite_W", {"p=2", "gamma=0", "a=1", "b=1", "R=2", "eps=0.1", "n=2"}},
        {"W_leq", {"p=2", "delta=0.5", "omega=0", "n=1"}},
        {"W_less", {"p=2", "delta=0.5", "omega=0", "n=1"}},
        {"bmo_matrix", {"rows=1;5,31"}},
        {"bmo_c1", {"p0=2", "depth=3"}},
        {"bmo_c1p", {"p0=1", "depth=3"}},
        {"bmo_c1star", {"depth=3", "N=4"}},
        {"bmo_lacunary", {"depth=3"}},
        {"lattice", {"example=C", "R=3"}},
    };
    for (const auto& entry : zoo::catalog()) {
        INFO(entry.kind);
        REQUIRE(small.count(entry.kind) == 1);
        const auto r = recipe(entry.kind, small.at(entry.kind));
        Space s;
        try {
            s = zoo::build(r);
        } catch (const BuildError& e) {
            FAIL(e.what());
        }
        CHECK(validate(s).ok);
        for (const auto& w : entry.witnesses) {
            const auto f = zoo::witness(r, s, w);
            CHECK(f.size() == s.size());
            bool any = false;
            for (double v : f) any |= v != 0;
            CHECK(any);
        }
    }
}

TEST_CASE("caps turn oversized requests into build errors") {
    CHECK_THROWS_AS(zoo::build(recipe("gen2_t3", {"p0=2", "n=3"})), BuildError);
    zoo::Caps caps;
    caps.max_classes = 3;
    CHECK_THROWS_AS(zoo::build(recipe("gen2_simple", {"tau=5"}), caps), BuildError);
    CHECK_THROWS_AS(zoo::build(recipe("W_leq", {"p=2", "delta=0.5", "omega=0", "n=2"})), BuildError);
}

TEST_CASE("bad parameters are rejected") {
    CHECK_THROWS(zoo::build(recipe("segment", {"n=4", "subtype=1", "kappa=1"})));
    CHECK_THROWS(zoo::build(recipe("typeII", {"p=2", "q=3", "r=2", "l=2"})));
    CHECK_THROWS(zoo::build(recipe("no_such_kind", {})));
}

TEST_CASE("lower sequences satisfy their defining constraints") {
    for (double p : {1.5, 2.0, 3.0}) {
        const auto L = zoo::lower_sequences(p, 5);
        REQUIRE(L.m.size() == 5);
        CHECK((L.m[0] == 1 && L.h[0] == 1));
        for (std::size_t i = 1; i < L.m.size(); ++i) {
            INFO("p " << p << " level " << i);
            CHECK(L.m[i] >= 2 * L.m[i - 1] * L.h[i - 1]);
            CHECK(std::fmod(L.h[i], L.h[i - 1]) == 0);
            const double v = std::pow(L.m[i], 1 - p) * L.h[i];
            CHECK(v >= 1 - 1e-12);
            CHECK(v < 2);
        }
    }
}

TEST_CASE("type III scaling parameters reproduce the prefactor") {
    const double p = 2;
    const auto c = zoo::type3_cor_params(p, 3.0, 1, 1, 2);
    CHECK((c.N == 2 && c.M == 2));
    // L^{1/p} K^{-(p-1)/p} equals lambda kappa^{-b} once L >= 1 is chosen first.
    CHECK(std::pow(c.L, 1 / p) * std::pow(c.K, -(p - 1) / p) == doctest::Approx(1.5));
}

TEST_CASE("segment distances grow geometrically") {
    const Space s = zoo::build(recipe("segment", {"n=4", "subtype=1", "kappa=2"}));
    CHECK(validate(s).ok);
    for (int j = 1; j + 1 < int(s.size()); ++j) CHECK(s.dist(0, j + 1) > s.dist(0, j));
}

TEST_CASE("explicit upper bounds exist only for the registered configurations") {
    const auto star = recipe("gen1_star", {"tau=4"});
    CHECK(zoo::explicit_upper(star, OperatorSpec::make(Kind::strong, 1.0, 2.0, false)).value() == doctest::Approx(2.0));
    CHECK(zoo::explicit_upper(star, OperatorSpec::make(Kind::strong, 2.0, 2.0, false)).value() ==
          doctest::Approx(std::sqrt(2.0)));
    CHECK_FALSE(zoo::explicit_upper(recipe("typeI", {"m=1,2"}), OperatorSpec::make(Kind::strong, 2.0)).has_value());
}
