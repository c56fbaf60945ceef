#include <random>

#include "brute.hpp"
#include "doctest.h"
#include "ndmax/maximal.hpp"
#include "ndmax/random.hpp"
#include "ndmax/util.hpp"

using namespace ndmax;

namespace {

void compare(const Space& s, const std::vector<double>& f, double kappa, bool centered) {
    const auto P = brute::points(s);
    const auto want = brute::maximal(P, brute::lift(s, f), kappa, centered);
    const auto got = maximal(s, f, kappa, centered);
    for (std::size_t x = 0; x < want.size(); ++x) {
        INFO("point " << x << " kappa " << kappa << " centered " << centered);
        CHECK(rel_close(got[std::size_t(P.origin[x])], want[x], 1e-12));
    }
}

}  // namespace

TEST_CASE("maximal operator agrees with the point-by-point definition") {
    std::mt19937_64 rng(2024);
    RandomSpaceOptions o;
    o.max_classes = 8;
    o.max_count = 3;
    for (int t = 0; t < 60; ++t) {
        const Space s = random_space(rng, o);
        const auto f = random_function(rng, s.size(), 0.3, t % 3 == 0);
        for (double kappa : {1.0, 1.5, 2.0, 3.0})
            for (bool centered : {true, false}) compare(s, f, kappa, centered);
    }
}

TEST_CASE("maximal operator basic inequalities") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 40; ++t) {
        const Space s = random_space(rng);
        const auto f = random_function(rng, s.size(), 0.3, true);
        const auto c1 = maximal(s, f, 1, true), n1 = maximal(s, f, 1, false), n2 = maximal(s, f, 2, false);
        for (std::size_t x = 0; x < s.size(); ++x) {
            CHECK(c1[x] >= std::fabs(f[x]) * (1 - 1e-12));  // radius zero ball
            CHECK(n1[x] >= c1[x] * (1 - 1e-12));
            CHECK(n2[x] <= n1[x] * (1 + 1e-12));  // larger denominators
        }
    }
}

TEST_CASE("maximal operator is sublinear and homogeneous") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        const Space s = random_space(rng);
        const auto f = random_function(rng, s.size()), g = random_function(rng, s.size());
        std::vector<double> h(f.size()), sf(f.size());
        for (std::size_t x = 0; x < f.size(); ++x) {
            h[x] = f[x] + g[x];
            sf[x] = -3 * f[x];
        }
        const MaximalPlan plan(s, 1.5, false);
        const auto Mf = plan.apply(f), Mg = plan.apply(g), Mh = plan.apply(h), Ms = plan.apply(sf);
        for (std::size_t x = 0; x < f.size(); ++x) {
            CHECK(Mh[x] <= (Mf[x] + Mg[x]) * (1 + 1e-12));
            CHECK(rel_close(Ms[x], 3 * Mf[x], 1e-12));
        }
    }
}

TEST_CASE("constant function on a uniform space is a fixed point for kappa one") {
    Space s;
    for (int k = 0; k < 5; ++k) s.add_class(2, 0.5, 1.0, 1.0);
    const auto Mf = maximal(s, std::vector<double>(5, 4.0), 1.0, false);
    for (double v : Mf) CHECK(v == doctest::Approx(4.0));
}

TEST_CASE("plan rejects a function of the wrong length") {
    Space s;
    s.add_class(1, 1, 1, 1);
    CHECK_THROWS_AS(MaximalPlan(s, 1, true).apply({1.0, 2.0}), std::invalid_argument);
}
