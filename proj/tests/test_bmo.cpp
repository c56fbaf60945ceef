#include <random>

#include "brute.hpp"
#include "doctest.h"
#include "ndmax/bmo.hpp"
#include "ndmax/random.hpp"
#include "ndmax/util.hpp"
#include "ndmax/zoo.hpp"

using namespace ndmax;

namespace {

// sup over point balls of (mean |f - f_B|^p)^{1/p}
double brute_bmo(const Space& s, const std::vector<double>& f, double p) {
    const auto P = brute::points(s);
    const auto pf = brute::lift(s, f);
    const std::size_t n = pf.size();
    double best = 0;
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t r = 0; r <= n; ++r) {
            const double rad = r == n ? 0.0 : P.d[z][r];
            double mass = 0, sum = 0;
            for (std::size_t y = 0; y < n; ++y)
                if (brute::in_ball(P.d[z][y], rad)) {
                    mass += P.mass[y];
                    sum += P.mass[y] * pf[y];
                }
            const double mean = sum / mass;
            double osc = 0;
            for (std::size_t y = 0; y < n; ++y)
                if (brute::in_ball(P.d[z][y], rad)) osc += P.mass[y] * std::pow(std::fabs(pf[y] - mean), p);
            best = std::max(best, osc / mass);
        }
    return std::pow(best, 1 / p);
}

}  // namespace

TEST_CASE("BMO norm agrees with a search over point balls") {
    std::mt19937_64 rng(17);
    RandomSpaceOptions o;
    o.max_classes = 8;
    o.max_count = 3;
    for (int t = 0; t < 40; ++t) {
        const Space s = random_space(rng, o);
        const auto f = random_function(rng, s.size(), 0.3, true);
        double scale = 0;
        for (double v : f) scale = std::max(scale, std::fabs(v));
        for (double p : {1.0, 2.0}) {
            const double want = brute_bmo(s, f, p), got = bmo::bmo_norm(s, f, p).norm;
            CHECK(std::fabs(got - want) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("mean oscillation is comparable to the double average") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        const Space s = random_space(rng);
        const auto f = random_function(rng, s.size(), 0.2, true);
        double scale = 0;
        for (double v : f) scale = std::max(scale, std::fabs(v));
        for (const auto& b : bmo::distinct_balls(s))
            for (double p : {1.0, 1.5, 3.0}) {
                // single-class balls leave mean roundoff in the oscillation
                const double floor = std::pow(1e-12 * scale, p);
                const double osc = bmo::mean_oscillation(s, b, f, p), dbl = bmo::double_average(s, b, f, p);
                CHECK(osc <= dbl * (1 + 1e-12) + floor);
                CHECK(dbl <= std::pow(2.0, p) * osc * (1 + 1e-12) + floor);
            }
    }
}

TEST_CASE("the reported ball attains the norm") {
    std::mt19937_64 rng(29);
    const Space s = random_space(rng);
    const auto f = random_function(rng, s.size(), 0.2, true);
    const auto r = bmo::bmo_norm(s, f, 2.0);
    CHECK(rel_close(std::sqrt(bmo::mean_oscillation(s, r.record.ball, f, 2.0)), r.norm, 1e-12));
    CHECK(rel_close(bmo::mean(s, r.record.ball, f), r.record.mean, 1e-12));
}

TEST_CASE("constant functions have zero oscillation") {
    std::mt19937_64 rng(31);
    const Space s = random_space(rng);
    CHECK(bmo::bmo_norm(s, std::vector<double>(s.size(), 2.5), 1.0).norm <= 1e-12);
    CHECK_THROWS_AS(bmo::jn_profile(s, std::vector<double>(s.size(), 2.5)), std::invalid_argument);
}

TEST_CASE("power trick with alpha one subtracts the ball mean") {
    std::mt19937_64 rng(37);
    const Space s = random_space(rng);
    const auto f = random_function(rng, s.size(), 0.2, true);
    const auto b = bmo::distinct_balls(s).back();
    const auto g = bmo::power_trick(s, f, 1.0, b);
    const double fb = bmo::mean(s, b, f);
    for (std::size_t c = 0; c < f.size(); ++c) CHECK(g[c] == doctest::Approx(f[c] - fb));
    const auto h = bmo::power_trick(s, f, 3.0, b);
    for (std::size_t c = 0; c < f.size(); ++c) CHECK(std::pow(std::fabs(h[c]), 3) == doctest::Approx(std::fabs(f[c] - fb)));
}

TEST_CASE("superlevel fractions fall as the level rises") {
    std::mt19937_64 rng(41);
    RandomSpaceOptions o;
    o.min_classes = 3;
    const Space s = random_space(rng, o);
    std::vector<double> f(s.size());
    for (std::size_t c = 0; c < f.size(); ++c) f[c] = double(c);
    const auto prof = bmo::jn_profile(s, f, std::make_pair(1.0, 0.0));
    REQUIRE(prof.rows.size() >= 2);
    CHECK(prof.rows.front().fraction <= 1);
    for (std::size_t k = 1; k < prof.rows.size(); ++k) {
        CHECK(prof.rows[k].lambda > prof.rows[k - 1].lambda);
        CHECK(prof.rows[k].fraction <= prof.rows[k - 1].fraction);
    }
    CHECK(prof.violations == 0);  // c1 = 1, c2 = 0 is the trivial bound
    CHECK(prof.rows.back().fraction == 0);
    const auto whole = bmo::subset_ball(s, [&] {
        std::vector<int> all(s.size());
        for (std::size_t c = 0; c < all.size(); ++c) all[c] = int(c);
        return all;
    }());
    CHECK(bmo::superlevel_fraction(s, whole, f, -1) == doctest::Approx(1.0));
}

TEST_CASE("growth construction witness stays in BMO at every depth") {
    for (int depth = 2; depth <= 5; ++depth) {
        zoo::Recipe r = zoo::Recipe::parse("bmo_c1", {"p0=2", "depth=" + std::to_string(depth)});
        const Space s = zoo::build(r);
        const auto f = zoo::witness(r, s, "bmo-growth");
        const double v = bmo::bmo_norm(s, f, 1.0).norm;
        CHECK(v > 0);
        CHECK(v <= 4);
    }
}
