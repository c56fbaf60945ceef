#include <random>

#include "brute.hpp"
#include "doctest.h"
#include "ndmax/lorentz.hpp"
#include "ndmax/random.hpp"
#include "ndmax/util.hpp"

using namespace ndmax;

TEST_CASE("indicator norm has the closed form (p/q)^{1/q} |E|^{1/p}") {
    const std::vector<double> f{1, 1, 0, 1}, m{0.5, 2, 7, 0.25};
    const double E = 2.75;
    for (double p : {1.0, 1.5, 3.0})
        for (double q : {1.0, 2.0, 5.0}) CHECK(rel_close(lorentz_norm(f, m, p, q), std::pow(p / q, 1 / q) * std::pow(E, 1 / p), 1e-13));
    CHECK(rel_close(lorentz_norm(f, m, 2.0, kInf), std::sqrt(E), 1e-13));
}

TEST_CASE("p = q gives the Lebesgue norm") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 50; ++t) {
        const Space s = random_space(rng);
        const auto f = random_function(rng, s.size(), 0.3, true);
        const auto m = s.masses();
        for (double p : {1.0, 2.0, 3.5}) {
            double acc = 0;
            for (std::size_t c = 0; c < f.size(); ++c) acc += m[c] * std::pow(std::fabs(f[c]), p);
            CHECK(rel_close(lorentz_norm(f, m, p, p), std::pow(acc, 1 / p), 1e-12));
        }
    }
}

TEST_CASE("Lorentz norm matches the rearrangement and distribution forms") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        const Space s = random_space(rng);
        const auto f = random_function(rng, s.size(), 0.3, t % 2 == 0);
        const auto m = s.masses();
        const auto pf = brute::lift(s, f);
        std::vector<double> pm;
        for (std::size_t a = 0; a < s.size(); ++a)
            for (int k = 0; k < int(s.classes[a].count); ++k) pm.push_back(s.classes[a].unit_mass);
        for (double p : {1.0, 1.7, 4.0})
            for (double q : {1.0, 1.3, 2.0, 6.0, kInf}) {
                const double v = lorentz_norm(f, m, p, q);
                CHECK(rel_close(v, brute::lorentz(pf, pm, p, q), 1e-12));
                CHECK(rel_close(v, lorentz_norm_df(f, m, p, q), 1e-12));
            }
    }
}

TEST_CASE("Lorentz norm by quadrature of the distribution function") {
    // p * int_0^inf t^{q-1} d(t)^{q/p} dt, midpoint rule on each level interval.
    const std::vector<double> f{3, 1, 0.5, 2}, m{0.2, 1.5, 4, 0.7};
    const double p = 1.5, q = 2.5;
    const double top = 3;
    const int steps = 400000;
    double acc = 0;
    for (int k = 0; k < steps; ++k) {
        const double t = (k + 0.5) * top / steps;
        acc += std::pow(t, q - 1) * std::pow(distribution(f, m, t), q / p);
    }
    acc *= p * top / steps;
    CHECK(lorentz_norm(f, m, p, q) == doctest::Approx(std::pow(acc, 1 / q)).epsilon(1e-5));
}

TEST_CASE("embedding between second exponents") {
    // ||f||_{p,r} <= (q/p)^{1/q - 1/r} ||f||_{p,q} for q < r
    std::mt19937_64 rng(31);
    const double qs[] = {1.0, 1.5, 2.0, 4.0, kInf};
    for (int t = 0; t < 40; ++t) {
        const Space s = random_space(rng);
        const auto f = random_function(rng, s.size());
        const auto m = s.masses();
        for (double p : {1.0, 2.0, 3.0})
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j) {
                    const double q = qs[i], r = qs[j];
                    const double c = std::pow(q / p, 1 / q - (std::isinf(r) ? 0 : 1 / r));
                    CHECK(lorentz_norm(f, m, p, r) <= c * lorentz_norm(f, m, p, q) * (1 + 1e-12));
                }
    }
}

TEST_CASE("zero function and bad exponents") {
    CHECK(lorentz_norm({0, 0}, {1, 1}, 2, 2) == 0);
    CHECK_THROWS_AS(lorentz_norm({1}, {1}, 0.5, 1), std::invalid_argument);
}

TEST_CASE("distribution function counts mass strictly above the level") {
    const std::vector<double> f{3, -1, 2}, m{1, 2, 4};
    CHECK(distribution(f, m, 0.5) == 7);
    CHECK(distribution(f, m, 1) == 5);
    CHECK(distribution(f, m, 2) == 1);
    CHECK(distribution(f, m, 3) == 0);
}
