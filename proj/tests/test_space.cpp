#include <random>

#include "brute.hpp"
#include "doctest.h"
#include "ndmax/random.hpp"
#include "ndmax/space.hpp"
#include "ndmax/util.hpp"

using namespace ndmax;

namespace {

Space triangle(double ab, double bc, double ac) {
    Space s;
    for (int k = 0; k < 3; ++k) s.add_class(1, 1.0, 1.0, 1.0);
    s.set_dist(0, 1, ab);
    s.set_dist(1, 2, bc);
    s.set_dist(0, 2, ac);
    return s;
}

}  // namespace

TEST_CASE("validate accepts a metric and rejects a triangle violation") {
    CHECK(validate(triangle(1, 1, 2)).ok);
    const auto bad = validate(triangle(1, 1, 2.5));
    CHECK_FALSE(bad.ok);
    bool mentions = false;
    for (const auto& i : bad.issues) mentions |= i.find("triangle") != std::string::npos;
    CHECK(mentions);
}

TEST_CASE("validate flags nonpositive masses and counts") {
    Space s = triangle(1, 1, 1);
    s.classes[1].unit_mass = 0;
    CHECK_FALSE(validate(s).ok);
    s = triangle(1, 1, 1);
    s.classes[2].count = 1.5;
    CHECK_FALSE(validate(s).ok);
}

TEST_CASE("random spaces are valid metrics") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) CHECK(validate(random_space(rng)).ok);
}

TEST_CASE("json round trip preserves the space and functions") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        const Space s = random_space(rng);
        const Space back = space_from_json(to_json(s));
        REQUIRE(back.size() == s.size());
        CHECK(to_json(back) == to_json(s));
        const auto f = random_function(rng, s.size(), 0.3, true);
        CHECK(function_from_json(function_to_json(f)) == f);
    }
}

TEST_CASE("expansion has one singleton class per point") {
    std::mt19937_64 rng(5);
    const Space s = random_space(rng);
    const auto e = expand(s);
    CHECK(double(e.space.size()) == s.expanded_points());
    CHECK(e.space.total_mass() == doctest::Approx(s.total_mass()).epsilon(1e-12));
    for (std::size_t x = 0; x < e.space.size(); ++x) CHECK(e.space.classes[x].count == 1);
    CHECK_THROWS_AS(expand(s, 0), BuildError);
}

TEST_CASE("closed ball mass matches a point count") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 30; ++t) {
        const Space s = random_space(rng);
        const auto P = brute::points(s);
        for (int c = 0; c < int(s.size()); ++c) {
            int x = 0;
            while (P.origin[x] != c) ++x;
            for (double r : critical_radii(s, c)) {
                double m = 0;
                for (std::size_t y = 0; y < P.mass.size(); ++y)
                    if (brute::in_ball(P.d[x][y], r)) m += P.mass[y];
                CHECK(closed_ball_mass(s, c, r) == doctest::Approx(m).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("combine keeps components apart and halves their masses") {
    std::mt19937_64 rng(21);
    RandomSpaceOptions o;
    o.max_classes = 4;
    const Space a = random_space(rng, o), b = random_space(rng, o);
    const Space c = combine({a, b}, CombineMode::plain);
    CHECK(validate(c).ok);
    CHECK(c.size() == a.size() + b.size());
    double m1 = 0, m2 = 0;
    for (int x : c.subset("component:1")) m1 += c.class_mass(x);
    for (int x : c.subset("component:2")) m2 += c.class_mass(x);
    CHECK(m1 == doctest::Approx(0.5));
    CHECK(m2 == doctest::Approx(0.25));
    CHECK(c.dist(c.subset("component:1")[0], c.subset("component:2")[0]) == 2.0);
}
