#include <cmath>

#include "doctest.h"
#include "ndmax/dichotomy.hpp"
#include "ndmax/maximal.hpp"
#include "ndmax/util.hpp"

using namespace ndmax;
using namespace ndmax::dichotomy;

namespace {

LatticeSpec spec_of(const std::string& ex, int R) {
    LatticeSpec s;
    s.example = ex;
    s.R = R;
    return s;
}

}  // namespace

TEST_CASE("unit weights give the square-counting doubling ratio") {
    const auto spec = spec_of("ones", 8);
    std::vector<int> radii{0, 1, 2, 5, 7};
    const auto ratios = doubling_ratio(spec, radii);
    for (std::size_t k = 0; k < radii.size(); ++k) {
        const double r = radii[k];
        CHECK(ratios[k] == doctest::Approx(std::pow((2 * r + 3) / (2 * r + 1), 2)));
    }
    CHECK_THROWS_AS(doubling_ratio(spec, {8}), std::out_of_range);
}

TEST_CASE("lattice weights along the axes") {
    CHECK(lattice_weight("C", 0, 3) == 64);
    CHECK(lattice_weight("C", 2, 3) == 1);
    CHECK(lattice_weight("D", -3, 0) == 512);
    CHECK(lattice_weight("D", 3, 0) == 1);
    CHECK(lattice_weight("A", 2, 0) == doctest::Approx(std::exp(4.0)));
    CHECK_THROWS_AS(lattice_weight("Z", 0, 0), std::invalid_argument);
}

TEST_CASE("lattice indexing is a bijection onto the classes") {
    for (const std::string ex : {"C", "A"}) {
        const auto spec = spec_of(ex, 3);
        const Space s = lattice_build(spec);
        std::vector<int> seen(s.size(), 0);
        const int mrange = is_planar(ex) ? 3 : 0;
        for (int n = -3; n <= 3; ++n)
            for (int m = -mrange; m <= mrange; ++m) ++seen[std::size_t(lattice_index(spec, n, m))];
        for (int v : seen) CHECK(v == 1);
        CHECK_THROWS_AS(lattice_index(spec, 4, 0), std::out_of_range);
        CHECK(validate(s).ok);
    }
}

TEST_CASE("truncation caps are build errors") {
    CHECK_THROWS_AS(lattice_build(spec_of("D", 25)), BuildError);
    CHECK_THROWS_AS(lattice_build(spec_of("C", -1)), std::invalid_argument);
}

TEST_CASE("probe rows match the maximal operator on the truncated lattice") {
    const auto rows = probe("C", {3, 5}, "fC", {{1, 0}, {-1, 0}}, false);
    REQUIRE(rows.size() == 4);
    for (const auto& row : rows) {
        const auto spec = spec_of("C", row.R);
        const Space s = lattice_build(spec);
        const auto Mf = maximal(s, lattice_function(spec, "fC"), 1.0, false);
        CHECK(row.value == doctest::Approx(Mf[std::size_t(lattice_index(spec, row.n, row.m))]));
    }
}

TEST_CASE("interior centered maximum is bounded by the full centered maximal value") {
    const auto spec = spec_of("D", 5);
    const Space s = lattice_build(spec);
    const auto g = lattice_function(spec, "gD");
    const auto Mg = maximal(s, g, 1.0, true);
    for (const auto& [n, m] : std::vector<std::pair<int, int>>{{-1, 0}, {0, 0}, {1, 1}, {2, 0}}) {
        const double in = interior_centered_max(spec, s, g, n, m);
        CHECK(in <= Mg[std::size_t(lattice_index(spec, n, m))] * (1 + 1e-12));
        CHECK(in >= g[std::size_t(lattice_index(spec, n, m))] * (1 - 1e-12));  // radius zero
    }
}

TEST_CASE("ball averages on the unit lattice") {
    const auto spec = spec_of("ones", 4);
    const Space s = lattice_build(spec);
    std::vector<double> f(s.size(), 0.0);
    f[std::size_t(lattice_index(spec, 0, 0))] = 9;
    CHECK(ball_average(spec, s, f, 0, 0, 1) == doctest::Approx(1.0));
    CHECK(ball_average(spec, s, f, 1, 1, 1) == doctest::Approx(1.0));
    CHECK(ball_average(spec, s, f, 2, 2, 1) == 0);
}
