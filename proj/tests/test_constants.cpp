#include <random>

#include "brute.hpp"
#include "doctest.h"
#include "ndmax/constants.hpp"
#include "ndmax/random.hpp"
#include "ndmax/util.hpp"
#include "ndmax/zoo.hpp"

using namespace ndmax;

namespace {

double brute_ratio(const Space& s, const std::vector<double>& f, const OperatorSpec& spec) {
    const auto P = brute::points(s);
    const auto pf = brute::lift(s, f);
    const auto Mf = brute::maximal(P, pf, spec.kappa, spec.centered);
    return brute::lorentz(Mf, P.mass, spec.p, spec.r) / brute::lorentz(pf, P.mass, spec.p, spec.q);
}

}  // namespace

TEST_CASE("spec constructor fills the exponent pair per kind") {
    const auto w = OperatorSpec::make(Kind::weak, 1.5);
    CHECK(w.q == 1.5);
    CHECK(std::isinf(w.r));
    const auto s = OperatorSpec::make(Kind::strong, 2, 3, false);
    CHECK((s.q == 2 && s.r == 2 && s.kappa == 3 && !s.centered));
    CHECK_THROWS_AS(OperatorSpec::make(Kind::lorentz, 2, 1, true, 3, 2), std::invalid_argument);
    CHECK(parse_kind("restricted-weak") == Kind::rweak);
    CHECK_THROWS_AS(parse_kind("medium"), std::invalid_argument);
}

TEST_CASE("ratio agrees with a point-by-point evaluation") {
    std::mt19937_64 rng(101);
    RandomSpaceOptions o;
    o.max_classes = 7;
    o.max_count = 3;
    for (int t = 0; t < 40; ++t) {
        const Space s = random_space(rng, o);
        const auto f = random_function(rng, s.size());
        const OperatorSpec specs[] = {OperatorSpec::make(Kind::strong, 1.3, 1.0, true),
                                      OperatorSpec::make(Kind::weak, 2.0, 2.0, false),
                                      OperatorSpec::make(Kind::lorentz, 1.5, 1.5, false, 1.2, 4.0)};
        for (const auto& sp : specs) CHECK(rel_close(ratio(s, f, sp), brute_ratio(s, f, sp), 1e-12));
    }
}

TEST_CASE("exhaustive indicator search dominates every class indicator") {
    std::mt19937_64 rng(55);
    RandomSpaceOptions o;
    o.max_classes = 6;
    o.max_count = 2;
    for (int t = 0; t < 15; ++t) {
        const Space s = random_space(rng, o);
        const auto spec = OperatorSpec::make(Kind::rweak, 1.0, 1.0, false);
        SearchOptions so;
        so.method = Method::indicators;
        const auto est = search_constant(s, spec, so);
        double best = 0;
        const unsigned n = unsigned(s.size());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<double> f(n);
            for (unsigned c = 0; c < n; ++c) f[c] = (mask >> c) & 1u;
            best = std::max(best, brute_ratio(s, f, spec));
        }
        CHECK(est.lower >= best * (1 - 1e-12));
        CHECK(rel_close(ratio(s, est.witness, spec), est.lower, 1e-12));
    }
}

TEST_CASE("weak constant at p = 1 stays below the star bound") {
    for (int tau : {1, 3, 6}) {
        zoo::Recipe r;
        r.kind = "gen1_star";
        r.set("tau", tau);
        const Space s = zoo::build(r);
        for (double kappa : {1.0, 2.0, 4.0}) {
            const auto spec = OperatorSpec::make(Kind::strong, 1.0, kappa, false);
            const auto up = zoo::explicit_upper(r, spec);
            REQUIRE(up.has_value());
            SearchOptions so;
            so.budget = 10;
            const auto est = search_constant(s, spec, so);
            CHECK(est.lower <= *up * (1 + 1e-12));
            CHECK(est.lower >= 1 - 1e-12);
        }
    }
}

TEST_CASE("trend classification reads the log-log slope") {
    std::vector<double> idx, up, flat;
    for (int n = 1; n <= 10; ++n) {
        idx.push_back(n);
        up.push_back(3 * std::sqrt(double(n)));
        flat.push_back(2 + 1.0 / n);
    }
    const auto a = classify_trend(idx, up, {});
    CHECK(a.fit.slope == doctest::Approx(0.5));
    CHECK(a.diverging);
    CHECK_FALSE(classify_trend(idx, flat, {}).diverging);
}
