#include "ndmax/random.hpp"

#include <cmath>

namespace ndmax {

Space random_space(std::mt19937_64& rng, const RandomSpaceOptions& opt) {
    std::uniform_int_distribution<int> ncls(opt.min_classes, opt.max_classes);
    std::uniform_int_distribution<int> cnt(1, opt.max_count);
    std::uniform_real_distribution<double> logm(std::log(opt.mass_lo), std::log(opt.mass_hi));
    std::uniform_real_distribution<double> dist(1.0, 2.0);
    std::uniform_int_distribution<int> tie(0, 2);
    std::bernoulli_distribution use_tie(opt.ties ? 0.5 : 0.0);
    const bool tied = use_tie(rng);
    auto draw = [&] { return tied ? 1.0 + 0.5 * tie(rng) : dist(rng); };

    Space s;
    const int n = ncls(rng);
    for (int c = 0; c < n; ++c) s.add_class(cnt(rng), std::exp(logm(rng)), draw(), 1.0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) s.set_dist(a, b, draw());
    return s;
}

std::vector<double> random_function(std::mt19937_64& rng, std::size_t n, double zero_prob, bool signed_values) {
    std::bernoulli_distribution zero(zero_prob), neg(0.5);
    std::uniform_real_distribution<double> logv(std::log(1e-2), std::log(1e2));
    std::vector<double> f(n);
    bool any = false;
    for (auto& v : f) {
        v = zero(rng) ? 0.0 : std::exp(logv(rng));
        if (signed_values && neg(rng)) v = -v;
        any |= v != 0;
    }
    if (!any && n > 0) f[0] = 1;
    return f;
}

}  // namespace ndmax
