#pragma once

#include <random>
#include <vector>

#include "ndmax/space.hpp"

namespace ndmax {

// Random spaces whose distances all lie in [1, 2], so the triangle inequality
// holds automatically. With `ties` set, distances are drawn from {1, 1.5, 2}
// half of the time to exercise equal-radius handling.
struct RandomSpaceOptions {
    int min_classes = 1;
    int max_classes = 12;
    int max_count = 5;
    double mass_lo = 1e-2;
    double mass_hi = 1e2;
    bool ties = true;
};

Space random_space(std::mt19937_64& rng, const RandomSpaceOptions& opt = {});

// Nonnegative values, each zero with probability `zero_prob`; values are
// log-uniform on [1e-2, 1e2]. With `signed_values`, signs are random.
std::vector<double> random_function(std::mt19937_64& rng, std::size_t n, double zero_prob = 0.3,
                                    bool signed_values = false);

}  // namespace ndmax
