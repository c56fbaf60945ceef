#pragma once

#include <optional>
#include <vector>

#include "ndmax/space.hpp"

namespace ndmax::bmo {

// Functions in this module are signed: one real per class.

// Every distinct closed ball, deduplicated by its member counts.
std::vector<Ball> distinct_balls(const Space& s);

double mean(const Space& s, const Ball& b, const std::vector<double>& f);
// (1/|B|) * integral over B of |f - f_B|^p
double mean_oscillation(const Space& s, const Ball& b, const std::vector<double>& f, double p);
// (1/|B|^2) * double integral over B x B of |f(x) - f(y)|^p
double double_average(const Space& s, const Ball& b, const std::vector<double>& f, double p);
// Ball made of whole classes (used for named subsets such as T_n).
Ball subset_ball(const Space& s, const std::vector<int>& classes);

struct OscillationRecord {
    Ball ball;
    double mean = 0;
    double p_oscillation = 0;
};

struct BmoResult {
    double norm = 0;
    OscillationRecord record;
};

BmoResult bmo_norm(const Space& s, const std::vector<double>& f, double p);
BmoResult bmo_norm(const Space& s, const std::vector<Ball>& balls, const std::vector<double>& f, double p);

// sgn(f - f_B) |f - f_B|^{1/alpha}
std::vector<double> power_trick(const Space& s, const std::vector<double>& f, double alpha, const Ball& b);

// |{x in B : |f(x) - f_B| > lambda}| / |B|
double superlevel_fraction(const Space& s, const Ball& b, const std::vector<double>& f, double lambda);

struct JnRow {
    double lambda = 0;
    double fraction = 0;  // sup over balls
    double bound = 0;     // c1 exp(-c2 lambda / ||f||_*), when constants were supplied
    bool violated = false;
};

struct JnProfile {
    double norm = 0;  // ||f||_{*,1}
    double c1 = 0, c2 = 0;  // least-squares fit of log(fraction) against lambda / norm
    std::vector<JnRow> rows;
    int violations = 0;
};

JnProfile jn_profile(const Space& s, const std::vector<double>& f, std::optional<std::pair<double, double>> constants = {});

}  // namespace ndmax::bmo
