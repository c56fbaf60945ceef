#pragma once

#include <vector>

#include "ndmax/space.hpp"

namespace ndmax {

// Decreasing rearrangement of |f| as a step function: f* equals v[k] on
// [T[k-1], T[k]) with T[-1] = 0. Zero values are dropped.
struct StepProfile {
    std::vector<double> T;
    std::vector<double> v;
};

StepProfile step_profile(const std::vector<double>& values, const std::vector<double>& masses);

// Mass of {|f| > t}.
double distribution(const std::vector<double>& values, const std::vector<double>& masses, double t);
double distribution(const Space& s, const std::vector<double>& f, double t);

// L^{p,q} quasinorm from the rearrangement; q may be infinite.
double lorentz_norm(const std::vector<double>& values, const std::vector<double>& masses, double p, double q);
double lorentz_norm(const Space& s, const std::vector<double>& f, double p, double q);

// The same quasinorm evaluated through the distribution function instead.
double lorentz_norm_df(const std::vector<double>& values, const std::vector<double>& masses, double p, double q);

}  // namespace ndmax
