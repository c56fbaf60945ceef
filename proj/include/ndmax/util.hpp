#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ndmax {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Relative tolerance used to decide whether two distances coincide.
inline constexpr double kTieTol = 1e-12;

inline double tie_slack(double d) { return kTieTol * std::max(1.0, std::fabs(d)); }

// a <= b up to the tie tolerance
inline bool dist_le(double a, double b) { return a <= b + tie_slack(b); }

inline bool dist_eq(double a, double b) { return std::fabs(a - b) <= tie_slack(std::max(a, b)); }

// Error raised when a construction cannot be realized within its caps.
struct BuildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 12 significant digits, the fixed output precision of every report.
std::string fmt12(double x);

inline bool rel_close(double a, double b, double tol) {
    if (a == b) return true;
    if (std::isinf(a) || std::isinf(b)) return false;
    return std::fabs(a - b) <= tol * std::max({1e-300, std::fabs(a), std::fabs(b)});
}

// Least-squares slope and intercept of y against x.
struct LinearFit {
    double slope = 0;
    double intercept = 0;
    double slope_stderr = 0;
};
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace ndmax
