#pragma once
// Point-by-point reference implementations used as oracles. They never look at
// class structure: every class is expanded into individual points first.

#include <algorithm>
#include <cmath>
#include <vector>

#include "ndmax/space.hpp"

namespace brute {

struct Points {
    std::vector<double> mass;
    std::vector<std::vector<double>> d;
    std::vector<int> origin;
};

inline Points points(const ndmax::Space& s) {
    Points P;
    for (std::size_t a = 0; a < s.size(); ++a)
        for (int k = 0; k < int(s.classes[a].count); ++k) {
            P.origin.push_back(int(a));
            P.mass.push_back(s.classes[a].unit_mass);
        }
    const std::size_t n = P.origin.size();
    P.d.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y) P.d[x][y] = s.dist(P.origin[x], P.origin[y]);
    return P;
}

inline std::vector<double> lift(const ndmax::Space& s, const std::vector<double>& f) {
    std::vector<double> out;
    for (std::size_t a = 0; a < s.size(); ++a)
        for (int k = 0; k < int(s.classes[a].count); ++k) out.push_back(f[a]);
    return out;
}

inline bool in_ball(double d, double r) { return d <= r + 1e-12 * std::max(1.0, r); }

// sup over closed balls B(z, r) (centered: z = x; otherwise any ball containing x)
// of the integral of |f| over B(z, r) divided by the mass of B(z, kappa r).
inline std::vector<double> maximal(const Points& P, const std::vector<double>& f, double kappa, bool centered) {
    const std::size_t n = P.mass.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t z = 0; z < n; ++z) {
        std::vector<double> radii{0.0};
        for (std::size_t y = 0; y < n; ++y) radii.push_back(P.d[z][y]);
        for (double r : radii) {
            double num = 0, den = 0;
            for (std::size_t y = 0; y < n; ++y) {
                if (in_ball(P.d[z][y], r)) num += P.mass[y] * std::fabs(f[y]);
                if (in_ball(P.d[z][y], kappa * r)) den += P.mass[y];
            }
            const double avg = num / den;
            if (centered) {
                out[z] = std::max(out[z], avg);
            } else {
                for (std::size_t x = 0; x < n; ++x)
                    if (in_ball(P.d[z][x], r)) out[x] = std::max(out[x], avg);
            }
        }
    }
    return out;
}

// Lorentz norm from the decreasing rearrangement of the point list:
// (integral of (t^{1/p} f*(t))^q dt/t)^{1/q}.
inline double lorentz(const std::vector<double>& f, const std::vector<double>& mass, double p, double q) {
    std::vector<std::pair<double, double>> vm;
    for (std::size_t x = 0; x < f.size(); ++x)
        if (f[x] != 0) vm.push_back({std::fabs(f[x]), mass[x]});
    std::sort(vm.begin(), vm.end(), [](auto& a, auto& b) { return a.first > b.first; });
    double T = 0, acc = 0;
    for (const auto& [v, m] : vm) {
        const double T1 = T + m;
        if (std::isinf(q))
            acc = std::max(acc, v * std::pow(T1, 1 / p));
        else
            acc += std::pow(v, q) * (p / q) * (std::pow(T1, q / p) - std::pow(T, q / p));
        T = T1;
    }
    return std::isinf(q) ? acc : std::pow(acc, 1 / q);
}

}  // namespace brute
