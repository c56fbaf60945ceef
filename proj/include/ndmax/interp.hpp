#pragma once

#include <string>
#include <vector>

#include "ndmax/maximal.hpp"
#include "ndmax/space.hpp"

namespace ndmax::interp {

// S g(n) = 2^n d_g(2^n)^{1/p} on the integers. Values are stored on the window
// [n_min, n_max]; below the window the distribution equals the support mass,
// so S g(n) = tail_base * 2^n there, and above it S g vanishes.
struct DyadicProfile {
    int n_min = 0;
    int n_max = -1;
    std::vector<double> values;
    double tail_base = 0;

    bool zero() const { return tail_base == 0; }
    double at(int n) const;
};

DyadicProfile discretize(const std::vector<double>& values, const std::vector<double>& masses, double p);
DyadicProfile discretize(const Space& s, const std::vector<double>& f, double p);

// Visits every nonzero S g(n), window first, then the tail until its terms
// drop below `floor` (a positive cutoff; the tail is geometric).
template <class Fn>
void for_each_value(const DyadicProfile& g, double floor, Fn&& fn) {
    if (g.zero()) return;
    for (int n = g.n_min; n <= g.n_max; ++n)
        if (g.at(n) > 0) fn(n, g.at(n));
    for (int n = g.n_min - 1;; --n) {
        const double v = g.at(n);
        if (!(v > floor) || n < g.n_min - 4000) break;
        fn(n, v);
    }
}

// l^q(Z) norm, q possibly infinite.
double seq_norm(const DyadicProfile& g, double q);
// #{n : S g(n) > y}, y > 0.
double seq_distribution(const DyadicProfile& g, double y);
// integral over (a, b) of y^{q-1} #{S g > y} dy
double power_integral(const DyadicProfile& g, double q, double a, double b);
// integral over (a, inf) of (y - a)^{q-1} #{S g > y} dy
double shifted_integral(const DyadicProfile& g, double q, double a);

struct Split {
    std::vector<int> N;  // {n : S f(n) > lambda}, decreasing
    std::vector<double> f0, f1;
};

// f0 keeps f on {f >= 2^{n_m}} with n_m the smallest element of N; f1 keeps the rest.
Split split(const std::vector<double>& values, const std::vector<double>& masses, double p, double lambda);

struct Inequality {
    std::string name;
    double lhs = 0;
    double rhs = 0;
    bool holds = true;
};

struct SplitReport {
    double lambda = 0;
    Split parts;
    std::vector<Inequality> items;
    bool all_hold() const;
    int violations() const;
};

struct SplitParams {
    double p = 1, q0 = 1, q1 = 2, lambda = 1;
    bool centered = true;
};

SplitReport verify_split(const Space& s, const std::vector<double>& f, const SplitParams& params);
SplitReport verify_split(const MaximalPlan& plan, const std::vector<double>& masses, const std::vector<double>& f,
                         const SplitParams& params);

// ||S g||_q / ||g||_{p,q}
double box_ratio(const std::vector<double>& values, const std::vector<double>& masses, double p, double q);

// Exponents of the lambda-selection rule for interpolation between (q0, r0) and (q1, r1).
struct TauXi {
    double q_theta = 0, r_theta = 0, tau = 0, xi = 0;
};
TauXi tau_xi(double q0, double q1, double r0, double r1, double theta);
// lambda(y) = 4 ||S f||_{q_theta}^{-tau xi} y^xi
double lambda_rule(double y, double s_norm, const TauXi& t);

}  // namespace ndmax::interp
