#include "ndmax/bmo.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace ndmax::bmo {

std::vector<Ball> distinct_balls(const Space& s) {
    std::set<std::vector<double>> seen;
    std::vector<Ball> out;
    for (std::size_t c = 0; c < s.size(); ++c)
        for (double d : critical_radii(s, int(c))) {
            Ball b = closed_ball(s, int(c), d);
            if (seen.insert(b.members).second) out.push_back(std::move(b));
        }
    return out;
}

double mean(const Space& s, const Ball& b, const std::vector<double>& f) {
    double num = 0;
    for (std::size_t c = 0; c < s.size(); ++c)
        if (b.members[c] > 0) num += b.members[c] * s.classes[c].unit_mass * f[c];
    return num / b.mass;
}

double mean_oscillation(const Space& s, const Ball& b, const std::vector<double>& f, double p) {
    const double fb = mean(s, b, f);
    double acc = 0;
    for (std::size_t c = 0; c < s.size(); ++c)
        if (b.members[c] > 0) acc += b.members[c] * s.classes[c].unit_mass * std::pow(std::fabs(f[c] - fb), p);
    return acc / b.mass;
}

double double_average(const Space& s, const Ball& b, const std::vector<double>& f, double p) {
    double acc = 0;
    for (std::size_t x = 0; x < s.size(); ++x) {
        if (b.members[x] <= 0) continue;
        const double wx = b.members[x] * s.classes[x].unit_mass / b.mass;
        for (std::size_t y = 0; y < s.size(); ++y) {
            if (b.members[y] <= 0 || x == y) continue;
            acc += wx * (b.members[y] * s.classes[y].unit_mass / b.mass) * std::pow(std::fabs(f[x] - f[y]), p);
        }
    }
    return acc;
}

Ball subset_ball(const Space& s, const std::vector<int>& classes) {
    if (classes.empty()) throw std::invalid_argument("empty subset");
    Ball b;
    b.center = classes.front();
    b.members.assign(s.size(), 0.0);
    for (int c : classes) {
        b.members[c] = s.classes[c].count;
        b.mass += s.class_mass(c);
    }
    return b;
}

BmoResult bmo_norm(const Space& s, const std::vector<Ball>& balls, const std::vector<double>& f, double p) {
    if (!(p >= 1)) throw std::invalid_argument("bmo norm needs p >= 1");
    if (f.size() != s.size()) throw std::invalid_argument("function length differs from the class count");
    BmoResult r;
    double best = -1;
    for (const auto& b : balls) {
        const double osc = mean_oscillation(s, b, f, p);
        if (osc > best) {
            best = osc;
            r.record.ball = b;
            r.record.mean = mean(s, b, f);
            r.record.p_oscillation = osc;
        }
    }
    r.norm = std::pow(std::max(best, 0.0), 1 / p);
    return r;
}

BmoResult bmo_norm(const Space& s, const std::vector<double>& f, double p) {
    return bmo_norm(s, distinct_balls(s), f, p);
}

std::vector<double> power_trick(const Space& s, const std::vector<double>& f, double alpha, const Ball& b) {
    if (!(alpha >= 1)) throw std::invalid_argument("power trick needs alpha >= 1");
    const double fb = mean(s, b, f);
    std::vector<double> g(f.size());
    for (std::size_t c = 0; c < f.size(); ++c) {
        const double v = f[c] - fb;
        g[c] = std::copysign(std::pow(std::fabs(v), 1 / alpha), v);
        if (v == 0) g[c] = 0;
    }
    return g;
}

namespace {

bool exceeds(double dev, double lambda) { return dev > lambda + 1e-12 * std::max(1.0, std::fabs(lambda)); }

}  // namespace

double superlevel_fraction(const Space& s, const Ball& b, const std::vector<double>& f, double lambda) {
    const double fb = mean(s, b, f);
    double acc = 0;
    for (std::size_t c = 0; c < s.size(); ++c)
        if (b.members[c] > 0 && exceeds(std::fabs(f[c] - fb), lambda)) acc += b.members[c] * s.classes[c].unit_mass;
    return acc / b.mass;
}

JnProfile jn_profile(const Space& s, const std::vector<double>& f, std::optional<std::pair<double, double>> constants) {
    JnProfile out;
    const auto balls = distinct_balls(s);
    out.norm = bmo_norm(s, balls, f, 1.0).norm;
    double scale = 0;
    for (double v : f) scale = std::max(scale, std::fabs(v));
    // Averaging a constant leaves roundoff of order 1e-16 * |f|.
    if (!(out.norm > 1e-12 * scale)) throw std::invalid_argument("John-Nirenberg profile of a constant function");

    // Per ball: deviations sorted descending with cumulative mass fractions.
    struct Profile {
        std::vector<double> dev, cum;
    };
    std::vector<Profile> prof;
    std::vector<double> lambdas{0.0};
    for (const auto& b : balls) {
        const double fb = mean(s, b, f);
        std::vector<std::pair<double, double>> dw;
        for (std::size_t c = 0; c < s.size(); ++c)
            if (b.members[c] > 0) dw.push_back({std::fabs(f[c] - fb), b.members[c] * s.classes[c].unit_mass / b.mass});
        std::sort(dw.begin(), dw.end(), [](auto& a, auto& c) { return a.first > c.first; });
        Profile pr;
        double cum = 0;
        for (const auto& [d, w] : dw) {
            cum += w;
            pr.dev.push_back(d);
            pr.cum.push_back(std::min(cum, 1.0));
            lambdas.push_back(d);
        }
        prof.push_back(std::move(pr));
    }
    std::sort(lambdas.begin(), lambdas.end());
    std::vector<double> uniq;
    for (double l : lambdas)
        if (uniq.empty() || exceeds(l, uniq.back())) uniq.push_back(l);

    std::vector<double> fx, fy;
    for (double lambda : uniq) {
        double best = 0;
        for (const auto& pr : prof) {
            // Count of leading entries whose deviation exceeds lambda.
            std::size_t k = 0;
            while (k < pr.dev.size() && exceeds(pr.dev[k], lambda)) ++k;
            if (k > 0) best = std::max(best, pr.cum[k - 1]);
        }
        JnRow row;
        row.lambda = lambda;
        row.fraction = best;
        if (constants) {
            row.bound = constants->first * std::exp(-constants->second * lambda / out.norm);
            row.violated = best > row.bound * (1 + 1e-12);
            out.violations += row.violated;
        }
        if (best > 0 && lambda > 0) {
            fx.push_back(lambda / out.norm);
            fy.push_back(std::log(best));
        }
        out.rows.push_back(row);
    }
    if (fx.size() >= 2) {
        const auto fit = fit_line(fx, fy);
        out.c1 = std::exp(fit.intercept);
        out.c2 = -fit.slope;
    } else {
        out.c1 = 1;
        out.c2 = 0;
    }
    return out;
}

}  // namespace ndmax::bmo
