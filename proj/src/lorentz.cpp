#include "ndmax/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ndmax {

namespace {

double log_sum_exp(const std::vector<double>& logs) {
    if (logs.empty()) return -kInf;
    const double mx = *std::max_element(logs.begin(), logs.end());
    if (std::isinf(mx)) return mx;
    // Sum smallest first for accuracy.
    std::vector<double> w;
    w.reserve(logs.size());
    for (double l : logs) w.push_back(std::exp(l - mx));
    std::sort(w.begin(), w.end());
    double s = 0;
    for (double x : w) s += x;
    return mx + std::log(s);
}

void check_exponents(double p, double q) {
    if (!(p >= 1) || std::isinf(p)) throw std::invalid_argument("p must lie in [1, inf)");
    if (!(q >= 1)) throw std::invalid_argument("q must lie in [1, inf]");
}

}  // namespace

StepProfile step_profile(const std::vector<double>& values, const std::vector<double>& masses) {
    if (values.size() != masses.size()) throw std::invalid_argument("values and masses differ in length");
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return std::fabs(values[a]) > std::fabs(values[b]); });
    StepProfile sp;
    double cum = 0;
    for (std::size_t k : idx) {
        const double v = std::fabs(values[k]);
        if (v == 0) break;
        cum += masses[k];
        if (!sp.v.empty() && sp.v.back() == v)
            sp.T.back() = cum;
        else {
            sp.v.push_back(v);
            sp.T.push_back(cum);
        }
    }
    return sp;
}

double distribution(const std::vector<double>& values, const std::vector<double>& masses, double t) {
    double d = 0;
    for (std::size_t k = 0; k < values.size(); ++k)
        if (std::fabs(values[k]) > t) d += masses[k];
    return d;
}

double distribution(const Space& s, const std::vector<double>& f, double t) {
    return distribution(f, s.masses(), t);
}

double lorentz_norm(const std::vector<double>& values, const std::vector<double>& masses, double p, double q) {
    check_exponents(p, q);
    const StepProfile sp = step_profile(values, masses);
    if (sp.v.empty()) return 0.0;
    if (std::isinf(q)) {
        double best = -kInf;
        for (std::size_t k = 0; k < sp.v.size(); ++k)
            best = std::max(best, std::log(sp.v[k]) + std::log(sp.T[k]) / p);
        return std::exp(best);
    }
    const double e = q / p;
    std::vector<double> logs;
    logs.reserve(sp.v.size());
    for (std::size_t k = 0; k < sp.v.size(); ++k) {
        const double lT = std::log(sp.T[k]);
        // T_k^e - T_{k-1}^e = T_k^e * (1 - (T_{k-1}/T_k)^e)
        double lfactor = 0;
        if (k > 0) lfactor = std::log(-std::expm1(e * (std::log(sp.T[k - 1]) - lT)));
        logs.push_back(q * std::log(sp.v[k]) + std::log(p / q) + e * lT + lfactor);
    }
    return std::exp(log_sum_exp(logs) / q);
}

double lorentz_norm(const Space& s, const std::vector<double>& f, double p, double q) {
    return lorentz_norm(f, s.masses(), p, q);
}

double lorentz_norm_df(const std::vector<double>& values, const std::vector<double>& masses, double p, double q) {
    check_exponents(p, q);
    const StepProfile sp = step_profile(values, masses);
    if (sp.v.empty()) return 0.0;
    // d_f(t) = T_k for t in [v_{k+1}, v_k).
    if (std::isinf(q)) {
        double best = 0;
        for (std::size_t k = 0; k < sp.v.size(); ++k) best = std::max(best, sp.v[k] * std::pow(sp.T[k], 1.0 / p));
        return best;
    }
    // p * int t^{q-1} d(t)^{q/p} dt summed over the level intervals.
    std::vector<double> logs;
    for (std::size_t k = 0; k < sp.v.size(); ++k) {
        const double next = k + 1 < sp.v.size() ? sp.v[k + 1] : 0.0;
        double lfactor = 0;
        if (next > 0) lfactor = std::log(-std::expm1(q * (std::log(next) - std::log(sp.v[k]))));
        logs.push_back(std::log(p / q) + q * std::log(sp.v[k]) + lfactor + (q / p) * std::log(sp.T[k]));
    }
    return std::exp(log_sum_exp(logs) / q);
}

}  // namespace ndmax
