#include "ndmax/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ndmax/lorentz.hpp"

namespace ndmax::interp {

double DyadicProfile::at(int n) const {
    if (zero() || n > n_max) return 0;
    if (n < n_min) return std::ldexp(tail_base, n);
    return values[std::size_t(n - n_min)];
}

DyadicProfile discretize(const std::vector<double>& values, const std::vector<double>& masses, double p) {
    if (!(p >= 1)) throw std::invalid_argument("discretize needs p >= 1");
    DyadicProfile g;
    double support = 0, vmin = kInf, vmax = 0;
    for (std::size_t c = 0; c < values.size(); ++c) {
        if (values[c] < 0) throw std::invalid_argument("discretize needs a nonnegative function");
        if (values[c] > 0) {
            support += masses[c];
            vmin = std::min(vmin, values[c]);
            vmax = std::max(vmax, values[c]);
        }
    }
    if (support == 0) return g;
    int lo = int(std::floor(std::log2(vmin)));
    while (std::ldexp(1.0, lo) >= vmin) --lo;
    while (std::ldexp(1.0, lo + 1) < vmin) ++lo;
    int hi = int(std::ceil(std::log2(vmax)));
    while (std::ldexp(1.0, hi) < vmax) ++hi;
    while (std::ldexp(1.0, hi - 1) >= vmax) --hi;
    g.n_min = lo;
    g.n_max = hi;
    g.tail_base = std::pow(support, 1 / p);
    for (int n = lo; n <= hi; ++n) {
        const double t = std::ldexp(1.0, n);
        g.values.push_back(t * std::pow(distribution(values, masses, t), 1 / p));
    }
    return g;
}

DyadicProfile discretize(const Space& s, const std::vector<double>& f, double p) {
    return discretize(f, s.masses(), p);
}

namespace {

// Tail cutoff small enough that the omitted geometric remainder is below
// double precision relative to the largest term.
double tiny(const DyadicProfile& g) {
    double top = 0;
    for (double v : g.values) top = std::max(top, v);
    top = std::max(top, g.at(g.n_min));
    return top * 1e-20;
}

}  // namespace

double seq_norm(const DyadicProfile& g, double q) {
    if (g.zero()) return 0;
    if (std::isinf(q)) {
        double m = 0;
        for_each_value(g, 0.0, [&](int, double v) { m = std::max(m, v); });
        return m;
    }
    double acc = 0;
    for_each_value(g, tiny(g), [&](int, double v) { acc += std::pow(v, q); });
    return std::pow(acc, 1 / q);
}

double seq_distribution(const DyadicProfile& g, double y) {
    if (!(y > 0)) throw std::invalid_argument("sequence distribution needs y > 0");
    double count = 0;
    for_each_value(g, y, [&](int, double v) { count += v > y; });
    return count;
}

double power_integral(const DyadicProfile& g, double q, double a, double b) {
    if (!(b > a)) return 0;
    double acc = 0;
    const double floor = a > 0 ? a : tiny(g);
    for_each_value(g, floor, [&](int, double v) {
        if (v > a) acc += (std::pow(std::min(v, b), q) - std::pow(a, q)) / q;
    });
    return acc;
}

double shifted_integral(const DyadicProfile& g, double q, double a) {
    double acc = 0;
    const double floor = a > 0 ? a : tiny(g);
    for_each_value(g, floor, [&](int, double v) {
        if (v > a) acc += std::pow(v - a, q) / q;
    });
    return acc;
}

Split split(const std::vector<double>& values, const std::vector<double>& masses, double p, double lambda) {
    if (!(lambda > 0)) throw std::invalid_argument("split needs lambda > 0");
    const auto g = discretize(values, masses, p);
    Split out;
    for_each_value(g, lambda, [&](int n, double v) {
        if (v > lambda) out.N.push_back(n);
    });
    std::sort(out.N.rbegin(), out.N.rend());
    out.f0.assign(values.size(), 0.0);
    out.f1 = values;
    if (out.N.empty()) return out;
    const double cut = std::ldexp(1.0, out.N.back());
    for (std::size_t c = 0; c < values.size(); ++c)
        if (values[c] >= cut) {
            out.f0[c] = values[c];
            out.f1[c] = 0;
        }
    return out;
}

bool SplitReport::all_hold() const { return violations() == 0; }

int SplitReport::violations() const {
    int v = 0;
    for (const auto& i : items) v += !i.holds;
    return v;
}

namespace {

bool le(double a, double b) { return a <= b * (1 + 1e-9) + 1e-300; }

void add(SplitReport& r, const std::string& name, double lhs, double rhs) { r.items.push_back({name, lhs, rhs, le(lhs, rhs)}); }

// S g restricted to (or off) an index set, as a plain list of values.
std::vector<double> pick(const DyadicProfile& g, const std::vector<int>& N, bool inside, double floor) {
    std::vector<double> out;
    for_each_value(g, floor, [&](int n, double v) {
        const bool in = std::find(N.begin(), N.end(), n) != N.end();
        if (in == inside) out.push_back(v);
    });
    return out;
}

double sum_pow(const std::vector<double>& v, double q) {
    double acc = 0;
    for (double x : v) acc += std::pow(x, q);
    return acc;
}

// Worst violation of d_{Tf}(y) <= d_{Tf0}(y/c) + d_{Tf1}(y/c) over the relevant y.
void check_distribution_split(SplitReport& r, const std::string& name, const DyadicProfile& T, const DyadicProfile& T0,
              const DyadicProfile& T1, double c) {
    if (T.zero()) {
        add(r, name, 0, 0);
        return;
    }
    const double floor = tiny(T) * 1e8;
    std::vector<double> ys;
    for_each_value(T, floor, [&](int, double v) { ys.push_back(v * (1 - 1e-12)); });
    for_each_value(T0, floor / c, [&](int, double v) { ys.push_back(v * c); });
    for_each_value(T1, floor / c, [&](int, double v) { ys.push_back(v * c); });
    double worst_gap = kInf, wl = 0, wr = 0;
    for (double y : ys) {
        if (!(y > floor)) continue;
        const double lhs = seq_distribution(T, y);
        const double rhs = (T0.zero() ? 0 : seq_distribution(T0, y / c)) + (T1.zero() ? 0 : seq_distribution(T1, y / c));
        if (rhs - lhs < worst_gap) {
            worst_gap = rhs - lhs;
            wl = lhs;
            wr = rhs;
        }
    }
    add(r, name, wl, wr);
}

}  // namespace

SplitReport verify_split(const MaximalPlan& plan, const std::vector<double>& masses, const std::vector<double>& f,
                         const SplitParams& P) {
    SplitReport r;
    r.lambda = P.lambda;
    const auto S = discretize(f, masses, P.p);
    r.parts = split(f, masses, P.p, P.lambda);
    const auto& N = r.parts.N;
    const auto S0 = discretize(r.parts.f0, masses, P.p);
    const auto S1 = discretize(r.parts.f1, masses, P.p);

    double gap = 0;
    for (std::size_t c = 0; c < f.size(); ++c) gap = std::max(gap, f[c] - r.parts.f0[c] - r.parts.f1[c]);
    add(r, "pointwise f <= f0 + f1", gap, 0);

    // S f0 agrees with S f on N (and exceeds lambda there); off N both pieces stay below min(lambda, S f).
    double on_n = 0, below = kInf;
    for (int n : N) {
        on_n = std::max(on_n, std::fabs(S0.at(n) - S.at(n)));
        below = std::min(below, S0.at(n));
    }
    add(r, "S f0 = S f on N", on_n, 0);
    if (!N.empty()) r.items.push_back({"S f0 > lambda on N", P.lambda, below, below > P.lambda});
    double off0 = 0, off1 = 0;
    const int lo = std::min({S.n_min, S0.n_min, S1.n_min}) - 80;
    const int hi = std::max({S.n_max, S0.n_max, S1.n_max}) + 1;
    for (int n = lo; n <= hi; ++n) {
        const double cap = std::min(P.lambda, S.at(n));
        if (std::find(N.begin(), N.end(), n) == N.end()) off0 = std::max(off0, S0.at(n) - cap * (1 + 1e-12));
        off1 = std::max(off1, S1.at(n) - cap * (1 + 1e-12));
    }
    add(r, "S f0 <= min(lambda, S f) off N", off0, 0);
    add(r, "S f1 <= min(lambda, S f)", off1, 0);

    const double fl = tiny(S);
    const double qs[2] = {P.q0, P.q1};
    const DyadicProfile* parts[2] = {&S0, &S1};
    for (int i = 0; i < 2; ++i) {
        const double q = qs[i];
        const auto restricted = pick(S, N, i == 0, i == 0 ? P.lambda : fl);
        const double geo = std::pow(1 / (1 - std::pow(2.0, -q / P.p)), 1 / q);
        add(r, i == 0 ? "S f0 by its terms on N" : "S f1 by its terms off N", seq_norm(*parts[i], q), geo * std::pow(sum_pow(restricted, q), 1 / q));
    }

    const double q0 = P.q0, q1 = P.q1, lam = P.lambda;
    const double upper_lhs = sum_pow(pick(S, N, true, lam), q0) / q0;
    const double upper_mid = std::pow(2.0, q0) / (std::pow(2.0, q0) - 1) * power_integral(S, q0, lam / 2, kInf);
    const double upper_rhs = std::pow(2.0, q0) * shifted_integral(S, q0, lam / 4);
    add(r, "sum on N vs integral above lambda/2", upper_lhs, upper_mid);
    add(r, "integral above lambda/2 vs shifted integral", upper_mid, upper_rhs);

    const double lower_lhs = sum_pow(pick(S, N, false, fl), q1) / q1;
    const double lower_mid = power_integral(S, q1, 0, lam);
    const double lower_rhs = std::pow(4.0, q1) * power_integral(S, q1, 0, lam / 4);
    add(r, "sum off N vs integral below lambda", lower_lhs, lower_mid);
    add(r, "integral below lambda vs below lambda/4", lower_mid, lower_rhs);

    const auto T = discretize(plan.apply(f), masses, P.p);
    const auto T0 = discretize(plan.apply(r.parts.f0), masses, P.p);
    const auto T1 = discretize(plan.apply(r.parts.f1), masses, P.p);
    check_distribution_split(r, "distribution split, factor 2^{1/p}", T, T0, T1, std::pow(2.0, 1 / P.p));
    check_distribution_split(r, "distribution split, factor 2^{1+1/p}", T, T0, T1, std::pow(2.0, 1 + 1 / P.p));
    return r;
}

SplitReport verify_split(const Space& s, const std::vector<double>& f, const SplitParams& params) {
    return verify_split(MaximalPlan(s, 1.0, params.centered), s.masses(), f, params);
}

double box_ratio(const std::vector<double>& values, const std::vector<double>& masses, double p, double q) {
    const double den = lorentz_norm(values, masses, p, q);
    if (!(den > 0)) throw std::invalid_argument("box ratio of the zero function");
    return seq_norm(discretize(values, masses, p), q) / den;
}

TauXi tau_xi(double q0, double q1, double r0, double r1, double theta) {
    auto inv = [](double x) { return std::isinf(x) ? 0.0 : 1 / x; };
    TauXi t;
    t.q_theta = 1 / ((1 - theta) * inv(q0) + theta * inv(q1));
    const double ir = (1 - theta) * inv(r0) + theta * inv(r1);
    t.r_theta = ir > 0 ? 1 / ir : kInf;
    if (std::isinf(r1)) {
        if (std::isinf(q1)) {
            t.tau = 0;
            t.xi = 1;
        } else {
            t.tau = t.q_theta / q1;
            t.xi = q1 / (q1 - t.q_theta);
        }
        return t;
    }
    t.tau = t.q_theta * (r1 / q1 - r0 / q0) / (r1 - r0);
    t.xi = (inv(t.q_theta) * (inv(r1) - inv(t.r_theta))) / (inv(t.r_theta) * (inv(q1) - inv(t.q_theta)));
    return t;
}

double lambda_rule(double y, double s_norm, const TauXi& t) {
    return 4 * std::pow(s_norm, -t.tau * t.xi) * std::pow(y, t.xi);
}

}  // namespace ndmax::interp
