#include "ndmax/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include "ndmax/bmo.hpp"
#include "ndmax/constants.hpp"
#include "ndmax/dichotomy.hpp"
#include "ndmax/interp.hpp"
#include "ndmax/lorentz.hpp"
#include "ndmax/maximal.hpp"
#include "ndmax/random.hpp"
#include "ndmax/scan.hpp"

namespace ndmax::checks {

using nlohmann::json;

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::evidence: return "evidence";
    }
    return "fail";
}

json num(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return std::strtod(fmt12(x).c_str(), nullptr);
}

json LemmaCheck::to_json() const {
    return json{{"id", id},           {"summary", summary},   {"parameters", parameters},
                {"verdict", verdict_name(verdict)}, {"failures", failures}, {"artifacts", artifacts}};
}

namespace {

std::string format(const char* fmt, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    return buf;
}

const char* c12(double x) {
    static thread_local std::string slot[8];
    static thread_local int next = 0;
    std::string& s = slot[next++ % 8];
    s = fmt12(x);
    return s.c_str();
}

// Parameters with defaults; every value used is recorded in the report.
struct Params {
    const CheckOptions& opt;
    json rec = json::object();

    double num(const std::string& key, double fallback) {
        double v = fallback;
        if (auto it = opt.overrides.find(key); it != opt.overrides.end()) {
            std::size_t used = 0;
            v = std::stod(it->second, &used);
            if (used != it->second.size()) throw std::invalid_argument("parameter " + key + " is not a number");
        }
        rec[key] = checks::num(v);
        return v;
    }
    int integer(const std::string& key, int fallback) {
        const double v = num(key, fallback);
        if (v != std::floor(v)) throw std::invalid_argument("parameter " + key + " must be an integer");
        return int(v);
    }
    void reject_unused() const {
        for (const auto& [k, v] : opt.overrides)
            if (!rec.contains(k)) throw std::invalid_argument("unknown parameter for this check: " + k);
    }
};

struct Ctx {
    json art = json::object();
    std::vector<std::string> failures;

    bool expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
        return ok;
    }
};

bool leq(double a, double b) { return a <= b * (1 + 1e-12) + 1e-300; }

zoo::Recipe recipe(const std::string& kind, std::initializer_list<std::pair<const char*, double>> kv) {
    zoo::Recipe r;
    r.kind = kind;
    for (const auto& [k, v] : kv) r.set(k, v);
    return r;
}

json vec(const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(num(x));
    return a;
}

// Re-evaluating the stored witness must reproduce the reported bound.
void certify(Ctx& C, const Space& s, const NormEstimate& est, const OperatorSpec& spec, const std::string& where) {
    const double again = ratio(s, est.witness, spec);
    C.expect(rel_close(again, est.lower, 1e-9), where + ": stored witness does not reproduce the bound");
}

// ------------------------------------------------------------------ star

void star_weak(Params& P, Ctx& C, const CheckOptions& o) {
    const int n_max = P.integer("n_max", 10);
    const int restarts = P.integer("restarts", 50);
    json rows = json::array();
    for (int n = 1; n <= n_max; ++n) {
        const auto r = recipe("gen1_s2_1", {{"n", n}});
        const Space s = zoo::build(r, o.caps);
        const auto f = zoo::witness(r, s, "hub-indicator");
        const auto M = maximal(s, f, 1.0, true);
        double err = std::fabs(M[s.subset("hub")[0]] - 1);
        for (int c : s.subset("leaves")) err = std::max(err, std::fabs(M[c] - 1 / (1 + s.classes[c].unit_mass)));
        const double l1 = lorentz_norm(s, M, 1, 1);

        const auto spec = OperatorSpec::make(Kind::weak, 1, 1, false);
        SearchOptions so;
        so.budget = restarts;
        so.seed = o.seed + n;
        so.witnesses = {{"hub-indicator", f}};
        const auto est = search_constant(s, spec, so);
        const double bound = zoo::explicit_upper(r, spec).value_or(kInf);

        C.expect(err <= 1e-12, format("n=%d: centered hub maximal values off by %s", n, c12(err)));
        C.expect(l1 >= n / 2.0, format("n=%d: ||M 1_hub||_1 = %s below n/2", n, c12(l1)));
        C.expect(leq(est.lower, bound), format("n=%d: weak constant lower bound %s exceeds %s", n, c12(est.lower), c12(bound)));
        certify(C, s, est, spec, format("n=%d", n));
        rows.push_back({{"n", n}, {"max_abs_error", num(err)}, {"l1_norm", num(l1)}, {"weak_lower", num(est.lower)},
                        {"method", est.method}, {"proof_constant", num(bound)}});
    }
    C.art["rows"] = rows;
}

void t_centered(Params& P, Ctx& C, const CheckOptions& o) {
    const double p0 = P.num("p0", 2);
    const int n_max = P.integer("n_max", 8);
    const int restarts = P.integer("restarts", 20);
    const double p = P.num("p_restricted", 1.5);
    json rows = json::array();
    for (int n = 1; n <= n_max; ++n) {
        const auto r = recipe("gen2_t1", {{"p0", p0}, {"n", n}});
        const Space s = zoo::build(r, o.caps);
        const auto spec = OperatorSpec::make(Kind::strong, 1, 1, true);
        SearchOptions so;
        so.budget = restarts;
        so.seed = o.seed + n;
        so.exhaustive_classes = 16;
        so.witnesses = {{"hub-indicator", zoo::witness(r, s, "hub-indicator")}};
        const auto est = search_constant(s, spec, so);
        const double bound = zoo::explicit_upper(r, spec).value_or(kInf);
        C.expect(leq(est.lower, bound), format("n=%d: centered strong lower bound %s exceeds %s", n, c12(est.lower), c12(bound)));
        certify(C, s, est, spec, format("n=%d", n));
        rows.push_back({{"n", n}, {"classes", s.size()}, {"strong_lower", num(est.lower)}, {"method", est.method},
                        {"proof_constant", num(bound)}});
    }
    C.art["centered_strong"] = rows;

    json rw = json::array();
    for (int n : {4, 8, 16}) {
        const auto r = recipe("gen2_t1", {{"p0", p0}, {"n", n}});
        const Space s = zoo::build(r, o.caps);
        const double tau = double(s.subset("mid").size());
        const double val = ratio(s, zoo::witness(r, s, "hub-indicator"), OperatorSpec::make(Kind::rweak, p, 1, false));
        const double lower = std::pow(n * tau, 1 / p) / (2 * (n + 2));
        C.expect(val >= lower, format("n=%d: restricted weak witness ratio %s below %s", n, c12(val), c12(lower)));
        rw.push_back({{"n", n}, {"tau", num(tau)}, {"ratio", num(val)}, {"proof_lower", num(lower)}});
    }
    C.art["restricted_weak"] = rw;
}

void basic_star_grid(Params& P, Ctx& C, const CheckOptions& o) {
    const double max_slack = P.num("max_slack", 3);
    const int restarts = P.integer("restarts", 10);
    json rows = json::array();
    double worst_slack = 0;
    int over_stated = 0;
    for (int tau : {1, 2, 4, 8, 16})
        for (double m : {1.0, 2.0, 4.0, 8.0})
            for (double d : {1.5, 2.0})
                for (double p : {1.0, 2.0}) {
                    const auto r = recipe("gen1_star", {{"tau", tau}, {"m", m}, {"d", d}});
                    const Space s = zoo::build(r, o.caps);
                    const auto hub = zoo::witness(r, s, "hub-indicator");
                    const double lo = std::pow(tau * m, 1 / p) / (2 * m);
                    const double hi = std::pow(std::pow(2.0, p - 1) * (1 + tau * std::pow(m, 1 - p) + std::pow(2.0, p - 1)), 1 / p);
                    for (double kappa : {1.0, (1 + d) / 2}) {
                        for (bool centered : {true, false}) {
                            const double v = ratio(s, hub, OperatorSpec::make(Kind::weak, p, kappa, centered));
                            C.expect(v >= lo * (1 - 1e-12) && leq(v, hi),
                                     format("tau=%d m=%s d=%s p=%s kappa=%s %s: hub weak ratio %s outside [%s, %s]", tau,
                                            c12(m), c12(d), c12(p), c12(kappa), centered ? "centered" : "noncentered",
                                            c12(v), c12(lo), c12(hi)));
                            rows.push_back({{"tau", tau}, {"m", num(m)}, {"d", num(d)}, {"p", num(p)}, {"kappa", num(kappa)},
                                            {"centered", centered}, {"hub_weak", num(v)}, {"lower", num(lo)},
                                            {"upper", num(hi)}});
                        }
                    }
                    for (double kappa : {d, 2 * d}) {
                        const auto spec = OperatorSpec::make(Kind::strong, p, kappa, false);
                        SearchOptions so;
                        so.budget = restarts;
                        so.seed = o.seed;
                        so.witnesses = {{"hub-indicator", hub}};
                        const auto est = search_constant(s, spec, so);
                        const double stated = std::pow(2.0, (p - 1) / p);
                        const double slack = est.lower / stated - 1;
                        worst_slack = std::max(worst_slack, slack);
                        over_stated += est.lower > stated * (1 + 1e-12);
                        C.expect(slack <= max_slack, format("tau=%d m=%s d=%s p=%s kappa=%s: slack %s above %s", tau,
                                                            c12(m), c12(d), c12(p), c12(kappa), c12(slack), c12(max_slack)));
                        const double proven = zoo::explicit_upper(r, spec).value_or(kInf);
                        C.expect(leq(est.lower, proven), format("tau=%d m=%s d=%s p=%s kappa=%s: lower bound %s above %s", tau,
                                                                c12(m), c12(d), c12(p), c12(kappa), c12(est.lower), c12(proven)));
                        rows.push_back({{"tau", tau}, {"m", num(m)}, {"d", num(d)}, {"p", num(p)}, {"kappa", num(kappa)},
                                        {"centered", false}, {"strong_lower", num(est.lower)},
                                        {"stated_constant", num(stated)}, {"slack", num(slack)},
                                        {"proven_constant", num(proven)}});
                    }
                }
    C.art["rows"] = rows;
    C.art["max_slack_measured"] = num(worst_slack);
    C.art["cases_above_stated_constant"] = over_stated;
}

void segment_suite(Params& P, Ctx& C, const CheckOptions& o) {
    const int n_max = P.integer("n_max", 12);
    const int restarts = P.integer("restarts", 20);
    json rows = json::array();
    for (int n = 1; n <= n_max; ++n) {
        // Subtype 1 with kappa = 2.
        const auto r1 = recipe("segment", {{"n", n}, {"subtype", 1}, {"kappa", 2}});
        const Space s1 = zoo::build(r1, o.caps);
        const auto x0 = zoo::witness(r1, s1, "hub-indicator");
        const auto M = maximal(s1, x0, 2.0, true);
        double worst = kInf;
        for (int j = 0; j <= n; ++j) worst = std::min(worst, M[j] * (j + 1));
        C.expect(worst >= 1 - 1e-12, format("n=%d: M_2 1_{x0}(x_j) (j+1) reaches %s < 1", n, c12(worst)));
        const auto weak = OperatorSpec::make(Kind::weak, 1, 2, false);
        SearchOptions so;
        so.budget = restarts;
        so.seed = o.seed + n;
        so.witnesses = {{"x0-indicator", x0}};
        const auto est1 = search_constant(s1, weak, so);
        const double b1 = zoo::explicit_upper(r1, weak).value_or(kInf);
        C.expect(leq(est1.lower, b1), format("n=%d: subtype-1 weak lower bound %s exceeds %s", n, c12(est1.lower), c12(b1)));
        certify(C, s1, est1, weak, format("subtype 1, n=%d", n));

        // Subtype 2 with kappa = 3.
        const auto r2 = recipe("segment", {{"n", n}, {"subtype", 2}, {"kappa", 3}});
        const Space s2 = zoo::build(r2, o.caps);
        const auto y0 = zoo::witness(r2, s2, "hub-indicator");
        const auto strong_c = OperatorSpec::make(Kind::strong, 1, 3, true);
        SearchOptions sa;
        sa.method = Method::ascent;
        sa.budget = restarts;
        sa.seed = o.seed + 1000 + n;
        const auto est2 = search_constant(s2, strong_c, sa);
        const double b2 = zoo::explicit_upper(r2, strong_c).value_or(kInf);
        C.expect(leq(est2.lower, b2), format("n=%d: subtype-2 centered strong lower bound %s exceeds %s", n, c12(est2.lower), c12(b2)));
        const double nc = ratio(s2, y0, OperatorSpec::make(Kind::strong, 1, 3, false));
        C.expect(nc >= (n - 1) / 2.0 * (1 - 1e-12), format("n=%d: noncentered witness ratio %s below (n-1)/2", n, c12(nc)));
        rows.push_back({{"n", n}, {"min_M2_times_j_plus_1", num(worst)}, {"subtype1_weak_lower", num(est1.lower)},
                        {"subtype2_centered_strong_lower", num(est2.lower)}, {"subtype2_noncentered_witness", num(nc)}});
    }
    C.art["rows"] = rows;
}

// ------------------------------------------------------------- type III

void fiber_identity(Params& P, Ctx& C, const CheckOptions& o) {
    const double p = P.num("p", 2);
    const int N = P.integer("N", 2), M = P.integer("M", 2);
    const double K = P.num("K", 2), L = P.num("L", 2);
    const Space s = zoo::type3(p, N, M, K, L);
    const auto& T = *s.type3;
    const auto masses = s.masses();
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> logv(-2, 2);
    const double rs[2] = {2, kInf};
    double worst = 0;
    json rows = json::array();
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < M; ++k) {
            std::vector<double> f(s.size(), 0.0);
            for (int c : T.lower[i]) f[c] = std::exp(logv(rng));
            const auto A = fiber_average(s, f, k, i);
            const double scale = T.m[i] / (K * T.alpha[k]);
            const double c = K * L * T.alpha[k] * T.beta[k] * T.hN() / (T.m[i] * T.h[i]);
            const double expected = scale * std::pow(c, 1 / p);
            const double closed = std::pow(K, -1 + 1 / p) * std::pow(L, 1 / p) * std::pow(T.m[i], 1 - 1 / p) *
                                  std::pow(T.h[i], -1 / p) * std::pow(T.alpha[k], -1 + 1 / p) *
                                  std::pow(T.beta[k], 1 / p) * std::pow(T.hN(), 1 / p);
            C.expect(rel_close(expected, closed, 1e-12), format("i=%d k=%d: scaling factors disagree", i, k));
            for (double r : rs) {
                const double got = lorentz_norm(A, masses, p, r) / lorentz_norm(f, masses, p, r);
                worst = std::max(worst, std::fabs(got / expected - 1));
                C.expect(rel_close(got, expected, 1e-9),
                         format("i=%d k=%d r=%s: ratio %s, expected %s", i, k, c12(r), c12(got), c12(expected)));
                rows.push_back({{"i", i + 1}, {"k", k + 1}, {"r", num(r)}, {"ratio", num(got)}, {"expected", num(expected)}});
            }
            // d_{Af}(t) = c d_f(t K alpha_k / m_i) on both sides of every jump.
            std::vector<double> ts{0.0};
            for (double v : A)
                if (v > 0) {
                    ts.push_back(v * (1 - 1e-9));
                    ts.push_back(v * (1 + 1e-9));
                }
            for (double t : ts) {
                const double lhs = distribution(A, masses, t);
                const double rhs = c * distribution(f, masses, t / scale);
                worst = std::max(worst, lhs == rhs ? 0.0 : std::fabs(lhs - rhs) / std::max(lhs, rhs));
                C.expect(rel_close(lhs, rhs, 1e-9), format("i=%d k=%d: distribution identity fails at t=%s", i, k, c12(t)));
            }
        }
    C.art["rows"] = rows;
    C.art["pairs_qr"] = json::array({json::array({1, 2}), json::array({2, 2}), json::array({2, "inf"})});
    C.art["max_relative_error"] = num(worst);
    C.art["classes"] = s.size();
}

void scaling_slope(Params& P, Ctx& C, const CheckOptions& o) {
    const double p = P.num("p", 2), lambda = P.num("lambda", 1), tol = P.num("tolerance", 0.15);
    const int a = P.integer("a", 1), b = P.integer("b", 1);
    const auto comps = scan::cor_components(p, lambda, a, b, {2, 3, 4}, o.caps);
    json rows = json::array();
    const double pairs[3][2] = {{1, kInf}, {1, 2}, {2, kInf}};
    for (const auto& qr : pairs) {
        const double u = 1 / qr[0], w = 1 / qr[1];
        std::vector<double> lx, ly;
        for (const auto& c : comps) {
            lx.push_back(std::log(c.kappa));
            ly.push_back(std::log(scan::component_ratio(c, p, u, w)));
        }
        const double slope = fit_line(lx, ly).slope;
        const double pred = a * w - b * u;
        C.expect(std::fabs(slope - pred) <= tol * std::fabs(pred),
                 format("q=%s r=%s: slope %s vs predicted %s", c12(qr[0]), c12(qr[1]), c12(slope), c12(pred)));
        json ratios = json::array();
        for (double v : ly) ratios.push_back(num(std::exp(v)));
        rows.push_back({{"q", num(qr[0])}, {"r", num(qr[1])}, {"slope", num(slope)}, {"predicted", num(pred)}, {"ratios", ratios}});
    }
    C.art["kappa"] = json::array({2, 3, 4});
    C.art["rows"] = rows;
}

json region_json(const scan::Region& reg) {
    json cells = json::array();
    for (const auto& c : reg.cells) {
        if (!c.feasible) continue;
        cells.push_back({{"u", num(c.u)}, {"w", num(c.w)}, {"class", c.diverging ? "diverging" : "bounded"}, {"slope", num(c.slope)}});
    }
    json warn = json::array();
    for (const auto& w : reg.warnings)
        warn.push_back({{"u", num(w.u)}, {"w", num(w.w)}, {"dominated_by", json::array({num(w.from_u), num(w.from_w)})}});
    return {{"cells", cells}, {"warnings", warn}};
}

void w_trichotomy(Params& P, Ctx& C, const CheckOptions& o) {
    const double p = P.num("p", 1.1), R = P.num("R", 2), eps = P.num("eps", 1.0 / 3);
    const int a = P.integer("a", 1), b = P.integer("b", 1), n_max = P.integer("n_max", 4), grid = P.integer("grid", 11);
    const double gA = P.num("gamma_diverging", 0), gB = P.num("gamma_bounded", 0.45);
    const double mid_u = P.num("middle_u", 0.8), mid_w = P.num("middle_w", 0.1);
    const double d = std::hypot(double(a), double(b));

    const auto compsA = scan::w_components(p, gA, R, eps, a, b, n_max, o.caps);
    const auto regA = scan::scan_region(compsA, p, grid);
    const auto compsB = scan::w_components(p, gB, R, eps, a, b, n_max, o.caps);
    const auto regB = scan::scan_region(compsB, p, grid);

    // Diverging line a w - b u = gamma.
    int line = 0;
    for (const auto& c : regA.cells) {
        if (!c.feasible || std::fabs(a * c.w - b * c.u - gA) > 1e-9) continue;
        ++line;
        C.expect(c.diverging, format("gamma=%s: cell (%s, %s) on the critical line is bounded (slope %s)", c12(gA),
                                     c12(c.u), c12(c.w), c12(c.slope)));
    }
    C.expect(line > 0, "no grid cell on the critical line");

    // Middle band: lower bound against R^{eps d} / C, C the measured two-sided scaling constant.
    const auto& mid = scan::cell_at(regA, mid_u, mid_w);
    const double x = a * mid_w - b * mid_u;
    const bool in_band = x > gA - 2 * eps * d && x < gA - eps * d;
    C.expect(in_band, "middle-band cell lies outside the band");
    double Cm = 1, best = 0;
    for (std::size_t n = 0; n < compsA.size(); ++n) {
        const double X = compsA[n].lambda * std::pow(compsA[n].kappa, x);
        const double rho = mid.ratios[n];
        Cm = std::max({Cm, X / rho, rho / X});
        best = std::max(best, rho);
    }
    const double band_lower = std::pow(R, eps * d) / Cm;
    C.expect(best >= band_lower, format("middle band: best ratio %s below %s", c12(best), c12(band_lower)));

    // Bounded band below gamma - 3 eps d.
    int below = 0;
    for (const auto& c : regB.cells) {
        if (!c.feasible || a * c.w - b * c.u >= gB - 3 * eps * d) continue;
        ++below;
        C.expect(!c.diverging, format("gamma=%s: cell (%s, %s) below the band diverges (slope %s)", c12(gB), c12(c.u),
                                      c12(c.w), c12(c.slope)));
    }
    C.expect(below > 0, "no grid cell below the bounded band");
    C.expect(regA.warnings.empty() && regB.warnings.empty(),
             format("monotone closure violated in %zu cells", regA.warnings.size() + regB.warnings.size()));

    C.art["critical_line_cells"] = line;
    C.art["bounded_band_cells"] = below;
    C.art["middle_band"] = {{"u", num(mid_u)}, {"w", num(mid_w)}, {"ratios", vec(mid.ratios)}, {"measured_C", num(Cm)},
                            {"best", num(best)}, {"lower", num(band_lower)}};
    C.art["region_diverging_config"] = region_json(regA);
    C.art["region_bounded_config"] = region_json(regB);
}

// -------------------------------------------------------------------- BMO

void bmo_suite(Params& P, Ctx& C, const CheckOptions& o) {
    const int trials = P.integer("trials", 500);
    const double p0 = P.num("p0", 2);
    const int depth = P.integer("depth", 5);
    const int lac_depth = P.integer("lacunary_depth", 8);

    // Power trick.
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> ua(1, 4), up(1, 3);
    RandomSpaceOptions ro;
    ro.max_classes = 8;
    ro.max_count = 3;
    int viol = 0, viol_root = 0, done = 0;
    double worst = 0;
    while (done < trials) {
        const Space s = random_space(rng, ro);
        auto f = random_function(rng, s.size(), 0.2, true);
        const double alpha = ua(rng), p1 = up(rng);
        const auto balls = bmo::distinct_balls(s);
        const double nf = bmo::bmo_norm(s, balls, f, p1).norm;
        std::uniform_int_distribution<std::size_t> pick(0, balls.size() - 1);
        const auto& B = balls[pick(rng)];
        if (!(nf > 1e-12)) continue;
        for (auto& v : f) v /= nf;
        const auto g = bmo::power_trick(s, f, alpha, B);
        const double ng = bmo::bmo_norm(s, balls, g, alpha * p1).norm;
        const double cap = std::pow(2.0, 1 + alpha);
        viol += !leq(ng, cap);
        viol_root += !leq(ng, std::pow(2.0, (1 + alpha) / alpha));
        worst = std::max(worst, ng / cap);
        ++done;
    }
    C.expect(viol == 0, format("power trick violated in %d of %d trials", viol, trials));
    C.art["power_trick"] = {{"trials", trials}, {"violations", viol}, {"max_ratio_to_bound", num(worst)},
                            {"violations_of_root_bound", viol_root}};

    // Growth witness on the growth construction.
    auto r = recipe("bmo_c1", {{"p0", p0}, {"depth", depth}});
    const Space s = zoo::build(r, o.caps);
    const auto g = zoo::witness(r, s, "bmo-growth");
    const int N = zoo::bmo_growth_threshold(p0);
    json osc = json::array();
    double prev = -1;
    for (int n = 2; n <= depth; ++n) {
        const double v = bmo::mean_oscillation(s, bmo::subset_ball(s, s.subset("T_" + std::to_string(n))), g, p0);
        double sum = 0;
        for (int l = N + 1; l <= int(std::floor(n / 2.0 + 1.5 - N)); ++l) sum += 1.0 / (l - 1);
        const double lower_sum = p0 / std::pow(2.0, p0 + 3) * sum;
        C.expect(v > prev, format("oscillation on T_%d does not increase", n));
        C.expect(v > lower_sum, format("oscillation on T_%d = %s not above %s", n, c12(v), c12(lower_sum)));
        osc.push_back({{"n", n}, {"oscillation", num(v)}, {"lower_sum", num(lower_sum)}});
        prev = v;
    }
    double zeta = 0;
    for (int l = 200000; l >= 1; --l) zeta += std::pow(double(l), -p0);
    zeta += std::pow(200000.0, 1 - p0) / (p0 - 1);
    const double cap = std::max(4.0, 4 * (3 + 4 * zeta));
    const double ng = bmo::bmo_norm(s, g, 1).norm;
    C.expect(ng <= cap, format("||g||_{*,1} = %s above %s", c12(ng), c12(cap)));
    C.art["growth"] = {{"N", N}, {"T_oscillation", osc}, {"norm_1", num(ng)}, {"cap", num(cap)}, {"classes", s.size()}};

    // Lacunary space: tail fractions beyond level 2l.
    auto rl = recipe("bmo_lacunary", {{"depth", lac_depth}});
    const Space sl = zoo::build(rl, o.caps);
    auto f = zoo::witness(rl, sl, "bmo-growth");
    const auto balls = bmo::distinct_balls(sl);
    const double nf = bmo::bmo_norm(sl, balls, f, 1).norm;
    for (auto& v : f) v /= nf;
    double dev = 0;
    for (int n = 2; n <= lac_depth; ++n) {
        const int xn = sl.subset("S_" + std::to_string(n) + "_" + std::to_string(n))[0];
        auto T = sl.subset("T_" + std::to_string(n));
        dev = std::max(dev, std::fabs(bmo::mean(sl, bmo::subset_ball(sl, T), f) - f[xn]));
        if (n < lac_depth) {
            T.push_back(sl.subset("S_" + std::to_string(n + 1) + "_1")[0]);
            dev = std::max(dev, std::fabs(bmo::mean(sl, bmo::subset_ball(sl, T), f) - f[xn]));
        }
    }
    int Nl = int(std::ceil(dev - 1e-12));
    Nl = std::max(Nl + (Nl % 2), 2);
    double fmax = 0;
    for (double v : f) fmax = std::max(fmax, std::fabs(v));
    int lac_viol = 0;
    double tightest = 0;
    for (const auto& B : balls)
        for (int l = Nl; 2 * l <= 2 * fmax + 2; ++l) {
            const double frac = bmo::superlevel_fraction(sl, B, f, 2.0 * l);
            const double bound = std::ldexp(1.0, Nl / 2 + 1 - l);
            lac_viol += frac > bound * (1 + 1e-12);
            tightest = std::max(tightest, frac / bound);
        }
    C.expect(lac_viol == 0, format("lacunary tail bound violated %d times", lac_viol));
    C.art["lacunary"] = {{"depth", lac_depth}, {"N", Nl}, {"max_mean_deviation", num(dev)}, {"balls", balls.size()},
                         {"violations", lac_viol}, {"max_fraction_over_bound", num(tightest)}};
}

// ------------------------------------------------------------- dichotomy

void dichotomy_suite(Params& P, Ctx& C, const CheckOptions&) {
    const int rc = P.integer("R_C", 20), rd = P.integer("R_D", 6), rr = P.integer("ratio_radius", 20);
    std::vector<int> radii;
    for (int R = 1; R <= rc; ++R) radii.push_back(R);
    const auto rows = dichotomy::probe("C", radii, "fC", {{-1, 0}, {1, 0}}, false);
    json probe = json::array();
    double left_max = 0, right_last = 0;
    for (const auto& row : rows) {
        if (row.n == -1) left_max = std::max(left_max, row.value);
        if (row.n == 1 && row.R == rc) right_last = row.value;
        probe.push_back({{"R", row.R}, {"n", row.n}, {"m", row.m}, {"value", num(row.value)}});
    }
    const double right_bound = std::ldexp(1.0, 10) / (19.0 * 19.0);
    C.expect(left_max <= 4 * (1 + 1e-12), format("Example C: noncentered value at (-1,0) reaches %s", c12(left_max)));
    C.expect(right_last >= right_bound, format("Example C: value at (1,0) is %s, below %s", c12(right_last), c12(right_bound)));

    dichotomy::LatticeSpec D;
    D.example = "D";
    D.R = rd;
    const Space sd = dichotomy::lattice_build(D);
    const auto gd = dichotomy::lattice_function(D, "gD");
    const auto Mc = maximal(sd, gd, 1.0, true);
    const double at_right = Mc[dichotomy::lattice_index(D, 1, 0)];
    const double at_left = Mc[dichotomy::lattice_index(D, -1, 0)];
    const double interior_left = dichotomy::interior_centered_max(D, sd, gd, -1, 0);
    double cap = 0;
    for (int n = 3; n <= rd; ++n) cap = std::max(cap, std::ldexp(1.0, -n * n + (n - 2) * (n - 2) + 1));
    C.expect(at_right >= std::ldexp(1.0, 15), format("Example D: centered value at (1,0) is %s", c12(at_right)));
    C.expect(interior_left <= cap * (1 + 1e-12),
             format("Example D: interior centered value at (-1,0) is %s above %s", c12(interior_left), c12(cap)));

    dichotomy::LatticeSpec Cs;
    Cs.example = "C";
    Cs.R = rr + 1;
    const double dr = dichotomy::doubling_ratio(Cs, {rr})[0];
    C.expect(std::fabs(dr / 4 - 1) <= 0.05, format("Example C: ball ratio at r=%d is %s", rr, c12(dr)));

    C.art["example_C"] = {{"probe", probe}, {"max_left", num(left_max)}, {"right_at_max_R", num(right_last)},
                          {"right_bound", num(right_bound)}};
    C.art["example_D"] = {{"R", rd},
                          {"centered_right", num(at_right)},
                          {"centered_left_interior", num(interior_left)},
                          {"centered_left_truncated", num(at_left)},
                          {"left_cap", num(cap)}};
    C.art["doubling_ratio"] = {{"r", rr}, {"ratio", num(dr)}};
}

// ---------------------------------------------------------------- interp

double c_box(std::uint64_t seed, int trials, double p, double q) {
    std::mt19937_64 rng(seed);
    RandomSpaceOptions ro;
    ro.max_classes = 20;
    double worst = 1;
    for (int t = 0; t < trials; ++t) {
        const Space s = random_space(rng, ro);
        const auto f = random_function(rng, s.size());
        const double br = interp::box_ratio(f, s.masses(), p, q);
        worst = std::max({worst, br, 1 / br});
    }
    return worst;
}

void interp_suite(Params& P, Ctx& C, const CheckOptions& o) {
    const int trials = P.integer("trials", 500);
    const double pb = P.num("box_p", 1.5), stab = P.num("stability", 0.10);
    std::mt19937_64 rng(o.seed);
    RandomSpaceOptions ro;
    ro.max_classes = 20;
    std::uniform_real_distribution<double> up(1, 3), ugap(0.25, 3), u01(0, 1);
    std::map<std::string, int> viol;
    std::map<std::string, double> margin;
    for (int t = 0; t < trials; ++t) {
        const Space s = random_space(rng, ro);
        const auto f = random_function(rng, s.size());
        interp::SplitParams sp;
        sp.p = up(rng);
        sp.q0 = up(rng);
        sp.q1 = sp.q0 + ugap(rng);
        sp.centered = u01(rng) < 0.5;
        const auto S = interp::discretize(f, s.masses(), sp.p);
        double lo = kInf, hi = 0;
        for (double v : S.values)
            if (v > 0) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        sp.lambda = std::exp(std::log(lo / 2) + u01(rng) * (std::log(2 * hi) - std::log(lo / 2)));
        const auto rep = interp::verify_split(s, f, sp);
        for (const auto& it : rep.items) {
            viol[it.name] += !it.holds;
            if (it.rhs > 0) margin[it.name] = std::max(margin[it.name], it.lhs / it.rhs);
        }
    }
    json items = json::object();
    for (const auto& [name, v] : viol) {
        items[name] = {{"violations", v}, {"max_lhs_over_rhs", num(margin[name])}};
        C.expect(v == 0, format("%s violated in %d of %d trials", name.c_str(), v, trials));
    }
    C.art["split"] = {{"trials", trials}, {"items", items}};

    json box = json::array();
    for (double q : {1.0, 2.0, 4.0, kInf}) {
        const double c1 = c_box(o.seed + 7, trials, pb, q), c2 = c_box(o.seed + 1000003, trials, pb, q);
        const double spread = std::fabs(c1 - c2) / std::max(c1, c2);
        C.expect(spread <= stab, format("C_box(p=%s, q=%s) differs by %s across seeds", c12(pb), c12(q), c12(spread)));
        box.push_back({{"q", num(q)}, {"seed_a", num(c1)}, {"seed_b", num(c2)}, {"relative_spread", num(spread)}});
    }
    C.art["box_constant"] = {{"p", num(pb)}, {"rows", box}};
}

// ---------------------------------------------------------------- oracle

struct Worst {
    double err = 0;
    int bad = 0;
    json first;
    // Values below `floor` count as zero when forming the relative error.
    void add(double a, double b, double floor, double tol, int trial) {
        const double e = std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), floor, 1e-300});
        err = std::max(err, e);
        if (e > tol && bad++ == 0) first = {{"trial", trial}, {"compressed", num(a)}, {"expanded", num(b)}};
    }
};

void oracle(Params& P, Ctx& C, const CheckOptions& o) {
    const int trials = P.integer("trials", 200);
    const int max_classes = P.integer("max_classes", 12);
    const double tol = P.num("tolerance", 1e-9);
    std::mt19937_64 rng(o.seed);
    RandomSpaceOptions ro;
    ro.max_classes = max_classes;
    std::uniform_real_distribution<double> up(1, 4), u01(0, 1);
    const double kappas[3] = {1, 1.5, 2.5};
    const double qs[4] = {1, 2, 3.5, kInf};
    std::map<std::string, Worst> w;
    int expanded_max = 0;
    for (int t = 0; t < trials; ++t) {
        const Space s = random_space(rng, ro);
        const auto e = expand(s);
        expanded_max = std::max(expanded_max, int(e.space.size()));
        const auto f = random_function(rng, s.size());
        const auto fe = lift(f, e.origin);
        double scale = 0;
        for (double v : f) scale = std::max(scale, std::fabs(v));
        const double kappa = kappas[rng() % 3];
        for (bool centered : {true, false}) {
            const auto Mc = lift(maximal(s, f, kappa, centered), e.origin);
            const auto Me = maximal(e.space, fe, kappa, centered);
            for (std::size_t k = 0; k < Me.size(); ++k) w[centered ? "maximal_centered" : "maximal_noncentered"].add(Mc[k], Me[k], 1e-12 * scale, tol, t);
        }
        const double p = up(rng), q = qs[rng() % 4];
        w["lorentz_norm"].add(lorentz_norm(f, s.masses(), p, q), lorentz_norm(fe, e.space.masses(), p, q), 1e-12 * scale, tol, t);

        const auto fs = random_function(rng, s.size(), 0.2, true);
        const double pb = 1 + 2 * u01(rng);
        double fs_scale = 0;
        for (double v : fs) fs_scale = std::max(fs_scale, std::fabs(v));
        // An oscillation that vanishes exactly on one side is roundoff-sized on the other,
        // and roundoff in the mean oscillation is magnified by the 1/p root.
        w["bmo_norm"].add(bmo::bmo_norm(s, fs, pb).norm, bmo::bmo_norm(e.space, lift(fs, e.origin), pb).norm,
                          1e-6 * fs_scale, tol, t);

        const Kind kinds[3] = {Kind::strong, Kind::weak, Kind::lorentz};
        const Kind kind = kinds[rng() % 3];
        double lq = 0, lr = 0;
        if (kind == Kind::lorentz) {
            lq = qs[rng() % 4];
            lr = qs[rng() % 4];
            if (lq > lr) std::swap(lq, lr);
        }
        const auto spec = OperatorSpec::make(kind, up(rng), kappa, u01(rng) < 0.5, lq, lr);
        w["ratio"].add(ratio(s, f, spec), ratio(e.space, fe, spec), 1e-12, tol, t);
    }
    json rows = json::object();
    for (const auto& [name, x] : w) {
        rows[name] = {{"max_relative_error", num(x.err)}, {"mismatches", x.bad}};
        if (x.bad) rows[name]["first_mismatch"] = x.first;
        C.expect(x.bad == 0, format("%s: %d mismatches (max relative error %s)", name.c_str(), x.bad, c12(x.err)));
    }
    C.art["trials"] = trials;
    C.art["largest_expansion"] = expanded_max;
    C.art["comparisons"] = rows;
}

struct Entry {
    Registration reg;
    std::function<void(Params&, Ctx&, const CheckOptions&)> run;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e = {
        {{"star-weak", "hub star with doubling leaf masses: exact maximal values, weak (1,1) constant at most 2"}, star_weak},
        {{"t-centered", "second-generation T_n spaces: centered strong (1,1) constant at most 5, restricted weak growth"},
         t_centered},
        {{"basic-star-grid", "basic star spaces over a parameter grid: hub weak constants and noncentered slack"},
         basic_star_grid},
        {{"segment", "segment spaces: modified maximal values and constants for both subtypes"}, segment_suite},
        {{"fiber-identity", "type-III fiber averages: exact Lorentz scaling and distribution identity"}, fiber_identity},
        {{"scaling-slope", "typeIII_cor witnesses: log-log slope against kappa matches a/r - b/q"}, scaling_slope},
        {{"w-trichotomy", "composite W family: diverging line, middle-band bound, bounded band, monotone region", true},
         w_trichotomy},
        {{"bmo", "power trick, growth witness oscillations, lacunary tail decay"}, bmo_suite},
        {{"dichotomy", "weighted lattices C and D: bounded and growing maximal values, ball ratio", true}, dichotomy_suite},
        {{"interp", "dyadic splitting inequalities and stability of the box constant"}, interp_suite},
        {{"oracle", "compressed computations against brute force on expanded spaces"}, oracle},
    };
    return e;
}

}  // namespace

const std::vector<Registration>& registry() {
    static const std::vector<Registration> r = [] {
        std::vector<Registration> out;
        for (const auto& e : entries()) out.push_back(e.reg);
        return out;
    }();
    return r;
}

bool registered(const std::string& id) {
    for (const auto& e : entries())
        if (e.reg.id == id) return true;
    return false;
}

LemmaCheck verify(const std::string& id, const CheckOptions& opt) {
    for (const auto& e : entries()) {
        if (e.reg.id != id) continue;
        Params P{opt};
        Ctx C;
        e.run(P, C, opt);
        P.reject_unused();
        LemmaCheck out;
        out.id = id;
        out.summary = e.reg.summary;
        out.parameters = P.rec;
        out.parameters["seed"] = opt.seed;
        out.failures = C.failures;
        out.artifacts = C.art;
        out.verdict = !C.failures.empty() ? Verdict::fail : e.reg.evidence ? Verdict::evidence : Verdict::pass;
        return out;
    }
    throw std::out_of_range("unknown check id: " + id);
}

}  // namespace ndmax::checks
