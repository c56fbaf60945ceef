#include "ndmax/constants.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "ndmax/lorentz.hpp"

namespace ndmax {

OperatorSpec OperatorSpec::make(Kind kind, double p, double kappa, bool centered, double q, double r) {
    OperatorSpec s;
    s.kind = kind;
    s.p = p;
    s.kappa = kappa;
    s.centered = centered;
    switch (kind) {
        case Kind::strong: s.q = s.r = p; break;
        case Kind::weak:
        case Kind::rweak:
            // The restricted constant uses the same normalization as the weak one,
            // but the search is limited to indicator functions.
            s.q = p;
            s.r = kInf;
            break;
        case Kind::lorentz:
            if (!(q >= 1) || !(r >= 1)) throw std::invalid_argument("lorentz kind needs q, r >= 1");
            if (q > r) throw std::invalid_argument("lorentz kind needs q <= r");
            s.q = q;
            s.r = r;
            break;
    }
    return s;
}

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::strong: return "strong";
        case Kind::weak: return "weak";
        case Kind::rweak: return "rweak";
        case Kind::lorentz: return "lorentz";
    }
    return "?";
}

Kind parse_kind(const std::string& s) {
    if (s == "strong") return Kind::strong;
    if (s == "weak") return Kind::weak;
    if (s == "rweak" || s == "restricted-weak") return Kind::rweak;
    if (s == "lorentz") return Kind::lorentz;
    throw std::invalid_argument("unknown kind: " + s);
}

Method parse_method(const std::string& s) {
    if (s == "auto") return Method::automatic;
    if (s == "indicators") return Method::indicators;
    if (s == "ascent") return Method::ascent;
    if (s == "witness") return Method::witness;
    throw std::invalid_argument("unknown method: " + s);
}

double ratio(const MaximalPlan& plan, const std::vector<double>& masses, const std::vector<double>& f,
             const OperatorSpec& spec) {
    const double den = lorentz_norm(f, masses, spec.p, spec.q);
    if (!(den > 0)) throw std::invalid_argument("ratio of the zero function");
    return lorentz_norm(plan.apply(f), masses, spec.p, spec.r) / den;
}

double ratio(const Space& s, const std::vector<double>& f, const OperatorSpec& spec) {
    return ratio(MaximalPlan(s, spec.kappa, spec.centered), s.masses(), f, spec);
}

namespace {

struct Searcher {
    const MaximalPlan& plan;
    const std::vector<double>& masses;
    const OperatorSpec& spec;
    NormEstimate best;

    double eval(const std::vector<double>& f) {
        bool any = false;
        for (double v : f) any |= v > 0;
        if (!any) return 0;
        return ratio(plan, masses, f, spec);
    }
    void offer(const std::vector<double>& f, double r, const std::string& method) {
        if (r > best.lower) {
            best.lower = r;
            best.witness = f;
            best.method = method;
        }
    }
};

void search_indicators(Searcher& S, std::size_t n, const SearchOptions& opt, std::mt19937_64& rng) {
    std::vector<double> f(n);
    if (int(n) <= opt.exhaustive_classes) {
        const std::uint64_t total = std::uint64_t(1) << n;
        for (std::uint64_t mask = 1; mask < total; ++mask) {
            for (std::size_t c = 0; c < n; ++c) f[c] = (mask >> c) & 1 ? 1.0 : 0.0;
            S.offer(f, S.eval(f), "indicators");
        }
        return;
    }
    // Greedy growth from every singleton, then seeded random subsets.
    for (std::size_t start = 0; start < n; ++start) {
        std::fill(f.begin(), f.end(), 0.0);
        f[start] = 1;
        double cur = S.eval(f);
        S.offer(f, cur, "indicators");
        for (bool improved = true; improved;) {
            improved = false;
            std::size_t best_c = n;
            double best_r = cur;
            for (std::size_t c = 0; c < n; ++c) {
                if (f[c] > 0) continue;
                f[c] = 1;
                const double r = S.eval(f);
                f[c] = 0;
                if (r > best_r) {
                    best_r = r;
                    best_c = c;
                }
            }
            if (best_c < n) {
                f[best_c] = 1;
                cur = best_r;
                improved = true;
                S.offer(f, cur, "indicators");
            }
        }
    }
    std::bernoulli_distribution coin(0.5);
    for (int t = 0; t < 10 * std::max(1, opt.budget); ++t) {
        for (std::size_t c = 0; c < n; ++c) f[c] = coin(rng) ? 1.0 : 0.0;
        S.offer(f, S.eval(f), "indicators");
    }
}

void search_ascent(Searcher& S, std::size_t n, const SearchOptions& opt, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> logu(-3.0, 3.0);
    std::bernoulli_distribution sparse(0.3);
    std::vector<double> f(n);
    for (int restart = 0; restart < opt.budget; ++restart) {
        if (restart == 0) {
            std::fill(f.begin(), f.end(), 1.0);
        } else {
            for (std::size_t c = 0; c < n; ++c) f[c] = sparse(rng) ? 0.0 : std::exp(logu(rng));
            if (*std::max_element(f.begin(), f.end()) == 0) f[restart % n] = 1;
        }
        double cur = S.eval(f);
        double eta = 0.5;
        for (int sweep = 0; sweep < opt.sweeps && eta > 1e-4; ++sweep) {
            bool improved = false;
            const double top = *std::max_element(f.begin(), f.end());
            for (std::size_t c = 0; c < n; ++c) {
                const double old = f[c];
                double cands[3];
                int nc = 0;
                if (old > 0) {
                    cands[nc++] = old * (1 + eta);
                    cands[nc++] = old * (1 - eta);
                    cands[nc++] = 0.0;
                } else {
                    cands[nc++] = eta * top;
                    cands[nc++] = top;
                }
                for (int t = 0; t < nc; ++t) {
                    f[c] = cands[t];
                    const double r = S.eval(f);
                    if (r > cur * (1 + 1e-13)) {
                        cur = r;
                        improved = true;
                        break;
                    }
                    f[c] = old;
                }
            }
            if (!improved) eta /= 2;
        }
        S.offer(f, cur, "ascent");
    }
}

}  // namespace

NormEstimate search_constant(const Space& s, const OperatorSpec& spec, const SearchOptions& opt) {
    if (opt.budget <= 0) throw std::invalid_argument("search budget must be positive");
    const MaximalPlan plan(s, spec.kappa, spec.centered);
    const std::vector<double> masses = s.masses();
    Searcher S{plan, masses, spec, {}};
    std::mt19937_64 rng(opt.seed);
    const std::size_t n = s.size();

    const bool do_ind = opt.method == Method::indicators || opt.method == Method::automatic;
    const bool do_asc = (opt.method == Method::ascent || opt.method == Method::automatic) && !spec.restricted();
    const bool do_wit = opt.method == Method::witness || opt.method == Method::automatic;

    if (do_wit)
        for (const auto& [name, w] : opt.witnesses) {
            if (spec.restricted()) {
                bool indicator = true;
                for (double v : w) indicator &= (v == 0 || v == 1);
                if (!indicator) continue;
            }
            S.offer(w, S.eval(w), "witness(" + name + ")");
        }
    if (do_ind) search_indicators(S, n, opt, rng);
    if (do_asc) search_ascent(S, n, opt, rng);

    NormEstimate out = S.best;
    out.upper = opt.upper;
    return out;
}

TrendReport classify_trend(std::vector<double> index, std::vector<double> lower, std::vector<double> predicted,
                           double slope_threshold) {
    TrendReport t;
    t.index = std::move(index);
    t.lower = std::move(lower);
    t.predicted = std::move(predicted);
    std::vector<double> lx, ly;
    for (std::size_t k = 0; k < t.index.size(); ++k) {
        lx.push_back(std::log(t.index[k]));
        ly.push_back(std::log(t.lower[k]));
    }
    t.fit = fit_line(lx, ly);
    t.diverging = t.fit.slope > slope_threshold;
    return t;
}

TrendReport family_trend(const std::function<Space(int)>& build,
                         const std::function<std::vector<double>(const Space&, int)>& witness, const OperatorSpec& spec,
                         const std::vector<int>& indices, const std::function<double(int)>& predicted) {
    if (indices.empty()) throw std::invalid_argument("empty index range");
    std::vector<double> idx, low, pred;
    for (int n : indices) {
        const Space s = build(n);
        idx.push_back(n);
        low.push_back(ratio(s, witness(s, n), spec));
        pred.push_back(predicted ? predicted(n) : std::nan(""));
    }
    return classify_trend(idx, low, pred);
}

}  // namespace ndmax
