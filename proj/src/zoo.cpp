#include "ndmax/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ndmax/dichotomy.hpp"

namespace ndmax::zoo {

// ---------------------------------------------------------------- recipes

double Recipe::num(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument(kind + ": missing parameter '" + key + "'");
    try {
        std::size_t used = 0;
        const double v = std::stod(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(kind + ": parameter '" + key + "' is not a number: " + it->second);
    }
}

double Recipe::num(const std::string& key, double fallback) const { return has(key) ? num(key) : fallback; }

int Recipe::integer(const std::string& key) const {
    const double v = num(key);
    if (v != std::floor(v) || std::fabs(v) > 1e9)
        throw std::invalid_argument(kind + ": parameter '" + key + "' must be an integer");
    return int(v);
}

int Recipe::integer(const std::string& key, int fallback) const { return has(key) ? integer(key) : fallback; }

std::vector<double> Recipe::seq(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument(kind + ": missing parameter '" + key + "'");
    std::vector<double> out;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw std::invalid_argument(kind + ": bad list entry in '" + key + "': " + item);
        }
    }
    if (out.empty()) throw std::invalid_argument(kind + ": parameter '" + key + "' is an empty list");
    return out;
}

Recipe& Recipe::set(const std::string& key, double v) {
    params[key] = fmt12(v);
    return *this;
}

Recipe& Recipe::set(const std::string& key, const std::string& v) {
    params[key] = v;
    return *this;
}

Recipe Recipe::parse(const std::string& kind, const std::vector<std::string>& kv) {
    Recipe r;
    r.kind = kind;
    for (const auto& s : kv) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) throw std::invalid_argument("parameter must look like key=value: " + s);
        r.params[s.substr(0, eq)] = s.substr(eq + 1);
    }
    return r;
}

// ---------------------------------------------------------------- helpers

namespace {

using Group = std::pair<double, double>;  // (count, unit mass)

void require(bool ok, const std::string& what) {
    if (!ok) throw BuildError(what);
}

// Hub of mass `hub_mass` at distance 1 from every leaf; leaves pairwise at d.
Space star_groups(const std::vector<Group>& groups, double d, double hub_mass = 1.0) {
    require(d > 1 && d <= 2, "star: leaf distance must lie in (1, 2]");
    Space s;
    const int hub = s.add_class(1, hub_mass, 1.0, 1.0);
    s.subsets["hub"] = {hub};
    std::vector<int> leaves;
    for (const auto& [count, mass] : groups) {
        require(count >= 1 && mass > 0, "star: leaf groups need positive count and mass");
        const int c = s.add_class(count, mass, d, d);
        s.set_dist(hub, c, 1.0);
        leaves.push_back(c);
    }
    s.subsets["leaves"] = leaves;
    return s;
}

std::vector<Group> group_masses(const std::vector<double>& masses) {
    std::vector<Group> g;
    for (double m : masses) {
        if (!g.empty() && g.back().second == m)
            g.back().first += 1;
        else
            g.push_back({1.0, m});
    }
    return g;
}

// Smallest power of two that is >= x.
double pow2_at_least(double x) {
    if (x <= 1) return 1.0;
    int e = 0;
    std::frexp(x, &e);  // x in [2^{e-1}, 2^e)
    const double below = std::ldexp(1.0, e - 1);
    return below >= x ? below : std::ldexp(1.0, e);
}

// Smallest integer beta with 1 <= alpha^{1-p} beta h < 2, if any.
bool balanced_beta(double alpha, double h, double p, double& beta) {
    const double x = std::pow(alpha, p - 1) / h;  // beta must lie in [x, 2x)
    beta = std::max(1.0, std::ceil(x * (1 - 1e-14)));
    const double v = std::pow(alpha, 1 - p) * beta * h;
    return v >= 1 - 1e-12 && v < 2;
}

void check_caps(const Space& s, const Caps& caps) {
    if (s.size() > caps.max_classes)
        throw BuildError("construction needs " + std::to_string(s.size()) + " classes, cap is " +
                         std::to_string(caps.max_classes));
    for (const auto& c : s.classes) {
        if (!(c.unit_mass > 0) || !std::isfinite(c.unit_mass) || c.mass() > caps.max_mass)
            throw BuildError("mass overflow: a class mass exceeds " + fmt12(caps.max_mass));
        if (!(c.count >= 1) || !std::isfinite(c.count)) throw BuildError("class count out of range");
    }
}

void check_points(std::size_t points, const Caps& caps) {
    if (points > caps.expand_points)
        throw BuildError("construction has " + std::to_string(points) + " individual points, cap is " +
                         std::to_string(caps.expand_points));
}

// Hub-indicator subset, falling back to the last component of a combined space.
const std::vector<int>* find_last(const Space& s, const std::string& name) {
    auto it = s.subsets.find(name);
    if (it != s.subsets.end()) return &it->second;
    const std::vector<int>* best = nullptr;
    int best_k = -1;
    for (const auto& [key, members] : s.subsets) {
        const auto slash = key.find('/');
        if (slash == std::string::npos || key.substr(slash + 1) != name) continue;
        const int k = std::stoi(key.substr(0, slash));
        if (k > best_k) {
            best_k = k;
            best = &members;
        }
    }
    return best;
}

// ----------------------------------------------------------- first generation

double s1_tau(double p0, int n, bool log_variant) {
    double t = std::pow(n + 1.0, p0) / n;
    if (log_variant) t *= std::log(double(n)) + 1;
    return std::floor(t);
}

Space gen1_s3(double p0, int n) {
    require(p0 > 1, "gen1_s3 needs p0 > 1");
    require(n >= 1 && n <= 40, "gen1_s3 needs 1 <= n <= 40");
    const double fp = std::floor(p0);
    double fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    const double mn = std::pow(2.0, (2 * n * fp - n) / (p0 - 1)) * std::pow(fact, 1 / (p0 - 1));
    Space s;
    std::vector<std::vector<int>> lower(n + 1);
    std::vector<int> upper_all;
    for (int i = 1; i <= n; ++i) {
        const double F = std::pow(2.0, (i - n) / (p0 - 1));
        for (int j = 0; j < (1 << (i - 1)); ++j) lower[i].push_back(s.add_class(1, F, 1.0, 2.0));
    }
    for (int ip = 1; ip <= n; ++ip) {
        const double a = std::pow(double(ip), p0) - std::pow(ip - 1.0, p0);
        const double tau = std::floor(a) * std::ldexp(1.0, int(2 * n * fp)) * fact / ip;
        const int cells = 1 << (ip - 1);
        const double per = tau / cells;
        require(per >= 1 && per == std::floor(per), "gen1_s3: level sizes are not divisible");
        std::vector<int> level;
        for (int b = 0; b < cells; ++b) {
            const int c = s.add_class(per, mn * ip, 2.0, 2.0);
            for (int i = 1; i <= ip; ++i) s.set_dist(c, lower[i][b >> (ip - i)], 1.0);
            level.push_back(c);
            upper_all.push_back(c);
        }
        s.subsets["Sp_" + std::to_string(ip)] = level;
    }
    for (int i = 1; i <= n; ++i) s.subsets["S_" + std::to_string(i)] = lower[i];
    s.subsets["Sp"] = upper_all;
    return s;
}

// ----------------------------------------------------------- second generation

// y0, then y_1..y_tau, then y'_1..y'_tau, all singletons.
Space gen2_core(const std::vector<double>& F, double mid_mass, double d_mid, double d_cross, double d_far) {
    const int tau = int(F.size());
    require(tau >= 1, "second-generation space needs tau >= 1");
    Space s;
    const int y0 = s.add_class(1, 1.0, 1.0, d_far);
    std::vector<int> mid, top;
    for (int i = 0; i < tau; ++i) mid.push_back(s.add_class(1, mid_mass, 1.0, d_far));
    for (int i = 0; i < tau; ++i) {
        require(F[i] > 0, "second-generation masses must be positive");
        top.push_back(s.add_class(1, F[i], 1.0, d_far));
    }
    for (int i = 0; i < tau; ++i) {
        s.set_dist(y0, mid[i], 1.0);
        s.set_dist(mid[i], top[i], 1.0);
        s.set_dist(y0, top[i], d_mid);
        for (int j = 0; j < tau; ++j) {
            if (j > i) {
                s.set_dist(mid[i], mid[j], d_mid);
                s.set_dist(top[i], top[j], d_mid);
            }
            if (j != i) s.set_dist(mid[i], top[j], d_cross);
        }
    }
    s.subsets["hub"] = {y0};
    s.subsets["mid"] = mid;
    s.subsets["top"] = top;
    return s;
}

Space gen2_t3(double p0, int n, const Caps& caps) {
    require(p0 > 1, "gen2_t3 needs p0 > 1");
    require(n >= 1 && n <= 20, "gen2_t3 needs 1 <= n <= 20");
    const double fp = std::floor(p0);
    double fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    const double mn = std::pow(2.0, (2 * n * fp - n) / (p0 - 1)) * std::pow(fact, 1 / (p0 - 1));
    std::vector<double> tau(n + 1);
    double tau_sum = 0, points = 0;
    for (int i = 1; i <= n; ++i) {
        const double a = std::pow(double(i), p0) - std::pow(i - 1.0, p0);
        tau[i] = std::floor(a) * std::ldexp(1.0, int(2 * n * fp)) * fact / i;
        tau_sum += tau[i];
        points += std::ldexp(1.0, i - 1) + 2 * tau[i];
    }
    if (points > double(caps.expand_points))
        throw BuildError("gen2_t3 has " + fmt12(points) + " individual points, cap is " +
                         std::to_string(caps.expand_points));
    const double G = std::pow(2.0, (1.0 - n) / (p0 - 1)) / tau_sum;
    Space s;
    std::vector<std::vector<int>> lower(n + 1);
    for (int i = 1; i <= n; ++i) {
        const double F = std::pow(2.0, (i - n) / (p0 - 1));
        for (int j = 0; j < (1 << (i - 1)); ++j) lower[i].push_back(s.add_class(1, F, 1.0, 2.0));
    }
    // The y_{i,j} are mutually at distance 1.
    std::vector<int> all_lower;
    for (int i = 1; i <= n; ++i) all_lower.insert(all_lower.end(), lower[i].begin(), lower[i].end());
    for (std::size_t a = 0; a < all_lower.size(); ++a)
        for (std::size_t b = a + 1; b < all_lower.size(); ++b) s.set_dist(all_lower[a], all_lower[b], 1.0);
    std::vector<int> mids, tops;
    for (int ip = 1; ip <= n; ++ip) {
        const int cells = 1 << (ip - 1);
        const long per = long(tau[ip] / cells);
        for (long k = 0; k < long(tau[ip]); ++k) {
            const int mid = s.add_class(1, G, 1.0, 2.0);
            const int top = s.add_class(1, mn * ip, 1.0, 2.0);
            s.set_dist(mid, top, 1.0);
            const int b = int(k / per);
            for (int i = 1; i <= ip; ++i) s.set_dist(mid, lower[i][b >> (ip - i)], 1.0);
            mids.push_back(mid);
            tops.push_back(top);
        }
    }
    for (int i = 1; i <= n; ++i) s.subsets["S_" + std::to_string(i)] = lower[i];
    s.subsets["mid"] = mids;
    s.subsets["top"] = tops;
    return s;
}

// ------------------------------------------------------------- composites

Space composite_prefix(const Recipe& r, const Caps& caps) {
    const std::string fam = r.has("family") ? r.params.at("family") : "S_tilde";
    const bool first_type = fam[0] == 'S';
    const bool tilde = fam.find("tilde") != std::string::npos;
    const bool variant = fam.find("var") != std::string::npos;
    std::function<Space(int)> comp;
    int lo = 1;
    double kappa0 = 2;
    if (tilde) {
        const double kt = r.num("kt"), pt = r.num("pt"), eps = r.num("eps"), delta = r.num("delta");
        const int N = r.integer("N");
        const double top = first_type ? 2.0 : 3.0;
        require(kt >= 1 && kt < top, "composite_prefix: kt out of range");
        require(pt >= 1 && eps > 0 && eps <= 0.25, "composite_prefix: need pt >= 1 and eps in (0, 1/4]");
        require(delta > 0 && delta < top - kt, "composite_prefix: delta out of range");
        require(N >= 1, "composite_prefix: N must be positive");
        lo = N + 1;
        kappa0 = kt + delta;
        comp = [=](int n) {
            const double tau = std::pow(double(N), 2 * pt) * std::floor(std::pow(double(n), pt * (pt - 1) / eps));
            const double d = kt + delta / n;
            const double m = std::pow(double(n), pt / eps);
            if (first_type) return star_groups({{tau, m}}, d);
            require(tau <= 1e6, "composite_prefix: second-type component too large to expand");
            return basic_t(int(tau), d, m);
        };
    } else {
        const double kh = r.num("kh");
        const double top = first_type ? 2.0 : 3.0;
        require(kh >= 1 && kh <= top, "composite_prefix: kh out of range");
        kappa0 = top;
        comp = [=](int n) {
            const double d = variant ? kh + (top - kh) / n : kh;
            require(d > 1, "composite_prefix: component distance must exceed 1");
            if (first_type) return star_groups({{double(n), 1.0}}, d);
            return basic_t(n, d, 1.0);
        };
    }
    if (r.has("n")) {
        const int n = r.integer("n");
        require(n >= lo, "composite_prefix: component index below the first admissible one");
        Space s = comp(n);
        check_caps(s, caps);
        return s;
    }
    const int n_max = r.integer("n_max");
    require(n_max >= lo, "composite_prefix: n_max below the first admissible index");
    std::vector<Space> comps;
    for (int n = lo; n <= n_max; ++n) comps.push_back(comp(n));
    return combine(comps, CombineMode::kappa, kappa0);
}

struct WParams {
    double p, gamma, R, eps;
    int a, b;
};

Space composite_w(const WParams& w, int n_lo, int n_hi, const Caps& caps) {
    const double d = std::hypot(double(w.a), double(w.b));
    std::vector<Space> comps;
    for (int n = n_lo; n <= n_hi; ++n) {
        const double kappa = std::pow(w.R, n);
        const double lambda = std::pow(w.R, -n * w.gamma + (n + 2) * w.eps * d);
        const auto c = type3_cor_params(w.p, lambda, w.a, w.b, kappa);
        Space s = type3(w.p, c.N, c.M, c.K, c.L);
        check_caps(s, caps);
        comps.push_back(std::move(s));
    }
    if (comps.size() == 1) return comps[0];
    return combine(comps, CombineMode::lorentz);
}

}  // namespace

// ------------------------------------------------------------- constructors

Space star(const std::vector<double>& leaf_masses, double d) {
    require(!leaf_masses.empty(), "star needs at least one leaf");
    return star_groups(group_masses(leaf_masses), d);
}

Space gen2(const std::vector<double>& F) { return gen2_core(F, 1.0 / double(F.size()), 2.0, 2.0, 2.0); }

Space basic_t(int tau, double d, double m) {
    require(d > 1 && d <= 3, "basic second-type space needs d in (1, 3]");
    require(m >= 1, "basic second-type space needs m >= 1");
    return gen2_core(std::vector<double>(std::size_t(tau), m), 1.0 / tau, (d + 1) / 2, d, d);
}

Space segment(int n, int subtype, double kappa) {
    require(n >= 1, "segment needs n >= 1");
    require(subtype == 1 || subtype == 2, "segment subtype must be 1 or 2");
    require(subtype == 1 ? kappa >= 2 : kappa >= 3, "segment: kappa below the admissible range");
    const double base = subtype == 1 ? kappa + 1 : kappa - 0.5;
    std::vector<double> pos(n + 1, 0.0);
    for (int i = 1; i <= n; ++i) pos[i] = pos[i - 1] + std::pow(base, i);
    Space s;
    for (int i = 0; i <= n; ++i) {
        // F(0) = 1 and F(i+1) = 2^{i+1} F(i), hence F(i) = 2^{i(i+1)/2}.
        const double F = subtype == 1 ? 1.0 : std::ldexp(1.0, i * (i + 1) / 2);
        s.add_class(1, F, 1.0, 1.0);
    }
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) s.set_dist(i, j, pos[j] - pos[i]);
    s.subsets["hub"] = {0};
    return s;
}

Space type1(const std::vector<double>& m) {
    require(!m.empty(), "type I needs a nonempty sequence");
    std::vector<Group> g;
    for (std::size_t j = 0; j < m.size(); ++j) {
        require(m[j] >= 1 && m[j] == std::floor(m[j]), "type I sequence must be positive integers");
        require(j == 0 || m[j] >= m[j - 1], "type I sequence must be nondecreasing");
        g.push_back({m[j], std::ldexp(1.0, int(j + 1))});
    }
    Space s = star_groups(g, 2.0);
    for (std::size_t j = 0; j < m.size(); ++j) s.subsets["G_" + std::to_string(j + 1)] = {int(j + 1)};
    return s;
}

std::vector<double> type1_p1_h(const std::vector<double>& mt) {
    std::vector<double> h;
    for (std::size_t j = 0; j < mt.size(); ++j) {
        if (j == 0) {
            h.push_back(1);
            continue;
        }
        double hh = h.back() + 1;
        while (std::floor(std::ldexp(1.0, int(hh)) / mt[j]) <= std::ldexp(1.0, int(h.back()))) {
            hh += 1;
            require(hh < 1000, "type I (p=1): no admissible h within range");
        }
        h.push_back(hh);
    }
    return h;
}

Space type1_p1(const std::vector<double>& mt) {
    require(!mt.empty() && mt[0] == 1, "type I (p=1) needs a sequence starting with 1");
    for (std::size_t j = 0; j < mt.size(); ++j) {
        require(mt[j] >= 1 && mt[j] == std::floor(mt[j]), "type I (p=1) sequence must be positive integers");
        require(j == 0 || mt[j] >= mt[j - 1], "type I (p=1) sequence must be nondecreasing");
    }
    const auto h = type1_p1_h(mt);
    Space s;
    const int hub = s.add_class(1, 1.0, 1.0, 2.0);
    s.subsets["hub"] = {hub};
    const std::size_t l = mt.size();
    std::vector<int> A(l), T(l, -1);
    for (std::size_t j = 0; j < l; ++j) {
        const double total = std::ldexp(1.0, int(h[j]));
        const double a = std::floor(total / mt[j]);
        A[j] = s.add_class(a, 1.0, 1.0, 2.0);
        if (total - a >= 1) T[j] = s.add_class(total - a, 1.0, 1.0, 2.0);
        std::vector<int> S{A[j]};
        if (T[j] >= 0) S.push_back(T[j]);
        s.subsets["S_" + std::to_string(j + 1)] = S;
    }
    for (std::size_t c = 1; c < s.size(); ++c) s.set_dist(hub, int(c), 1.0);
    for (std::size_t j = 0; j < l; ++j) {
        if (T[j] >= 0) s.set_dist(A[j], T[j], 1.0);
        if (j > 0 && T[j - 1] >= 0) {
            s.set_dist(T[j - 1], A[j], 1.0);
            if (T[j] >= 0) s.set_dist(T[j - 1], T[j], 1.0);
        }
    }
    return s;
}

LowerSequences lower_sequences(double p, int count) {
    require(p > 1, "lower sequences need p > 1");
    require(count >= 1, "lower sequences need at least one level");
    LowerSequences L;
    L.m.push_back(1);
    L.h.push_back(1);
    for (int i = 1; i < count; ++i) {
        const double hp = L.h.back();
        double m = 2 * L.m.back() * hp;
        for (int guard = 0;; ++guard) {
            require(std::isfinite(m), "lower sequences overflow at level " + std::to_string(i + 1));
            require(guard < 100000, "lower sequences: search did not terminate");
            const double lo = std::pow(m, p - 1);
            const double k = std::ceil(lo / hp * (1 - 1e-14));
            const double h = std::max(1.0, k) * hp;
            const double v = std::pow(m, 1 - p) * h;
            if (v >= 1 - 1e-12 && v < 2) {
                L.m.push_back(m);
                L.h.push_back(h);
                break;
            }
            // The window [m^{p-1}, 2m^{p-1}) reaches k*h_i once m exceeds (k h_i / 2)^{1/(p-1)}.
            const double jump = std::floor(std::pow(k * hp / 2, 1 / (p - 1))) + 1;
            m = std::max(jump, std::nextafter(m + 1, kInf));
        }
    }
    return L;
}

Type3Sequences type3_sequences(double p, int N, int M, double L) {
    require(N >= 1 && M >= 1, "type III needs N, M >= 1");
    require(L >= 1, "type III needs L >= 1");
    const auto low = lower_sequences(p, N);
    Type3Sequences t;
    t.m = low.m;
    t.h = low.h;
    const double hN = t.h.back();
    double need = 2 * t.m.back() * hN;
    for (int k = 0; k < M; ++k) {
        double alpha = pow2_at_least(need), beta = 0;
        while (!balanced_beta(alpha, hN, p, beta)) {
            alpha *= 2;
            require(std::isfinite(alpha), "type III: upper masses overflow");
        }
        t.alpha.push_back(alpha);
        t.beta.push_back(beta);
        need = 2 * alpha * L * beta * hN;
    }
    return t;
}

Space type3(double p, int N, int M, double K, double L) {
    require(p > 1, "type III needs p > 1");
    require(K >= 1, "type III needs K >= 1");
    require(L == std::floor(L), "type III needs integral L");
    const auto seq = type3_sequences(p, N, M, L);
    TypeIIIInfo info;
    info.p = p;
    info.N = N;
    info.M = M;
    info.K = K;
    info.L = L;
    info.m = seq.m;
    info.h = seq.h;
    info.alpha = seq.alpha;
    info.beta = seq.beta;
    const double hN = seq.h.back();
    require(hN <= 1e5, "type III: too many upper cells");
    Space s;
    for (int i = 0; i < N; ++i) {
        require(std::fmod(hN, seq.h[i]) == 0, "type III: h_N / h_i is not integral");
        std::vector<int> row;
        for (int j = 0; j < int(seq.h[i]); ++j) row.push_back(s.add_class(1, seq.m[i], 1.0, 2.0));
        info.lower.push_back(row);
        s.subsets["U" + std::to_string(i + 1)] = row;
    }
    std::vector<int> all_upper;
    for (int k = 0; k < M; ++k) {
        std::vector<int> row;
        for (int c = 0; c < int(hN); ++c) row.push_back(s.add_class(L * seq.beta[k], K * seq.alpha[k], 2.0, 2.0));
        info.upper.push_back(row);
        all_upper.insert(all_upper.end(), row.begin(), row.end());
        s.subsets["Uo_" + std::to_string(k + 1)] = row;
    }
    s.subsets["Uo"] = all_upper;
    for (int k = 0; k < M; ++k)
        for (int c = 0; c < int(hN); ++c)
            for (int i = 0; i < N; ++i) s.set_dist(info.upper[k][c], info.lower[i][info.gamma(i, c)], 1.0);
    s.type3 = std::move(info);
    return s;
}

Type3Cor type3_cor_params(double p, double lambda, double a, double b, double kappa) {
    require(p > 1 && lambda > 0 && kappa >= 1, "type III scaling parameters out of range");
    Type3Cor c;
    const double N = std::pow(kappa, b), M = std::pow(kappa, a);
    require(N == std::floor(N) && M == std::floor(M) && N <= 1e6 && M <= 1e6,
            "type III scaling: kappa^a and kappa^b must be moderate integers");
    c.N = int(N);
    c.M = int(M);
    const double x = lambda / N;  // lambda * kappa^{-b}
    c.L = std::max(1.0, std::ceil(std::pow(x, p) * (1 - 1e-14)));
    c.K = std::pow(std::pow(c.L, 1 / p) / x, p / (p - 1));
    c.K = std::max(c.K, 1.0);
    return c;
}

Space type2(double p, double q, double r, int l) {
    require(p > 1 && l >= 1, "type II needs p > 1 and l >= 1");
    require(q >= 1 && q <= r, "type II needs 1 <= q <= r");
    const auto low = lower_sequences(p, l);
    const double lfac = std::isinf(r) ? 1.0 : std::pow(double(l), p / ((p - 1) * r));
    std::vector<double> alpha, beta;
    double need = 2 * low.m.back() * low.h.back() / lfac;
    for (int i = 0; i < l; ++i) {
        double a = pow2_at_least(need), b = 0;
        while (!balanced_beta(a, low.h[i], p, b)) {
            a *= 2;
            require(std::isfinite(a), "type II: upper masses overflow");
        }
        alpha.push_back(a);
        beta.push_back(b);
        need = 2 * a * b;
    }
    Space s;
    std::vector<std::vector<int>> lower(l);
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < int(low.h[i]); ++j) lower[i].push_back(s.add_class(1, low.m[i], 1.0, 2.0));
        s.subsets["T_" + std::to_string(i + 1)] = lower[i];
    }
    std::vector<int> all_upper;
    for (int is = 0; is < l; ++is) {
        std::vector<int> row;
        for (int b = 0; b < int(low.h[is]); ++b) {
            const int c = s.add_class(beta[is], lfac * alpha[is], 2.0, 2.0);
            for (int i = 0; i <= is; ++i)
                s.set_dist(c, lower[i][int(std::floor(double(b) * low.h[i] / low.h[is] + 1e-9))], 1.0);
            row.push_back(c);
        }
        s.subsets["To_" + std::to_string(is + 1)] = row;
        all_upper.insert(all_upper.end(), row.begin(), row.end());
    }
    s.subsets["To"] = all_upper;
    return s;
}

Space type2_inf(double p, double q, int l) {
    require(p > 1 && l >= 1 && q >= 1, "type II (r = inf) needs p > 1, q >= 1, l >= 1");
    const auto low = lower_sequences(p, l);
    double alpha = pow2_at_least(2 * low.m.back() * low.h.back());
    std::vector<double> beta(l);
    for (;; alpha *= 2) {
        require(std::isfinite(alpha), "type II (r = inf): masses overflow");
        bool ok = true;
        for (int i = 0; i < l && ok; ++i) {
            const double w = std::pow(i + 1.0, p - 2);
            const double x = w * std::pow(alpha, p - 1) / low.h[i];
            beta[i] = std::max(1.0, std::ceil(x * (1 - 1e-14)));
            const double v = std::pow(alpha, 1 - p) * beta[i] * low.h[i];
            ok = v >= w * (1 - 1e-12) && v <= 2 * w * (1 + 1e-12);
        }
        if (ok) break;
    }
    Space s;
    std::vector<std::vector<int>> lower(l);
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < int(low.h[i]); ++j) lower[i].push_back(s.add_class(1, low.m[i], 1.0, 2.0));
        s.subsets["T_" + std::to_string(i + 1)] = lower[i];
    }
    std::vector<int> all_upper;
    for (int is = 0; is < l; ++is) {
        for (int b = 0; b < int(low.h[is]); ++b) {
            const int c = s.add_class(beta[is], (is + 1) * alpha, 2.0, 2.0);
            for (int i = 0; i <= is; ++i)
                s.set_dist(c, lower[i][int(std::floor(double(b) * low.h[i] / low.h[is] + 1e-9))], 1.0);
            all_upper.push_back(c);
        }
    }
    s.subsets["To"] = all_upper;
    return s;
}

Space modified_metric(const Space& s) {
    const std::size_t n = s.size();
    auto one = [&](std::size_t a, std::size_t b) { return dist_eq(s.dist(int(a), int(b)), 1.0); };
    Space out = s;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            if (a == b && s.classes[a].count <= 1) continue;
            double d;
            if (one(a, b)) {
                d = 1;
            } else {
                bool shared = false;
                for (std::size_t c = 0; c < n && !shared; ++c)
                    if (c != a && c != b) shared = one(a, c) && one(c, b);
                d = shared ? 2 : 3;
            }
            out.set_dist(int(a), int(b), d);
        }
    return out;
}

// -------------------------------------------------------------- sequences

S2Sequences s2_sequences(double p0, int n) {
    require(p0 > 1 && n >= 1, "S2 sequences need p0 > 1 and n >= 1");
    S2Sequences q;
    q.c = std::floor(std::pow(n + 1.0, p0) / n);
    for (int k = 1;; ++k) {
        if (std::ldexp(1.0, k - 1) <= q.c && std::pow(2.0, k - 1 + p0) <= std::pow(1.0 + n, p0))
            q.e = k;
        else
            break;
    }
    require(q.e >= 1, "S2 sequences: e_n is empty for this n");
    for (int j = 1; j <= q.e; ++j) {
        const double m = (1.0 + n) * std::pow(2.0, (1.0 - j) / p0) - 1;
        q.m.push_back(m);
        q.s.push_back(std::ceil(std::ldexp(1.0, 2 - j) * n * q.c / m * (1 - 1e-14)));
    }
    return q;
}

// ---------------------------------------------------------------- BMO

namespace {

double t_size(const Matrix& m) {
    double t = 0;
    for (const auto& row : m)
        for (double v : row) t += v + 1;
    return t;
}

// Minimal even b with |T_{n-1}| <= min(floor(w (b/(n+1)^p - b/(n+2)^p)), b/n^{2p}, [b/n^n]).
double choose_b(double T, int n, double p, double w, bool with_nn) {
    const double c = w * (std::pow(n + 1.0, -p) - std::pow(n + 2.0, -p));
    auto ok = [&](double b) {
        if (std::floor(b * c) < T) return false;
        if (b * std::pow(double(n), -2 * p) < T) return false;
        if (with_nn && b * std::pow(double(n), -double(n)) < T) return false;
        return true;
    };
    double b = std::max(T / c, T * std::pow(double(n), 2 * p));
    if (with_nn) b = std::max(b, T * std::pow(double(n), double(n)));
    b = 2 * std::ceil(b / 2);
    for (int guard = 0; !ok(b); ++guard) {
        require(guard < 1000000, "BMO matrix: no admissible b_n found");
        b = std::max(b + 2, 2 * std::ceil(b * (1 + 1e-15) / 2));
    }
    require(std::isfinite(b) && b < 1e300, "BMO matrix: b_n overflows");
    return b;
}

}  // namespace

Matrix bmo_c1_matrix(double p0, int depth, bool log_variant) {
    require(p0 >= 1 && depth >= 1, "bmo matrix needs p0 >= 1 and depth >= 1");
    require(log_variant || p0 > 1, "growth construction needs p0 > 1");
    Matrix m{{1.0}};
    for (int n = 2; n <= depth; ++n) {
        const double w = log_variant ? 1 / (std::log(double(n)) + 1) : 1.0;
        const double b = choose_b(t_size(m), n, p0, w, false);
        std::vector<double> row;
        for (int i = 1; i <= n; ++i) {
            const double v = std::floor(w * (b * std::pow(n - i + 1.0, -p0) - b * std::pow(n - i + 2.0, -p0)));
            require(v >= 1, "bmo matrix: nonpositive entry");
            row.push_back(v);
        }
        m.push_back(row);
    }
    return m;
}

Matrix bmo_c1star_matrix(const std::vector<double>& P, int depth) {
    require(depth >= 1, "bmo matrix needs depth >= 1");
    require(int(P.size()) > depth, "bmo matrix: exponent sequence shorter than depth");
    Matrix m{{1.0}};
    for (int n = 2; n <= depth; ++n) {
        const double p = P[n];
        require(p > 1, "slow-growth construction: exponents must exceed 1");
        const double b = choose_b(t_size(m), n, p, 1.0, true);
        std::vector<double> row;
        for (int i = 1; i <= n; ++i) {
            const double v = std::floor(b * std::pow(n - i + 1.0, -p) - b * std::pow(n - i + 2.0, -p));
            require(v >= 1, "bmo matrix: nonpositive entry");
            row.push_back(v);
        }
        m.push_back(row);
    }
    return m;
}

Matrix bmo_lacunary_matrix(int depth) {
    require(depth >= 1 && depth <= 40, "lacunary matrix depth must lie in [1, 40]");
    Matrix m;
    int k = 0;
    for (int n = 1; n <= depth; ++n) {
        std::vector<double> row;
        for (int i = 1; i <= n; ++i) row.push_back(std::ldexp(1.0, k++));
        m.push_back(row);
    }
    return m;
}

Space bmo_space(const Matrix& m) {
    require(!m.empty() && m[0].size() == 1 && m[0][0] == 1, "bmo matrix must start with m_{1,1} = 1");
    for (std::size_t n = 0; n < m.size(); ++n) {
        require(m[n].size() == n + 1, "bmo matrix must be triangular");
        for (double v : m[n]) require(v >= 1 && v == std::floor(v), "bmo matrix entries must be positive integers");
    }
    Space s;
    struct Info {
        int level, branch;
        bool center;
    };
    std::vector<Info> info;
    std::vector<std::vector<int>> centers(m.size() + 1);
    std::vector<int> level_members;
    for (int n = 1; n <= int(m.size()); ++n) {
        centers[n].push_back(-1);
        for (int i = 1; i <= n; ++i) {
            const int c = s.add_class(1, 1.0, 1.0, 0.0);
            const int l = s.add_class(m[n - 1][i - 1], 1.0, double(n), 0.0);
            info.push_back({n, i, true});
            info.push_back({n, i, false});
            centers[n].push_back(c);
            s.subsets["S_" + std::to_string(n) + "_" + std::to_string(i)] = {c, l};
            level_members.push_back(c);
            level_members.push_back(l);
        }
        s.subsets["T_" + std::to_string(n)] = level_members;
    }
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            const Info &x = info[a], &y = info[b];
            double d = std::max(x.level, y.level);
            if (x.level == y.level && x.branch == y.branch && (x.center || y.center)) {
                d = x.level - 1.0 / (2 * x.branch + 1);
            } else if (x.center && y.center && x.level == y.level && std::abs(x.branch - y.branch) == 1) {
                d = x.level - 1.0 / (2 * std::min(x.branch, y.branch) + 2);
            } else if (x.center && y.center && std::abs(x.level - y.level) == 1) {
                const Info& lo = x.level < y.level ? x : y;
                const Info& hi = x.level < y.level ? y : x;
                if (lo.branch == lo.level && hi.branch == 1) d = lo.level + 0.5;
            }
            s.set_dist(int(a), int(b), d);
        }
    return s;
}

int bmo_growth_threshold(double p0) {
    double sum = 0;
    for (int l = 1000; l >= 1; --l) sum += std::pow(double(l), -p0);
    const double bound = 6 + 8 * sum;
    int N = int(std::ceil(bound - 1e-12));
    if (N % 2) ++N;
    return N;
}

std::vector<double> bmo_slow_growth_sequence(int depth, int N) {
    require(depth >= 2, "slow-growth sequence needs depth >= 2");
    std::vector<double> P(depth + 1, 0.0);
    P[2] = 2;
    for (int n = 2; n < depth; ++n) {
        const double k = P[n];
        const double lhs = 0.25 * (std::pow(double(n), -k) - std::pow(n + 1.0, -k));
        P[n + 1] = lhs <= k * std::exp(-(n - N - 1.0) / k) ? k : k + 1;
    }
    return P;
}

// ---------------------------------------------------------------- build

namespace {

Space build_gen2_family(const Recipe& r, const Caps& caps) {
    const std::string& k = r.kind;
    std::vector<double> F;
    if (k == "gen2_simple") {
        if (r.has("F")) {
            F = r.seq("F");
        } else {
            F.assign(std::size_t(r.integer("tau")), r.num("f", 1.0));
        }
    } else if (k == "gen2_t1" || k == "gen2_t1p") {
        const double p0 = r.num("p0");
        const int n = r.integer("n");
        require(n >= 1 && p0 > 1, "gen2_t1 needs n >= 1 and p0 > 1");
        const double tau = std::isinf(p0) ? std::ldexp(1.0, n) : s1_tau(p0, n, k == "gen2_t1p");
        check_points(std::size_t(2 * tau + 1), caps);
        F.assign(std::size_t(tau), double(n));
    } else if (k == "gen2_t2") {
        const double p0 = r.num("p0", 1.0);
        const int n = r.integer("n");
        require(n >= 1, "gen2_t2 needs n >= 1");
        if (p0 == 1) {
            for (int i = 1; i <= n; ++i) F.push_back(std::ldexp(1.0, i));
        } else {
            const auto q = s2_sequences(p0, n);
            double tau = 0;
            for (double sj : q.s) tau += sj;
            check_points(std::size_t(2 * tau + 1), caps);
            for (int j = 0; j < q.e; ++j) F.insert(F.end(), std::size_t(q.s[j]), q.m[j]);
        }
    }
    check_points(2 * F.size() + 1, caps);
    return gen2(F);
}

Space build_inner(const Recipe& r, const Caps& caps) {
    const std::string& k = r.kind;
    if (k == "gen1_star") {
        const double d = r.num("d", 2.0);
        if (r.has("F")) return star(r.seq("F"), d);
        return star_groups({{double(r.integer("tau")), r.num("m", 1.0)}}, d);
    }
    if (k == "gen1_s1" || k == "gen1_s1p") {
        const double p0 = r.num("p0");
        const int n = r.integer("n");
        require(n >= 1 && p0 >= 1, "gen1_s1 needs n >= 1 and p0 >= 1");
        require(k == "gen1_s1p" || p0 > 1, "gen1_s1 needs p0 > 1");
        const double tau = std::isinf(p0) ? std::ldexp(1.0, n) : s1_tau(p0, n, k == "gen1_s1p");
        return star_groups({{tau, double(n)}}, 2.0);
    }
    if (k == "gen1_s2_1") {
        const int n = r.integer("n");
        require(n >= 1 && n <= 1000, "gen1_s2_1 needs 1 <= n <= 1000");
        std::vector<double> F;
        for (int i = 1; i <= n; ++i) F.push_back(std::ldexp(1.0, i));
        return star(F, 2.0);
    }
    if (k == "gen1_s2") {
        const auto q = s2_sequences(r.num("p0"), r.integer("n"));
        std::vector<Group> g;
        for (int j = 0; j < q.e; ++j) g.push_back({q.s[j], q.m[j]});
        return star_groups(g, 2.0);
    }
    if (k == "gen1_s3") return gen1_s3(r.num("p0"), r.integer("n"));
    if (k == "gen2_simple" || k == "gen2_t1" || k == "gen2_t1p" || k == "gen2_t2") return build_gen2_family(r, caps);
    if (k == "gen2_t3") return gen2_t3(r.num("p0"), r.integer("n"), caps);
    if (k == "gen2_basic") {
        const int tau = r.integer("tau");
        check_points(std::size_t(2 * tau + 1), caps);
        return basic_t(tau, r.num("d"), r.num("m", 1.0));
    }
    if (k == "gen2_modified") {
        Recipe base = r;
        base.kind = r.has("base") ? r.params.at("base") : "gen2_simple";
        base.params.erase("base");
        require(base.kind != "gen2_modified", "gen2_modified cannot wrap itself");
        return modified_metric(build(base, caps));
    }
    if (k == "segment") {
        const int n = r.integer("n");
        check_points(std::size_t(n + 1), caps);
        return segment(n, r.integer("subtype", 1), r.num("kappa"));
    }
    if (k == "composite_prefix") return composite_prefix(r, caps);
    if (k == "typeI") return type1(r.seq("m"));
    if (k == "typeI_trend") {
        const double p0 = r.num("p0"), r0 = r.num("r0");
        const int l = r.integer("l");
        require(p0 > 1 && r0 >= 1 && l >= 1 && l <= 60, "typeI_trend needs p0 > 1, r0 >= 1, 1 <= l <= 60");
        std::vector<double> m;
        for (int i = 1; i <= l; ++i) m.push_back(std::ceil(std::pow(2.0, i * (p0 - 1)) * std::pow(double(i), -p0 / r0)));
        for (std::size_t i = 1; i < m.size(); ++i) m[i] = std::max(m[i], m[i - 1]);
        return type1(m);
    }
    if (k == "typeI_p1") return type1_p1(r.seq("mt"));
    if (k == "typeII") return type2(r.num("p"), r.num("q"), r.num("r"), r.integer("l"));
    if (k == "typeII_inf") return type2_inf(r.num("p"), r.num("q"), r.integer("l"));
    if (k == "typeIII") return type3(r.num("p"), r.integer("N"), r.integer("M"), r.num("K", 1.0), r.num("L", 1.0));
    if (k == "typeIII_cor") {
        const double p = r.num("p");
        const auto c = type3_cor_params(p, r.num("lambda"), r.num("a"), r.num("b"), r.num("kappa"));
        return type3(p, c.N, c.M, c.K, c.L);
    }
    if (k == "composite_W") {
        WParams w{r.num("p"), r.num("gamma"), r.num("R"), r.num("eps"), r.integer("a"), r.integer("b")};
        if (r.has("n")) return composite_w(w, r.integer("n"), r.integer("n"), caps);
        return composite_w(w, 1, r.integer("n_max"), caps);
    }
    if (k == "W_leq" || k == "W_less") {
        const double p = r.num("p"), delta = r.num("delta"), omega = r.num("omega");
        const int n = r.integer("n");
        require(n >= 1 && delta >= 0 && delta <= 1 && omega >= 0 && omega <= delta,
                k + " needs n >= 1 and 0 <= omega <= delta <= 1");
        const int a = n, b = n * n;
        const double d = std::hypot(double(a), double(b));
        const double eps = 1.0 / (3 * n);
        const double shift = k == "W_leq" ? 0.0 : -1.0 / n;
        const double gamma = a * (omega + shift) - b * delta + 3 * d * eps;
        WParams w{p, gamma, std::pow(double(n), double(n)), eps, a, b};
        return composite_w(w, 1, r.integer("m_max", 1), caps);
    }
    if (k == "bmo_matrix") {
        Matrix m;
        std::stringstream rows(r.params.count("rows") ? r.params.at("rows") : "");
        std::string row;
        while (std::getline(rows, row, ';')) {
            Recipe tmp;
            tmp.kind = k;
            tmp.params["row"] = row;
            m.push_back(tmp.seq("row"));
        }
        return bmo_space(m);
    }
    if (k == "bmo_c1") return bmo_space(bmo_c1_matrix(r.num("p0"), r.integer("depth"), false));
    if (k == "bmo_c1p") return bmo_space(bmo_c1_matrix(r.num("p0"), r.integer("depth"), true));
    if (k == "bmo_c1star") {
        const int depth = r.integer("depth");
        std::vector<double> P;
        if (r.has("P")) {
            P = {0.0, 0.0};
            for (double v : r.seq("P")) P.push_back(v);  // listed from p_2 on
        } else {
            P = bmo_slow_growth_sequence(depth, r.integer("N", bmo_growth_threshold(2.0)));
        }
        return bmo_space(bmo_c1star_matrix(P, depth));
    }
    if (k == "bmo_lacunary") return bmo_space(bmo_lacunary_matrix(r.integer("depth")));
    if (k == "lattice") {
        dichotomy::LatticeSpec spec;
        spec.example = r.has("example") ? r.params.at("example") : "C";
        spec.R = r.integer("R");
        return dichotomy::lattice_build(spec);
    }
    throw std::invalid_argument("unknown construction kind: " + k);
}

}  // namespace

Space build(const Recipe& r, const Caps& caps) {
    Space s = build_inner(r, caps);
    check_caps(s, caps);
    return s;
}

// -------------------------------------------------------------- witnesses

std::vector<double> witness(const Recipe& r, const Space& s, const std::string& name) {
    std::vector<double> f(s.size(), 0.0);
    if (name == "hub-indicator") {
        const auto* hub = find_last(s, "hub");
        if (!hub) throw std::invalid_argument("witness hub-indicator: space has no hub");
        for (int c : *hub) f[c] = 1;
        return f;
    }
    if (name == "layered") {
        // 1/m_i on the i-th lower level.
        bool any = false;
        for (const auto& [key, members] : s.subsets) {
            const auto us = key.rfind("T_");
            if (us == std::string::npos || (us > 0 && key[us - 1] != '/')) continue;
            if (key.find("To") != std::string::npos) continue;
            for (int c : members) f[c] = 1 / s.classes[c].unit_mass;
            any = true;
        }
        if (!any || r.kind.rfind("bmo", 0) == 0) throw std::invalid_argument("witness layered: needs a type II space");
        return f;
    }
    if (name == "type3") {
        // (h_i m_i)^{-1/p} on U_i, taken from the built masses.
        const double p = r.num("p");
        bool any = false;
        for (const auto& [key, members] : s.subsets) {
            const auto u = key.rfind('U');
            if (u == std::string::npos || (u > 0 && key[u - 1] != '/')) continue;
            const std::string rest = key.substr(u + 1);
            if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit)) continue;
            double mass = 0;
            for (int c : members) mass += s.class_mass(c);
            for (int c : members) f[c] = std::pow(mass, -1 / p);
            any = true;
        }
        if (!any) throw std::invalid_argument("witness type3: needs a type III space");
        return f;
    }
    if (name == "bmo-growth") {
        bool any = false;
        for (const auto& [key, members] : s.subsets) {
            int n = 0, i = 0;
            if (std::sscanf(key.c_str(), "S_%d_%d", &n, &i) != 2) continue;
            for (int c : members) f[c] = i + n * (n - 1) / 2.0;
            any = true;
        }
        if (!any) throw std::invalid_argument("witness bmo-growth: needs a BMO test space");
        return f;
    }
    if (name == "s3-levels") {
        const double p0 = r.num("p0");
        const int n = r.integer("n");
        bool any = false;
        for (int i = 1; i <= n; ++i) {
            const auto* lv = find_last(s, "S_" + std::to_string(i));
            if (!lv) continue;
            for (int c : *lv) f[c] = std::pow(2.0, (n - i) / (p0 - 1));
            any = true;
        }
        if (!any) throw std::invalid_argument("witness s3-levels: needs a barred space");
        return f;
    }
    throw std::invalid_argument("unknown witness: " + name);
}

// ------------------------------------------------------- explicit constants

std::optional<double> explicit_upper(const Recipe& r, const OperatorSpec& spec) {
    const std::string& k = r.kind;
    const bool weakish = spec.kind == Kind::weak || spec.kind == Kind::rweak;
    if (k == "gen1_s2_1" && spec.p == 1 && spec.kappa == 1 && weakish) return 2.0;
    if ((k == "gen2_t1" || k == "gen2_t1p") && spec.p == 1 && spec.kappa == 1 && spec.centered &&
        spec.kind == Kind::strong)
        return 5.0;
    if (k == "gen1_s1" && spec.kappa == 1 && spec.p == r.num("p0") && (spec.kind == Kind::strong || weakish))
        return std::pow(2 + std::pow(2.0, spec.p), 1 / spec.p);
    if (k == "segment" && spec.p == 1 && spec.kappa == r.num("kappa")) {
        const int sub = r.integer("subtype", 1);
        if (sub == 1 && weakish) return 2.0;
        if (sub == 2 && spec.centered && spec.kind == Kind::strong) return 4.0;
    }
    if (k == "gen1_star" && !r.has("F") && (spec.kind == Kind::strong || weakish)) {
        const double p = spec.p, d = r.num("d", 2.0), tau = r.integer("tau"), m = r.num("m", 1.0);
        // Large kappa: every average is a singleton value or the global mean, so
        // M f <= max(|f|, A f) and the constant is at most 2^{1/p}.
        if (spec.kappa >= d) return std::pow(2.0, 1 / p);
        return std::pow(std::pow(2.0, p - 1) * (1 + tau * std::pow(m, 1 - p) + std::pow(2.0, p - 1)), 1 / p);
    }
    return std::nullopt;
}

// ----------------------------------------------------------------- catalog

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = {
        {"gen1_star", "tau, d=2, m=1 | F=list, d=2", {"hub-indicator"}},
        {"gen1_s1", "p0 > 1, n", {"hub-indicator"}},
        {"gen1_s1p", "p0 >= 1, n", {"hub-indicator"}},
        {"gen1_s2_1", "n", {"hub-indicator"}},
        {"gen1_s2", "p0 > 1, n", {"hub-indicator"}},
        {"gen1_s3", "p0 > 1, n", {"s3-levels"}},
        {"gen2_simple", "F=list | tau, f=1", {"hub-indicator"}},
        {"gen2_basic", "tau, d in (1,3], m=1", {"hub-indicator"}},
        {"gen2_t1", "p0 > 1, n", {"hub-indicator"}},
        {"gen2_t1p", "p0 > 1, n", {"hub-indicator"}},
        {"gen2_t2", "p0=1, n", {"hub-indicator"}},
        {"gen2_t3", "p0 > 1, n", {"s3-levels"}},
        {"gen2_modified", "base=gen2_simple plus the base parameters", {"hub-indicator"}},
        {"segment", "n, subtype=1|2, kappa", {"hub-indicator"}},
        {"composite_prefix",
         "family=S_tilde|T_tilde (kt, pt, eps, delta, N) or S_hat|T_hat|S_hat_var|T_hat_var (kh); n | n_max",
         {"hub-indicator"}},
        {"typeI", "m=list", {"hub-indicator"}},
        {"typeI_trend", "p0, r0, l", {"hub-indicator"}},
        {"typeI_p1", "mt=list starting with 1", {"hub-indicator"}},
        {"typeII", "p, q, r, l", {"layered"}},
        {"typeII_inf", "p, q, l", {"layered"}},
        {"typeIII", "p, N, M, K=1, L=1", {"type3"}},
        {"typeIII_cor", "p, lambda, a, b, kappa", {"type3"}},
        {"composite_W", "p, gamma, a, b, R, eps; n | n_max", {"type3"}},
        {"W_leq", "p, delta, omega, n, m_max=1", {"type3"}},
        {"W_less", "p, delta, omega, n, m_max=1", {"type3"}},
        {"bmo_matrix", "rows=\"1;5,31;...\"", {"bmo-growth"}},
        {"bmo_c1", "p0 > 1, depth", {"bmo-growth"}},
        {"bmo_c1p", "p0 >= 1, depth", {"bmo-growth"}},
        {"bmo_c1star", "depth, P=list from p_2 | N (slow-growth rule)", {"bmo-growth"}},
        {"bmo_lacunary", "depth", {"bmo-growth"}},
        {"lattice", "example=C|D|A|B|ones, R", {}},
    };
    return c;
}

}  // namespace ndmax::zoo
