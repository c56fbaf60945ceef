#include "ndmax/dichotomy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "ndmax/maximal.hpp"

namespace ndmax::dichotomy {

bool is_planar(const std::string& example) { return example != "A" && example != "B"; }

double lattice_weight(const std::string& example, int n, int m) {
    if (example == "C" || example == "D") {
        if (n == 0) return std::ldexp(1.0, 2 * std::abs(m));
        if (example == "D" && n < 0 && m == 0) return std::ldexp(1.0, n * n);
        return 1.0;
    }
    if (example == "A") return std::exp(double(n) * n);
    if (example == "B") return std::exp(-double(n) * n);
    if (example == "ones") return 1.0;
    throw std::invalid_argument("unknown lattice example: " + example);
}

namespace {

double weight_of(const LatticeSpec& spec, int n, int m) {
    if (spec.example == "custom") {
        if (!spec.weight) throw std::invalid_argument("custom lattice needs a weight function");
        return spec.weight(n, m);
    }
    return lattice_weight(spec.example, n, m);
}

void check_spec(const LatticeSpec& spec) {
    if (spec.R < 0) throw std::invalid_argument("lattice radius must be nonnegative");
    if (spec.example == "D" && spec.R > 24) throw BuildError("Example D is capped at R <= 24");
    if (spec.example == "C" && spec.R > 500) throw BuildError("Example C is capped at R <= 500");
    if (spec.example == "A" && spec.R > 26) throw BuildError("discretized Example A is capped at R <= 26");
    if (spec.example == "B" && spec.R > 27) throw BuildError("discretized Example B is capped at R <= 27");
}

struct Point {
    int n, m;
};

std::vector<Point> points_of(const LatticeSpec& spec) {
    std::vector<Point> pts;
    const int R = spec.R;
    if (is_planar(spec.example)) {
        for (int n = -R; n <= R; ++n)
            for (int m = -R; m <= R; ++m) pts.push_back({n, m});
    } else {
        for (int n = -R; n <= R; ++n) pts.push_back({n, 0});
    }
    return pts;
}

int sup_dist(const Point& a, const Point& b) { return std::max(std::abs(a.n - b.n), std::abs(a.m - b.m)); }

}  // namespace

Space lattice_build(const LatticeSpec& spec) {
    check_spec(spec);
    const auto pts = points_of(spec);
    Space s;
    for (const auto& p : pts) {
        const double w = weight_of(spec, p.n, p.m);
        if (!(w > 0) || !std::isfinite(w)) throw BuildError("lattice weight must be positive and finite");
        s.add_class(1, w, 1.0, 1.0);
    }
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b) s.set_dist(int(a), int(b), sup_dist(pts[a], pts[b]));
    s.subsets["origin"] = {lattice_index(spec, 0, 0)};
    return s;
}

int lattice_index(const LatticeSpec& spec, int n, int m) {
    const int R = spec.R;
    if (std::abs(n) > R || std::abs(m) > R) throw std::out_of_range("lattice point outside the truncation");
    if (!is_planar(spec.example)) {
        if (m != 0) throw std::out_of_range("one-dimensional lattice has m = 0 only");
        return n + R;
    }
    return (n + R) * (2 * R + 1) + (m + R);
}

std::vector<double> lattice_function(const LatticeSpec& spec, const std::string& name) {
    const auto pts = points_of(spec);
    std::vector<double> f(pts.size(), 0.0);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const auto& p = pts[k];
        if (p.n <= 0 || p.m != 0) continue;
        if (name == "fC")
            f[k] = std::ldexp(1.0, p.n);
        else if (name == "gD")
            f[k] = std::ldexp(1.0, p.n * p.n);
        else
            throw std::invalid_argument("unknown lattice function: " + name);
    }
    return f;
}

std::vector<ProbeRow> probe(const std::string& example, const std::vector<int>& radii, const std::string& function,
                            const std::vector<std::pair<int, int>>& points, bool centered) {
    std::vector<ProbeRow> rows;
    for (int R : radii) {
        LatticeSpec spec;
        spec.example = example;
        spec.R = R;
        const Space s = lattice_build(spec);
        const auto f = lattice_function(spec, function);
        const auto Mf = maximal(s, f, 1.0, centered);
        for (const auto& [n, m] : points) rows.push_back({R, n, m, Mf[lattice_index(spec, n, m)]});
    }
    return rows;
}

double ball_average(const LatticeSpec& spec, const Space& s, const std::vector<double>& f, int n, int m, int r) {
    const auto pts = points_of(spec);
    double num = 0, den = 0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (sup_dist(pts[k], {n, m}) > r) continue;
        num += f[k] * s.classes[k].unit_mass;
        den += s.classes[k].unit_mass;
    }
    return num / den;
}

double interior_centered_max(const LatticeSpec& spec, const Space& s, const std::vector<double>& f, int n, int m) {
    const int reach = is_planar(spec.example) ? spec.R - std::max(std::abs(n), std::abs(m)) : spec.R - std::abs(n);
    double best = 0;
    for (int r = 0; r <= reach; ++r) best = std::max(best, ball_average(spec, s, f, n, m, r));
    return best;
}

std::vector<double> doubling_ratio(const LatticeSpec& spec, const std::vector<int>& radii) {
    std::vector<double> out;
    for (int r : radii) {
        if (r < 0 || r + 1 > spec.R) throw std::out_of_range("ratio radius exceeds the truncation");
        double inner = 0, outer = 0;
        for (const auto& p : points_of(spec)) {
            const int d = sup_dist(p, {0, 0});
            const double w = weight_of(spec, p.n, p.m);
            if (d <= r) inner += w;
            if (d <= r + 1) outer += w;
        }
        out.push_back(outer / inner);
    }
    return out;
}

}  // namespace ndmax::dichotomy
