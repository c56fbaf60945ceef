#include "ndmax/scan.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "ndmax/constants.hpp"
#include "ndmax/lorentz.hpp"
#include "ndmax/maximal.hpp"

namespace ndmax::scan {

namespace {

Component type3_component(const Space& s, double p, double index, double kappa, double lambda, int a, int b) {
    zoo::Recipe r;
    r.kind = "typeIII";
    r.set("p", p);
    Component c;
    c.index = index;
    c.kappa = kappa;
    c.lambda = lambda;
    c.a = a;
    c.b = b;
    c.masses = s.masses();
    c.g = zoo::witness(r, s, "type3");
    const auto M = maximal(s, c.g, 1.0, true);
    c.Mg.assign(s.size(), 0.0);
    for (int k : s.subset("Uo")) c.Mg[k] = M[k];
    return c;
}

double inv(double x) { return x > 0 ? 1 / x : kInf; }

}  // namespace

std::vector<Component> w_components(double p, double gamma, double R, double eps, int a, int b, int n_max,
                                    const zoo::Caps& caps) {
    if (n_max < 2) throw std::invalid_argument("a trend needs at least two members");
    const double d = std::hypot(double(a), double(b));
    std::vector<Component> out;
    for (int n = 1; n <= n_max; ++n) {
        const double kappa = std::pow(R, n);
        const double lambda = std::pow(R, -n * gamma + (n + 2) * eps * d);
        const auto c = zoo::type3_cor_params(p, lambda, a, b, kappa);
        zoo::Recipe r;
        r.kind = "typeIII";
        r.set("p", p).set("N", c.N).set("M", c.M).set("K", c.K).set("L", c.L);
        out.push_back(type3_component(zoo::build(r, caps), p, n, kappa, lambda, a, b));
    }
    return out;
}

std::vector<Component> cor_components(double p, double lambda, int a, int b, const std::vector<double>& kappas,
                                      const zoo::Caps& caps) {
    if (kappas.size() < 2) throw std::invalid_argument("a trend needs at least two members");
    std::vector<Component> out;
    for (double kappa : kappas) {
        zoo::Recipe r;
        r.kind = "typeIII_cor";
        r.set("p", p).set("lambda", lambda).set("a", a).set("b", b).set("kappa", kappa);
        out.push_back(type3_component(zoo::build(r, caps), p, kappa, kappa, lambda, a, b));
    }
    return out;
}

std::vector<Component> point_components(int n_max) {
    if (n_max < 2) throw std::invalid_argument("a trend needs at least two members");
    std::vector<Component> out;
    for (int n = 1; n <= n_max; ++n) {
        Component c;
        c.index = n;
        c.masses = {1.0};
        c.g = {1.0};
        c.Mg = {1.0};
        out.push_back(c);
    }
    return out;
}

double component_ratio(const Component& c, double p, double u, double w) {
    return lorentz_norm(c.Mg, c.masses, p, inv(w)) / lorentz_norm(c.g, c.masses, p, inv(u));
}

Region scan_region(const std::vector<Component>& comps, double p, int grid, double slope_threshold) {
    if (grid < 2 || grid > 41) throw std::invalid_argument("grid must lie in [2, 41]");
    if (comps.size() < 2) throw std::invalid_argument("a trend needs at least two members");
    Region reg;
    reg.p = p;
    reg.grid = grid;
    reg.cells.resize(std::size_t(grid) * grid);
    auto coord = [grid](int k) { return double(k) / (grid - 1); };

    auto run = [&](std::size_t idx) {
        Cell& c = reg.cells[idx];
        c.u = coord(int(idx) / grid);
        c.w = coord(int(idx) % grid);
        c.feasible = c.w <= c.u + 1e-12;
        if (!c.feasible) return;
        std::vector<double> index;
        double best = 0;
        for (const auto& m : comps) {
            const double r = component_ratio(m, p, c.u, c.w);
            best = std::max(best, r);
            c.ratios.push_back(r);
            c.lower.push_back(best);
            index.push_back(m.index);
        }
        const auto t = classify_trend(index, c.lower, std::vector<double>(index.size(), std::nan("")), slope_threshold);
        c.slope = t.fit.slope;
        c.diverging = t.diverging;
    };

    // Cells are independent; each worker owns a strided share.
    const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < reg.cells.size(); i += workers) run(i);
        });
    for (auto& th : pool) th.join();

    // Monotone closure: decreasing u or increasing w must keep a cell diverging.
    for (const auto& c : reg.cells) {
        if (!c.feasible || c.diverging) continue;
        for (const auto& hot : reg.cells)
            if (hot.feasible && hot.diverging && c.u <= hot.u + 1e-12 && c.w >= hot.w - 1e-12) {
                reg.warnings.push_back({c.u, c.w, c.slope, hot.u, hot.w});
                break;
            }
    }
    return reg;
}

const Cell& cell_at(const Region& r, double u, double w) {
    const int iu = int(std::lround(u * (r.grid - 1)));
    const int iw = int(std::lround(w * (r.grid - 1)));
    if (iu < 0 || iw < 0 || iu >= r.grid || iw >= r.grid) throw std::out_of_range("cell outside the grid");
    return r.cells[std::size_t(iu) * r.grid + iw];
}

std::string region_csv(const Region& r) {
    std::ostringstream os;
    os << "u,w,class,slope\n";
    for (const auto& c : r.cells) {
        os << fmt12(c.u) << ',' << fmt12(c.w) << ',';
        if (!c.feasible)
            os << "n/a,n/a\n";
        else
            os << (c.diverging ? "diverging" : "bounded") << ',' << fmt12(c.slope) << '\n';
    }
    for (const auto& w : r.warnings) os << fmt12(w.u) << ',' << fmt12(w.w) << ",warning," << fmt12(w.slope) << '\n';
    return os.str();
}

}  // namespace ndmax::scan
