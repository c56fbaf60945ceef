#pragma once

#include <string>
#include <vector>

#include "ndmax/space.hpp"
#include "ndmax/zoo.hpp"

namespace ndmax::scan {

// One member of a family, reduced to what the region scan needs: the witness g,
// its centered maximal function restricted to the measured part, and the masses.
struct Component {
    double index = 0;       // family index used as the trend abscissa
    double kappa = 1;       // growth parameter of the member, for the scaling model
    double lambda = 1;      // prefactor of the member, for the scaling model
    int a = 1, b = 1;       // exponents of the scaling model
    std::vector<double> masses, g, Mg;
};

// Members 1..n_max of the composite W family, one type-III space per index.
std::vector<Component> w_components(double p, double gamma, double R, double eps, int a, int b, int n_max,
                                    const zoo::Caps& caps = {});
// typeIII_cor spaces with fixed lambda for each listed kappa.
std::vector<Component> cor_components(double p, double lambda, int a, int b, const std::vector<double>& kappas,
                                      const zoo::Caps& caps = {});
// One-point spaces; every ratio is independent of the index.
std::vector<Component> point_components(int n_max);

// ||Mg||_{p,r} / ||g||_{p,q} for q = 1/u and r = 1/w (zero means infinity).
double component_ratio(const Component& c, double p, double u, double w);

struct Cell {
    double u = 0, w = 0;
    bool feasible = true;        // w <= u; otherwise the cell is reported as n/a
    bool diverging = false;
    double slope = 0;
    std::vector<double> lower;   // running maximum of the member ratios
    std::vector<double> ratios;  // member ratios
};

// A bounded cell lying in the monotone closure of a diverging one.
struct Warning {
    double u = 0, w = 0, slope = 0;
    double from_u = 0, from_w = 0;
};

struct Region {
    double p = 1;
    int grid = 0;
    std::vector<Cell> cells;            // row-major in u, then w
    std::vector<Warning> warnings;
};

// Grid points u, w in {0, 1/(grid-1), ..., 1}. Cells run in parallel.
Region scan_region(const std::vector<Component>& comps, double p, int grid, double slope_threshold = 0.1);
const Cell& cell_at(const Region& r, double u, double w);

// CSV with header "u,w,class,slope"; closure violations follow as rows of class "warning".
std::string region_csv(const Region& r);

}  // namespace ndmax::scan
