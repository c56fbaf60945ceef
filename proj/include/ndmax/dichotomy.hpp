#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ndmax/space.hpp"

namespace ndmax::dichotomy {

// Truncated weighted lattice. Examples C and D live on the square
// {max(|n|,|m|) <= R} of Z^2 with the sup metric; A and B are the integer
// segment [-R, R] with weights e^{n^2} and e^{-n^2}; "ones" is counting
// measure on the square; "custom" uses `weight`.
struct LatticeSpec {
    std::string example = "C";
    int R = 1;
    std::function<double(int, int)> weight;
};

bool is_planar(const std::string& example);
double lattice_weight(const std::string& example, int n, int m);
Space lattice_build(const LatticeSpec& spec);
// Class index of lattice point (n, m); m must be 0 for the one-dimensional examples.
int lattice_index(const LatticeSpec& spec, int n, int m);

// Named test functions: "fC" is 2^n on the positive horizontal axis, "gD" is
// 2^{n^2} there; both vanish elsewhere.
std::vector<double> lattice_function(const LatticeSpec& spec, const std::string& name);

struct ProbeRow {
    int R = 0;
    int n = 0, m = 0;
    double value = 0;
};
std::vector<ProbeRow> probe(const std::string& example, const std::vector<int>& radii, const std::string& function,
                            const std::vector<std::pair<int, int>>& points, bool centered);

// Average of f against the lattice measure over the closed sup-metric ball of
// radius r about (n, m), intersected with the truncation.
double ball_average(const LatticeSpec& spec, const Space& s, const std::vector<double>& f, int n, int m, int r);
// Largest centered average at (n, m) over radii whose ball lies inside the truncation.
double interior_centered_max(const LatticeSpec& spec, const Space& s, const std::vector<double>& f, int n, int m);

// |B_{r+1}(0)| / |B_r(0)| for closed sup-metric balls about the origin.
std::vector<double> doubling_ratio(const LatticeSpec& spec, const std::vector<int>& radii);

}  // namespace ndmax::dichotomy
