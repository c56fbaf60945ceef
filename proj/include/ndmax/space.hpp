#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ndmax/util.hpp"

namespace ndmax {

// A set of interchangeable points: `count` members of mass `unit_mass` each.
// Counts are integral but stored as doubles so that huge orbits fit.
struct PointClass {
    int id = 0;
    double count = 1;
    double unit_mass = 1;

    double mass() const { return count * unit_mass; }
};

// Two-level structure of the type-III spaces, needed by the fiber operators.
struct TypeIIIInfo {
    double p = 2;
    int N = 0;
    int M = 0;
    double K = 1;
    double L = 1;
    std::vector<double> m, h;          // lower level, index i = 0..N-1
    std::vector<double> alpha, beta;   // upper level, index k = 0..M-1
    std::vector<std::vector<int>> lower;  // lower[i][j]: class of x_{i,j}, j < h_i
    std::vector<std::vector<int>> upper;  // upper[k][c]: class of cell c < h_N of level k

    double hN() const { return h.back(); }
    // Index j of the lower point of level i adjacent to upper cell c.
    int gamma(int i, int c) const;
};

// Orbit-compressed finite metric measure space. Every member of class a sits at
// distance between[a][b] from every member of class b; two distinct members of
// class a are at distance within[a].
struct Space {
    std::vector<PointClass> classes;
    std::vector<double> within;
    std::vector<std::vector<double>> between;
    std::map<std::string, std::vector<int>> subsets;
    std::optional<TypeIIIInfo> type3;

    std::size_t size() const { return classes.size(); }
    double dist(int a, int b) const { return a == b ? within[a] : between[a][b]; }
    double class_mass(int a) const { return classes[a].mass(); }
    double total_mass() const;
    double expanded_points() const;
    double diameter() const;
    std::vector<double> masses() const;
    std::vector<double> counts() const;

    // Append a class and return its index; distances default to `fill`.
    int add_class(double count, double unit_mass, double within_dist, double fill);
    void set_dist(int a, int b, double d);
    const std::vector<int>& subset(const std::string& name) const;
};

struct ValidationReport {
    bool ok = true;
    bool expanded = false;
    std::vector<std::string> issues;
};

ValidationReport validate(const Space& s, std::size_t expand_limit = 2000);

// Fully expanded copy; origin[i] is the class each point came from.
struct Expansion {
    Space space;
    std::vector<int> origin;
};
Expansion expand(const Space& s, std::size_t cap = 2000);
std::vector<double> lift(const std::vector<double>& f, const std::vector<int>& origin);

std::vector<double> critical_radii(const Space& s, int center);

struct Ball {
    int center = 0;
    double threshold = 0;
    std::vector<double> members;  // included count per class
    double mass = 0;
};
Ball closed_ball(const Space& s, int center, double d);
// Mass of the closed ball without materializing members.
double closed_ball_mass(const Space& s, int center, double d);

enum class CombineMode { plain, kappa, lorentz };

// Disjoint union of rescaled components. Component n occupies the subset
// "component:n" of the result; its witnesses extend by zero.
Space combine(const std::vector<Space>& comps, CombineMode mode, double kappa0 = 1.0);

nlohmann::json to_json(const Space& s);
Space space_from_json(const nlohmann::json& j);
nlohmann::json function_to_json(const std::vector<double>& f);
std::vector<double> function_from_json(const nlohmann::json& j);

}  // namespace ndmax
