#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ndmax/constants.hpp"
#include "ndmax/space.hpp"

namespace ndmax::zoo {

// Construction name plus raw key=value parameters. Sequences are written as
// comma-separated lists.
struct Recipe {
    std::string kind;
    std::map<std::string, std::string> params;

    bool has(const std::string& key) const { return params.count(key) > 0; }
    double num(const std::string& key) const;
    double num(const std::string& key, double fallback) const;
    int integer(const std::string& key) const;
    int integer(const std::string& key, int fallback) const;
    std::vector<double> seq(const std::string& key) const;

    Recipe& set(const std::string& key, double v);
    Recipe& set(const std::string& key, const std::string& v);
    static Recipe parse(const std::string& kind, const std::vector<std::string>& kv);
};

struct Caps {
    std::size_t max_classes = 6000;
    std::size_t expand_points = 2000;  // singleton-only constructions must fit here
    double max_mass = 1e300;
};

struct CatalogEntry {
    std::string kind;
    std::string params;
    std::vector<std::string> witnesses;
};
const std::vector<CatalogEntry>& catalog();

Space build(const Recipe& r, const Caps& caps = {});
std::vector<double> witness(const Recipe& r, const Space& s, const std::string& name);
// Explicit constants proven for the construction, when one applies to `spec`.
std::optional<double> explicit_upper(const Recipe& r, const OperatorSpec& spec);

// ---- direct constructors ----

// Hub of mass 1 at distance 1 from leaves of the given masses; leaves at
// mutual distance d. Equal consecutive masses share a class.
Space star(const std::vector<double>& leaf_masses, double d = 2.0);
// Second-generation space: y0, y_i of mass 1/tau, y'_i of mass F(i).
Space gen2(const std::vector<double>& F);
// Basic space of the second type with parameters (tau, d, m).
Space basic_t(int tau, double d, double m);
Space segment(int n, int subtype, double kappa);
Space type1(const std::vector<double>& m);
Space type1_p1(const std::vector<double>& mt);
Space type2(double p, double q, double r, int l);
Space type2_inf(double p, double q, int l);
Space type3(double p, int N, int M, double K, double L);
// Distances replaced by 1, 2 or 3 according to whether the points are
// adjacent, share a neighbour at distance 1, or neither.
Space modified_metric(const Space& s);

// ---- sequences ----

struct S2Sequences {
    double c = 0;
    int e = 0;
    std::vector<double> m, s;
};
S2Sequences s2_sequences(double p0, int n);

struct LowerSequences {
    std::vector<double> m, h;
};
// Greedy-minimal (m_i, h_i) with m_{i+1} >= 2 m_i h_i, h_{i+1}/h_i integral and
// 1 <= m_i^{1-p} h_i < 2.
LowerSequences lower_sequences(double p, int count);

struct Type3Sequences {
    std::vector<double> m, h, alpha, beta;
};
Type3Sequences type3_sequences(double p, int N, int M, double L);

struct Type3Cor {
    int N = 0, M = 0;
    double K = 1, L = 1;
};
Type3Cor type3_cor_params(double p, double lambda, double a, double b, double kappa);

std::vector<double> type1_p1_h(const std::vector<double>& mt);

// Triangular matrix rows m[n-1][i-1] for BMO test spaces.
using Matrix = std::vector<std::vector<double>>;
Matrix bmo_c1_matrix(double p0, int depth, bool log_variant);
Matrix bmo_c1star_matrix(const std::vector<double>& P, int depth);
Matrix bmo_lacunary_matrix(int depth);
Space bmo_space(const Matrix& m);
// Smallest even integer at least 6 + 8 * sum_{l <= 1000} l^{-p0}.
int bmo_growth_threshold(double p0);
// Sequence p_2, p_3, ... built by the slow-growth rule; P[n] holds p_n (P[0], P[1] unused).
std::vector<double> bmo_slow_growth_sequence(int depth, int N);

}  // namespace ndmax::zoo
