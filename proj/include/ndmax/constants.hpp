#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ndmax/maximal.hpp"
#include "ndmax/space.hpp"

namespace ndmax {

enum class Kind { strong, weak, rweak, lorentz };

// Which inequality is being measured. `q` and `r` are the Lorentz exponents of
// the source and target spaces; the named kinds fix them from p.
struct OperatorSpec {
    double p = 1;
    double q = 1;
    double r = 1;
    double kappa = 1;
    bool centered = true;
    Kind kind = Kind::strong;

    static OperatorSpec make(Kind kind, double p, double kappa = 1, bool centered = true, double q = 0, double r = 0);
    bool restricted() const { return kind == Kind::rweak; }
};

std::string kind_name(Kind k);
Kind parse_kind(const std::string& s);

// ||M f||_{p,r} / ||f||_{p,q}
double ratio(const Space& s, const std::vector<double>& f, const OperatorSpec& spec);
double ratio(const MaximalPlan& plan, const std::vector<double>& masses, const std::vector<double>& f,
             const OperatorSpec& spec);

struct NormEstimate {
    double lower = 0;
    std::optional<double> upper;
    std::vector<double> witness;
    std::string method;
};

enum class Method { automatic, indicators, ascent, witness };
Method parse_method(const std::string& s);

struct SearchOptions {
    Method method = Method::automatic;
    int budget = 20;          // ascent restarts
    std::uint64_t seed = 1;
    int sweeps = 200;
    int exhaustive_classes = 20;  // exhaustive indicator search up to this many classes
    std::vector<std::pair<std::string, std::vector<double>>> witnesses;
    std::optional<double> upper;
};

NormEstimate search_constant(const Space& s, const OperatorSpec& spec, const SearchOptions& opt);

// Growth classification of a sequence of lower bounds along a family.
struct TrendReport {
    std::vector<double> index;
    std::vector<double> lower;
    std::vector<double> predicted;
    LinearFit fit;  // log(lower) against log(index)
    bool diverging = false;
};

TrendReport classify_trend(std::vector<double> index, std::vector<double> lower, std::vector<double> predicted,
                           double slope_threshold = 0.1);

TrendReport family_trend(const std::function<Space(int)>& build,
                         const std::function<std::vector<double>(const Space&, int)>& witness, const OperatorSpec& spec,
                         const std::vector<int>& indices,
                         const std::function<double(int)>& predicted = nullptr);

}  // namespace ndmax
