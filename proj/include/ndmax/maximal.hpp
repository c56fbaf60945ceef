#pragma once

#include <vector>

#include "ndmax/space.hpp"

namespace ndmax {

// Precomputed ball structure for one (space, kappa, centered) triple. Each
// center's distances are sorted once; applying the plan to a function then
// costs one pass over the sorted entries per center.
class MaximalPlan {
public:
    MaximalPlan(const Space& s, double kappa, bool centered);

    std::vector<double> apply(const std::vector<double>& f) const;

    std::size_t size() const { return n_; }
    bool centered() const { return centered_; }
    double kappa() const { return kappa_; }

private:
    struct Entry {
        int cls;
        double mass;
    };
    std::size_t n_ = 0;
    double kappa_ = 1;
    bool centered_ = true;
    // Flattened per-center data; center z owns entries[entry_off[z] .. entry_off[z+1]).
    std::vector<Entry> entries_;
    std::vector<std::size_t> entry_off_;
    std::vector<std::size_t> group_end_;  // absolute end index of each group
    std::vector<std::size_t> group_off_;  // per center offset into group arrays
    std::vector<double> den_;             // mass of the kappa-enlarged ball per group
    std::vector<int> class_group_;        // n_*n_: group holding class x as seen from z
};

std::vector<double> maximal(const Space& s, const std::vector<double>& f, double kappa, bool centered);

// A_{k,i} on a type-III space: f(Gamma_i x) m_i / (K alpha_k) on level k of the upper part.
std::vector<double> fiber_average(const Space& s, const std::vector<double>& f, int k, int i);
// Sum of A_{k,i} over i and k.
std::vector<double> fiber_sum(const Space& s, const std::vector<double>& f);

}  // namespace ndmax
