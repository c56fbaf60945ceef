#include "ndmax/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ndmax {

MaximalPlan::MaximalPlan(const Space& s, double kappa, bool centered)
    : n_(s.size()), kappa_(kappa), centered_(centered) {
    if (!(kappa >= 1)) throw std::invalid_argument("kappa must be at least 1");
    entry_off_.reserve(n_ + 1);
    group_off_.reserve(n_ + 1);
    if (!centered_) class_group_.assign(n_ * n_, 0);

    struct Item {
        double d;
        int cls;
        double mass;
    };
    std::vector<Item> items;
    std::vector<double> gdist, gcum;
    for (std::size_t z = 0; z < n_; ++z) {
        items.clear();
        const auto& cz = s.classes[z];
        items.push_back({0.0, int(z), cz.unit_mass});
        if (cz.count > 1) items.push_back({s.within[z], int(z), (cz.count - 1) * cz.unit_mass});
        for (std::size_t c = 0; c < n_; ++c)
            if (c != z) items.push_back({s.between[z][c], int(c), s.classes[c].mass()});
        std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.d < b.d; });

        entry_off_.push_back(entries_.size());
        group_off_.push_back(group_end_.size());
        gdist.clear();
        gcum.clear();
        double cum = 0;
        for (std::size_t t = 0; t < items.size(); ++t) {
            const bool new_group = gdist.empty() || !dist_eq(gdist.back(), items[t].d);
            if (new_group && !gdist.empty()) {
                group_end_.push_back(entries_.size());
                gcum.push_back(cum);
            }
            if (new_group) gdist.push_back(items[t].d);
            entries_.push_back({items[t].cls, items[t].mass});
            cum += items[t].mass;
            if (!centered_ && !(items[t].cls == int(z) && t == 0))
                class_group_[z * n_ + std::size_t(items[t].cls)] = int(gdist.size() - 1);
        }
        group_end_.push_back(entries_.size());
        gcum.push_back(cum);
        if (!centered_) class_group_[z * n_ + z] = 0;

        // Denominator: mass of the closed ball at kappa times the group radius.
        for (std::size_t g = 0; g < gdist.size(); ++g) {
            const double target = kappa_ * gdist[g];
            std::size_t lo = g, hi = gdist.size();  // last index with gdist <= target
            while (hi - lo > 1) {
                const std::size_t mid = (lo + hi) / 2;
                if (dist_le(gdist[mid], target))
                    lo = mid;
                else
                    hi = mid;
            }
            den_.push_back(gcum[lo]);
        }
    }
    entry_off_.push_back(entries_.size());
    group_off_.push_back(group_end_.size());
}

std::vector<double> MaximalPlan::apply(const std::vector<double>& f) const {
    if (f.size() != n_) throw std::invalid_argument("function length does not match the class count");
    std::vector<double> out(n_, 0.0);
    std::vector<double> avg;
    for (std::size_t z = 0; z < n_; ++z) {
        const std::size_t g0 = group_off_[z], g1 = group_off_[z + 1];
        avg.assign(g1 - g0, 0.0);
        double acc = 0;
        std::size_t e = entry_off_[z];
        for (std::size_t g = g0; g < g1; ++g) {
            for (; e < group_end_[g]; ++e) acc += std::fabs(f[entries_[e].cls]) * entries_[e].mass;
            avg[g - g0] = acc / den_[g];
        }
        if (centered_) {
            out[z] = *std::max_element(avg.begin(), avg.end());
            continue;
        }
        for (std::size_t k = avg.size() - 1; k-- > 0;) avg[k] = std::max(avg[k], avg[k + 1]);
        const int* cg = &class_group_[z * n_];
        for (std::size_t x = 0; x < n_; ++x) out[x] = std::max(out[x], avg[std::size_t(cg[x])]);
    }
    return out;
}

std::vector<double> maximal(const Space& s, const std::vector<double>& f, double kappa, bool centered) {
    return MaximalPlan(s, kappa, centered).apply(f);
}

namespace {
const TypeIIIInfo& need_type3(const Space& s) {
    if (!s.type3) throw std::invalid_argument("space carries no type-III structure");
    return *s.type3;
}
}  // namespace

std::vector<double> fiber_average(const Space& s, const std::vector<double>& f, int k, int i) {
    const auto& t = need_type3(s);
    if (i < 0 || i >= t.N || k < 0 || k >= t.M) throw std::out_of_range("fiber index out of range");
    std::vector<double> out(s.size(), 0.0);
    const double scale = t.m[i] / (t.K * t.alpha[k]);
    for (std::size_t c = 0; c < t.upper[k].size(); ++c) {
        const int src = t.lower[i][t.gamma(i, int(c))];
        out[t.upper[k][c]] = f[src] * scale;
    }
    return out;
}

std::vector<double> fiber_sum(const Space& s, const std::vector<double>& f) {
    const auto& t = need_type3(s);
    std::vector<double> out(s.size(), 0.0);
    for (int k = 0; k < t.M; ++k)
        for (int i = 0; i < t.N; ++i) {
            const auto a = fiber_average(s, f, k, i);
            for (std::size_t x = 0; x < out.size(); ++x) out[x] += a[x];
        }
    return out;
}

}  // namespace ndmax
