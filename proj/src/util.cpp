#include "ndmax/util.hpp"

#include <cstdio>

namespace ndmax {

std::string fmt12(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    LinearFit out;
    const std::size_t n = x.size();
    if (n == 0 || n != y.size()) return out;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= double(n);
    my /= double(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0) {
        out.intercept = my;
        return out;
    }
    out.slope = sxy / sxx;
    out.intercept = my - out.slope * mx;
    if (n > 2) {
        double rss = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double e = y[i] - out.intercept - out.slope * x[i];
            rss += e * e;
        }
        out.slope_stderr = std::sqrt(rss / double(n - 2) / sxx);
    }
    return out;
}

}  // namespace ndmax
