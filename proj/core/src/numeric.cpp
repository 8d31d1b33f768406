#include "distortion/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace distortion {

void CompensatedSum::add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
        compensation_ += (sum_ - t) + x;
    } else {
        compensation_ += (x - t) + sum_;
    }
    sum_ = t;
}

double least_squares_slope(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) throw std::invalid_argument("slope needs >= 2 paired samples");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(ys.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    if (sxx == 0.0) throw std::invalid_argument("slope needs distinct abscissae");
    return sxy / sxx;
}

double SeededUniform::next() {
    // 53 high bits -> [0, 1); std::uniform_real_distribution is implementation-defined.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double star_discrepancy(std::vector<double> points) {
    if (points.empty()) return 0.0;
    std::sort(points.begin(), points.end());
    const double n = static_cast<double>(points.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        worst = std::max({worst, hi - points[i], points[i] - lo});
    }
    return worst;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double positive_mod(double x, double m) {
    double r = std::fmod(x, m);
    if (r < 0) r += m;
    if (r >= m) r = 0.0;
    return r;
}

}  // namespace distortion
