#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace distortion {

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x);
    double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

/// Ordinary least-squares slope of ys against xs. Requires at least two distinct xs.
double least_squares_slope(std::span<const double> xs, std::span<const double> ys);

/// Seeded generator with a platform-independent mapping to [0, 1).
class SeededUniform {
public:
    explicit SeededUniform(std::uint64_t seed) : engine_(seed) {}
    double next();
    std::uint64_t next_raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Star discrepancy of points in [0, 1).
double star_discrepancy(std::vector<double> points);

/// printf("%.12g"), the fixed float format of every CSV column.
std::string format_double(double x);

/// x mod m in [0, m).
double positive_mod(double x, double m);

}  // namespace distortion
