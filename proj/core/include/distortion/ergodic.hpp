#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "distortion/circle_dyn.hpp"
#include "distortion/geometry.hpp"
#include "distortion/spread_annulus.hpp"

namespace distortion::ergodic {

/// A circle lift acts on the x coordinate of a point; an annulus lift on both.
using Dynamics = std::variant<circle::CircleLift, annulus::AnnulusLift>;

Vec2 step(const Dynamics& T, Vec2 p);

/// Observables, evaluated at the [0, 1) representative of x:
///   Constant           c
///   TrigPoly           c0 + sum_k a_k cos(2 pi k x) + b_k sin(2 pi k x), k = 1..K
///   CenteredIndicator  1_[lo, hi)(x) - (hi - lo)
///   Displacement       x-coordinate of T(p) - p in the lift
///   Combination        sum_i w_i phi_i
class Observable {
public:
    struct Constant {
        double c;
    };
    struct TrigPoly {
        double c0 = 0.0;
        std::vector<double> cos_coeffs;  // a_1..a_K
        std::vector<double> sin_coeffs;  // b_1..b_K
    };
    struct CenteredIndicator {
        double lo;
        double hi;
    };
    struct Displacement {};
    struct Term;
    struct Combination {
        std::vector<Term> terms;
    };
    using Descriptor = std::variant<Constant, TrigPoly, CenteredIndicator, Displacement, Combination>;

    static Observable constant(double c);
    static Observable trig_poly(double c0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);
    /// cos(2 pi x).
    static Observable cosine() { return trig_poly(0.0, {1.0}, {}); }
    static Observable centered_indicator(double lo, double hi);
    static Observable displacement();
    static Observable combination(std::vector<Term> terms);

    double operator()(const Dynamics& T, Vec2 p) const;
    /// Mean against Lebesgue measure on [0, 1); none for Displacement, whose mean depends on T.
    std::optional<double> mean() const;
    const Descriptor& descriptor() const { return desc_; }

private:
    explicit Observable(Descriptor d) : desc_(std::move(d)) {}
    Descriptor desc_;
};

struct Observable::Term {
    double weight;
    Observable observable;
};

struct BirkhoffSeries {
    Vec2 base_point;
    std::vector<double> sums;  // sums[n - 1] = S(n, x), n = 1..N
    std::optional<std::uint64_t> seed;

    long length() const { return static_cast<long>(sums.size()); }
};

/// S(n, x) = sum_{i < n} phi(T^i x), accumulated with compensated summation. Orbits are
/// iterated on [0, 1) representatives in x, which is exact for deck-equivariant lifts.
BirkhoffSeries birkhoff_sums(const Dynamics& T, const Observable& phi, Vec2 x, long iterations);

/// S(N, x) / N.
double time_average(const BirkhoffSeries& series);

struct PointRecurrence {
    Vec2 point;
    long count = 0;          // #{1 <= n <= N : |S(n, x)| < eps}
    double final_sum = 0.0;  // S(N, x)
    double time_average = 0.0;
};

struct RecurrenceStats {
    std::vector<PointRecurrence> points;
    long iterations = 0;
    double epsilon = 0.0;
    long min_count = 0;
    double fraction_at_least = 0.0;  // share of points with count >= min_count
};

RecurrenceStats recurrence_stats(const Dynamics& T, const Observable& phi, const std::vector<Vec2>& sample,
                                 double epsilon, long iterations, long min_count = 10);

/// `count` points with x uniform in [0, 1) from the seed; y is fixed, or uniform in [0, 1] when absent.
std::vector<Vec2> seeded_sample(std::uint64_t seed, std::size_t count, std::optional<double> y = std::nullopt);

inline constexpr double kDefaultEscapeThreshold = 10.0;

struct DriftReport {
    std::size_t sample_size = 0;
    std::size_t escaping = 0;          // points with S(N, x) > threshold
    double mean_all = 0.0;             // mean time average over the whole sample
    double mean_escaping = 0.0;        // mean time average over escaping points (0 when none)
    double standard_error = 0.0;       // of mean_escaping
    double threshold = kDefaultEscapeThreshold;
    bool pass = false;                 // escaping > 0, mean_escaping > 0 and standard_error < mean_escaping
};

/// S(N, x) > threshold stands in for S(n, x) -> infinity.
DriftReport drift_positivity_check(const Dynamics& T, const Observable& phi, const std::vector<Vec2>& sample,
                                   long iterations, double threshold = kDefaultEscapeThreshold);

}  // namespace distortion::ergodic
