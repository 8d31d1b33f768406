#include "distortion/ergodic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "distortion/errors.hpp"
#include "distortion/numeric.hpp"

namespace distortion::ergodic {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Advance one step and return the point with x reduced to [0, 1).
Vec2 step_reduced(const Dynamics& T, Vec2 p) {
    Vec2 q = step(T, p);
    q.x -= std::floor(q.x);
    return q;
}

}  // namespace

Vec2 step(const Dynamics& T, Vec2 p) {
    return std::visit(overloaded{
                          [p](const circle::CircleLift& f) { return Vec2{f(p.x), p.y}; },
                          [p](const annulus::AnnulusLift& f) { return f(p); },
                      },
                      T);
}

Observable Observable::constant(double c) { return Observable(Constant{c}); }

Observable Observable::trig_poly(double c0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs) {
    return Observable(TrigPoly{c0, std::move(cos_coeffs), std::move(sin_coeffs)});
}

Observable Observable::centered_indicator(double lo, double hi) {
    if (!(0.0 <= lo && lo < hi && hi <= 1.0)) throw InvalidDescriptor("indicator interval must satisfy 0 <= lo < hi <= 1");
    return Observable(CenteredIndicator{lo, hi});
}

Observable Observable::displacement() { return Observable(Displacement{}); }

Observable Observable::combination(std::vector<Term> terms) { return Observable(Combination{std::move(terms)}); }

double Observable::operator()(const Dynamics& T, Vec2 p) const {
    const double x = p.x - std::floor(p.x);
    return std::visit(overloaded{
                          [](const Constant& c) { return c.c; },
                          [x](const TrigPoly& t) {
                              double v = t.c0;
                              for (std::size_t k = 0; k < t.cos_coeffs.size(); ++k) {
                                  v += t.cos_coeffs[k] * std::cos(2.0 * std::numbers::pi * static_cast<double>(k + 1) * x);
                              }
                              for (std::size_t k = 0; k < t.sin_coeffs.size(); ++k) {
                                  v += t.sin_coeffs[k] * std::sin(2.0 * std::numbers::pi * static_cast<double>(k + 1) * x);
                              }
                              return v;
                          },
                          [x](const CenteredIndicator& ind) {
                              return (x >= ind.lo && x < ind.hi ? 1.0 : 0.0) - (ind.hi - ind.lo);
                          },
                          [&](const Displacement&) { return step(T, p).x - p.x; },
                          [&](const Combination& c) {
                              double v = 0.0;
                              for (const auto& term : c.terms) v += term.weight * term.observable(T, p);
                              return v;
                          },
                      },
                      desc_);
}

std::optional<double> Observable::mean() const {
    return std::visit(overloaded{
                          [](const Constant& c) -> std::optional<double> { return c.c; },
                          [](const TrigPoly& t) -> std::optional<double> { return t.c0; },
                          [](const CenteredIndicator&) -> std::optional<double> { return 0.0; },
                          [](const Displacement&) -> std::optional<double> { return std::nullopt; },
                          [](const Combination& c) -> std::optional<double> {
                              double m = 0.0;
                              for (const auto& term : c.terms) {
                                  const auto sub = term.observable.mean();
                                  if (!sub) return std::nullopt;
                                  m += term.weight * *sub;
                              }
                              return m;
                          },
                      },
                      desc_);
}

BirkhoffSeries birkhoff_sums(const Dynamics& T, const Observable& phi, Vec2 x, long iterations) {
    if (iterations < 1) throw std::invalid_argument("Birkhoff sums need N >= 1");
    BirkhoffSeries series{x, {}, std::nullopt};
    series.sums.reserve(static_cast<std::size_t>(iterations));
    CompensatedSum sum;
    Vec2 p = x;
    for (long n = 0; n < iterations; ++n) {
        sum.add(phi(T, p));
        series.sums.push_back(sum.value());
        p = step_reduced(T, p);
    }
    return series;
}

double time_average(const BirkhoffSeries& series) {
    if (series.sums.empty()) throw std::invalid_argument("time average of an empty series");
    return series.sums.back() / static_cast<double>(series.sums.size());
}

RecurrenceStats recurrence_stats(const Dynamics& T, const Observable& phi, const std::vector<Vec2>& sample,
                                 double epsilon, long iterations, long min_count) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("recurrence epsilon must be positive");
    if (iterations < 1) throw std::invalid_argument("recurrence needs N >= 1");
    RecurrenceStats stats;
    stats.iterations = iterations;
    stats.epsilon = epsilon;
    stats.min_count = min_count;
    std::size_t hits = 0;
    for (const Vec2& x : sample) {
        PointRecurrence r{x, 0, 0.0, 0.0};
        CompensatedSum sum;
        Vec2 p = x;
        for (long n = 1; n <= iterations; ++n) {
            sum.add(phi(T, p));
            if (std::abs(sum.value()) < epsilon) ++r.count;
            p = step_reduced(T, p);
        }
        r.final_sum = sum.value();
        r.time_average = r.final_sum / static_cast<double>(iterations);
        if (r.count >= min_count) ++hits;
        stats.points.push_back(r);
    }
    stats.fraction_at_least = sample.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(sample.size());
    return stats;
}

std::vector<Vec2> seeded_sample(std::uint64_t seed, std::size_t count, std::optional<double> y) {
    SeededUniform rng(seed);
    std::vector<Vec2> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double x = rng.next();
        out.push_back({x, y ? *y : rng.next()});
    }
    return out;
}

DriftReport drift_positivity_check(const Dynamics& T, const Observable& phi, const std::vector<Vec2>& sample,
                                   long iterations, double threshold) {
    if (iterations < 1) throw std::invalid_argument("drift check needs N >= 1");
    DriftReport report;
    report.sample_size = sample.size();
    report.threshold = threshold;
    std::vector<double> escaping;
    double total = 0.0;
    for (const Vec2& x : sample) {
        const BirkhoffSeries s = birkhoff_sums(T, phi, x, iterations);
        const double avg = time_average(s);
        total += avg;
        if (s.sums.back() > threshold) escaping.push_back(avg);
    }
    if (!sample.empty()) report.mean_all = total / static_cast<double>(sample.size());
    report.escaping = escaping.size();
    if (!escaping.empty()) {
        CompensatedSum acc;
        for (double v : escaping) acc.add(v);
        const double n = static_cast<double>(escaping.size());
        report.mean_escaping = acc.value() / n;
        if (escaping.size() > 1) {
            double ss = 0.0;
            for (double v : escaping) ss += (v - report.mean_escaping) * (v - report.mean_escaping);
            report.standard_error = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
        }
    }
    report.pass = report.escaping > 0 && report.mean_escaping > 0.0 && report.standard_error < report.mean_escaping;
    return report;
}

}  // namespace distortion::ergodic
