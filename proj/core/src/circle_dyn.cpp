#include "distortion/circle_dyn.hpp"

#include "distortion/errors.hpp"
#include "distortion/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace distortion::circle {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double eval_piecewise(const std::vector<Breakpoint>& pts, double x) {
    const double x0 = pts.front().x;
    const double shift = std::floor(x - x0);
    double r = x - shift;
    if (r >= x0 + 1.0) r = x0;  // rounding can land exactly on the period end
    auto it = std::upper_bound(pts.begin(), pts.end(), r, [](double v, const Breakpoint& b) { return v < b.x; });
    const Breakpoint& left = *(it - 1);
    const Breakpoint right = it == pts.end() ? Breakpoint{x0 + 1.0, pts.front().value + 1.0} : *it;
    const double t = (r - left.x) / (right.x - left.x);
    return left.value + t * (right.value - left.value) + shift;
}

}  // namespace

CircleLift CircleLift::rotation(double alpha) {
    if (!std::isfinite(alpha)) throw InvalidDescriptor("rotation angle must be finite");
    return CircleLift(Rotation{alpha});
}

CircleLift CircleLift::piecewise_linear(std::vector<Breakpoint> points) {
    if (points.empty()) throw InvalidDescriptor("piecewise-linear lift needs at least one breakpoint");
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        if (!std::isfinite(p.x) || !std::isfinite(p.value)) throw InvalidDescriptor("breakpoints must be finite");
        if (p.x < 0.0 || p.x >= 1.0) throw InvalidDescriptor("breakpoint x must lie in [0, 1)");
        if (i > 0 && !(p.x > points[i - 1].x)) throw InvalidDescriptor("breakpoint x must be strictly increasing");
        if (i > 0 && !(p.value > points[i - 1].value)) {
            throw InvalidDescriptor("piecewise-linear lift must be strictly increasing (breakpoint " +
                                    std::to_string(i) + ")");
        }
    }
    if (!(points.back().value < points.front().value + 1.0)) {
        throw InvalidDescriptor("piecewise-linear lift must satisfy F(x_last) < F(x_0) + 1");
    }
    return CircleLift(PiecewiseLinear{std::move(points)});
}

CircleLift CircleLift::composition(std::vector<CircleLift> maps) {
    if (maps.empty()) return identity();
    return CircleLift(Composition{std::move(maps)});
}

CircleLift CircleLift::power(CircleLift base, int exponent) {
    return CircleLift(Power{std::make_shared<const CircleLift>(std::move(base)), exponent});
}

double CircleLift::operator()(double x) const {
    return std::visit(overloaded{
                          [x](const Rotation& r) { return x + r.alpha; },
                          [x](const PiecewiseLinear& p) { return eval_piecewise(p.points, x); },
                          [x](const Composition& c) {
                              double y = x;
                              for (auto it = c.maps.rbegin(); it != c.maps.rend(); ++it) y = (*it)(y);
                              return y;
                          },
                          [x](const Power& p) {
                              double y = x;
                              if (p.exponent >= 0) {
                                  for (int i = 0; i < p.exponent; ++i) y = (*p.base)(y);
                              } else {
                                  const CircleLift inv = p.base->inverse();
                                  for (int i = 0; i < -p.exponent; ++i) y = inv(y);
                              }
                              return y;
                          },
                      },
                      desc_);
}

CircleLift CircleLift::inverse() const {
    return std::visit(overloaded{
                          [](const Rotation& r) { return rotation(-r.alpha); },
                          [](const PiecewiseLinear& p) {
                              // Swap coordinates, then translate each breakpoint so its new x lies in [0, 1).
                              std::vector<Breakpoint> swapped;
                              swapped.reserve(p.points.size());
                              for (const auto& b : p.points) {
                                  const double k = std::floor(b.value);
                                  swapped.push_back({b.value - k, b.x - k});
                              }
                              std::sort(swapped.begin(), swapped.end(),
                                        [](const Breakpoint& l, const Breakpoint& r) { return l.x < r.x; });
                              return piecewise_linear(std::move(swapped));
                          },
                          [](const Composition& c) {
                              std::vector<CircleLift> inv;
                              for (auto it = c.maps.rbegin(); it != c.maps.rend(); ++it) inv.push_back(it->inverse());
                              return composition(std::move(inv));
                          },
                          [](const Power& p) { return power(*p.base, -p.exponent); },
                      },
                      desc_);
}

double lift_eval(const CircleLift& f, double x) { return f(x); }

RotationEstimate rotation_number(const CircleLift& f, double x0, long iterations) {
    if (iterations < 1) throw std::invalid_argument("rotation number needs N >= 1");
    double y = x0;
    double whole_turns = 0.0;
    for (long i = 0; i < iterations; ++i) {
        y = f(y);
        const double k = std::floor(y);
        y -= k;
        whole_turns += k;
    }
    const double n = static_cast<double>(iterations);
    return {(whole_turns + (y - x0)) / n, 1.0 / n};
}

std::vector<Interval> fixed_point_scan(const CircleLift& f, int grid) {
    if (grid < 2) throw std::invalid_argument("fixed point scan needs grid >= 2");
    std::vector<double> excess(static_cast<std::size_t>(grid) + 1);
    for (int i = 0; i <= grid; ++i) {
        const double x = static_cast<double>(i) / grid;
        excess[static_cast<std::size_t>(i)] = f(x) - x;
    }
    std::vector<Interval> out;
    for (int i = 0; i < grid; ++i) {
        if (excess[static_cast<std::size_t>(i)] * excess[static_cast<std::size_t>(i) + 1] <= 0.0) {
            out.push_back({static_cast<double>(i) / grid, static_cast<double>(i + 1) / grid});
        }
    }
    return out;
}

double circle_distance(double x) { return std::abs(x - std::round(x)); }

double rotation_additivity_residual(const CircleLift& f, const CircleLift& g, long iterations) {
    const double fg = rotation_number(CircleLift::composition({f, g}), 0.0, iterations).estimate;
    const double rf = rotation_number(f, 0.0, iterations).estimate;
    const double rg = rotation_number(g, 0.0, iterations).estimate;
    return circle_distance(fg - rf - rg);
}

HeisenbergCoords heisenberg_multiply(const HeisenbergCoords& u, const HeisenbergCoords& v) {
    // G^a1 H^b1 F^c1 G^a2 H^b2 F^c2: moving G^a2 left past H^b1 costs F^(-a2 b1).
    return {u.a + v.a, u.b + v.b, u.c + v.c - v.a * u.b};
}

HeisenbergCoords heisenberg_inverse(const HeisenbergCoords& u) { return {-u.a, -u.b, -u.a * u.b - u.c}; }

HeisenbergCoords heisenberg_commutator(const HeisenbergCoords& u, const HeisenbergCoords& v) {
    return heisenberg_multiply(heisenberg_multiply(heisenberg_inverse(u), heisenberg_inverse(v)),
                               heisenberg_multiply(u, v));
}

CylinderPoint CylinderPoint::make(double x, double y, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("cylinder modulus alpha must be positive");
    return {positive_mod(x, alpha), y, alpha};
}

CylinderPoint calegari_eval(const HeisenbergCoords& e, const CylinderPoint& p) {
    // G^a H^b F^c (x, y) = (x + a y + a b + c, y + b).
    const double a = static_cast<double>(e.a);
    const double b = static_cast<double>(e.b);
    const double c = static_cast<double>(e.c);
    return CylinderPoint::make(p.x + a * p.y + a * b + c, p.y + b, p.alpha);
}

double cylinder_distance(const CylinderPoint& p, const CylinderPoint& q) {
    double dx = positive_mod(p.x - q.x, p.alpha);
    dx = std::min(dx, p.alpha - dx);
    return std::hypot(dx, p.y - q.y);
}

}  // namespace distortion::circle
