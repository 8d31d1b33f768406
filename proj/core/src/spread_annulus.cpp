#include "distortion/spread_annulus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "distortion/errors.hpp"
#include "distortion/numeric.hpp"

namespace distortion::annulus {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

AnnulusLift AnnulusLift::twist(double t) {
    if (!std::isfinite(t)) throw InvalidDescriptor("twist parameter must be finite");
    return AnnulusLift(Twist{t});
}

AnnulusLift AnnulusLift::shift(double s) {
    if (!std::isfinite(s)) throw InvalidDescriptor("shift must be finite");
    return AnnulusLift(Shift{s});
}

AnnulusLift AnnulusLift::composition(std::vector<AnnulusLift> maps) {
    if (maps.empty()) return identity();
    return AnnulusLift(Composition{std::move(maps)});
}

AnnulusLift AnnulusLift::power(AnnulusLift base, int exponent) {
    return AnnulusLift(Power{std::make_shared<const AnnulusLift>(std::move(base)), exponent});
}

Vec2 AnnulusLift::operator()(Vec2 p) const {
    return std::visit(overloaded{
                          [p](const Twist& tw) { return Vec2{p.x + tw.t * p.y, p.y}; },
                          [p](const Shift& sh) { return Vec2{p.x + sh.s, p.y}; },
                          [p](const Composition& c) {
                              Vec2 q = p;
                              for (auto it = c.maps.rbegin(); it != c.maps.rend(); ++it) q = (*it)(q);
                              return q;
                          },
                          [p](const Power& pw) {
                              Vec2 q = p;
                              if (pw.exponent >= 0) {
                                  for (int i = 0; i < pw.exponent; ++i) q = (*pw.base)(q);
                              } else {
                                  const AnnulusLift inv = pw.base->inverse();
                                  for (int i = 0; i < -pw.exponent; ++i) q = inv(q);
                              }
                              return q;
                          },
                      },
                      desc_);
}

AnnulusLift AnnulusLift::inverse() const {
    return std::visit(overloaded{
                          [](const Twist& tw) { return twist(-tw.t); },
                          [](const Shift& sh) { return shift(-sh.s); },
                          [](const Composition& c) {
                              std::vector<AnnulusLift> inv;
                              for (auto it = c.maps.rbegin(); it != c.maps.rend(); ++it) inv.push_back(it->inverse());
                              return composition(std::move(inv));
                          },
                          [](const Power& pw) { return power(*pw.base, -pw.exponent); },
                      },
                      desc_);
}

AnnulusArc::AnnulusArc(Polyline line) : line_(std::move(line)) {
    if (line_.closed()) throw std::invalid_argument("annulus arcs are open polylines");
    for (const Vec2& p : line_.points()) {
        if (p.y < 0.0 || p.y > 1.0) throw std::invalid_argument("annulus arc leaves the strip R x [0, 1]");
    }
}

AnnulusArc AnnulusArc::vertical(double x) { return AnnulusArc(std::vector<Vec2>{{x, 0.0}, {x, 1.0}}); }

AnnulusArc AnnulusArc::translated(long k) const {
    std::vector<Vec2> pts = line_.points();
    for (Vec2& p : pts) p.x += static_cast<double>(k);
    return AnnulusArc(std::move(pts));
}

LValue l_value(const AnnulusArc& arc, double offset) {
    const auto& pts = arc.points();
    long lo = std::numeric_limits<long>::max();
    long hi = std::numeric_limits<long>::min();
    double xmin = pts.front().x;
    // Each segment meets the lines with index in [ceil(min x - offset), floor(max x - offset)].
    const std::size_t segments = pts.size() == 1 ? 1 : pts.size() - 1;
    for (std::size_t s = 0; s < segments; ++s) {
        const Vec2 p = pts[s];
        const Vec2 q = pts.size() == 1 ? pts[s] : pts[s + 1];
        const double left = std::min(p.x, q.x) - offset;
        const double right = std::max(p.x, q.x) - offset;
        xmin = std::min(xmin, std::min(p.x, q.x));
        const auto first = static_cast<long>(std::ceil(left));
        const auto last = static_cast<long>(std::floor(right));
        if (first <= last) {
            lo = std::min(lo, first);
            hi = std::max(hi, last);
        }
    }
    LValue v;
    if (lo > hi) {
        v.a = static_cast<long>(std::floor(xmin - offset));
        v.b = v.a + 1;
    } else {
        v.a = lo - 1;
        v.b = hi + 1;
    }
    v.L = std::max(0L, v.b - v.a - 2);
    return v;
}

AnnulusArc map_arc(const AnnulusLift& f, const AnnulusArc& arc, double max_seg, std::size_t vertex_cap) {
    return AnnulusArc(arc.polyline().refined(max_seg, vertex_cap).mapped(f));
}

SpreadEstimate spread_estimate(const AnnulusLift& f, const AnnulusArc& arc, int iterations, double max_seg,
                               std::size_t vertex_cap, double offset) {
    if (iterations < 1) throw std::invalid_argument("spread estimate needs N >= 1");
    SpreadEstimate est;
    AnnulusArc current = arc;
    est.values.push_back(l_value(current, offset));
    for (int n = 1; n <= iterations; ++n) {
        try {
            current = map_arc(f, current, max_seg, vertex_cap);
        } catch (const VertexCapError&) {
            throw VertexCapError(vertex_cap, est.ratios);
        }
        est.values.push_back(l_value(current, offset));
        est.ratios.push_back(static_cast<double>(est.values.back().L) / n);
    }
    if (iterations >= 2) {
        std::vector<double> xs, ys;
        for (int n = iterations / 2; n <= iterations; ++n) {
            xs.push_back(n);
            ys.push_back(static_cast<double>(est.values[static_cast<std::size_t>(n)].L));
        }
        est.tail_slope = least_squares_slope(xs, ys);
    }
    return est;
}

}  // namespace distortion::annulus
