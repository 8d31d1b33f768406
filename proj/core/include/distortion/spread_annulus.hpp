#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "distortion/geometry.hpp"

namespace distortion::annulus {

/// Lift of an annulus map to the strip R x [0, 1], commuting with T(x, y) = (x + 1, y):
///   Twist(t)     (x, y) -> (x + t y, y)
///   Shift(s)     (x, y) -> (x + s, y)
///   Composition  maps[0] o maps[1] o ... (last acts first)
///   Power        base^n, negative n via the inverse
class AnnulusLift {
public:
    struct Twist {
        double t;
    };
    struct Shift {
        double s;
    };
    struct Composition {
        std::vector<AnnulusLift> maps;
    };
    struct Power {
        std::shared_ptr<const AnnulusLift> base;
        int exponent;
    };
    using Descriptor = std::variant<Twist, Shift, Composition, Power>;

    static AnnulusLift twist(double t);
    static AnnulusLift shift(double s);
    static AnnulusLift composition(std::vector<AnnulusLift> maps);
    static AnnulusLift power(AnnulusLift base, int exponent);
    static AnnulusLift identity() { return twist(0.0); }

    Vec2 operator()(Vec2 p) const;
    AnnulusLift inverse() const;
    const Descriptor& descriptor() const { return desc_; }

    operator PlanarMap() const {
        return [f = *this](Vec2 p) { return f(p); };
    }

private:
    explicit AnnulusLift(Descriptor d) : desc_(std::move(d)) {}
    Descriptor desc_;
};

/// Open polyline in the strip R x [0, 1].
class AnnulusArc {
public:
    explicit AnnulusArc(Polyline line);
    AnnulusArc(std::vector<Vec2> points) : AnnulusArc(Polyline(std::move(points), false)) {}

    /// The segment {x} x [0, 1].
    static AnnulusArc vertical(double x);

    const Polyline& polyline() const { return line_; }
    const std::vector<Vec2>& points() const { return line_.points(); }
    /// Deck translation T^k.
    AnnulusArc translated(long k) const;

private:
    Polyline line_;
};

/// Crossing count against the lines {i + offset} x [0, 1]: the arc meets line i iff a < i < b,
/// and L = max(0, b - a - 2). A vertex exactly on a line counts as meeting it. An arc that
/// meets no line gets the bracketing pair b = a + 1.
struct LValue {
    long a = 0;
    long b = 1;
    long L = 0;
    friend bool operator==(const LValue&, const LValue&) = default;
};

LValue l_value(const AnnulusArc& arc, double offset = 0.0);

inline constexpr double kDefaultArcSegment = 0.25;

/// Refine so no segment exceeds max_seg, then map every vertex. Throws VertexCapError.
AnnulusArc map_arc(const AnnulusLift& f, const AnnulusArc& arc, double max_seg = kDefaultArcSegment,
                   std::size_t vertex_cap = kDefaultVertexCap);

struct SpreadEstimate {
    std::vector<LValue> values;   // L(f^n alpha), n = 0..N
    std::vector<double> ratios;   // L(f^n alpha) / n, n = 1..N
    double tail_slope = 0.0;      // LSQ slope of L against n over n in [N/2, N] (0 when N < 2)
};

/// Throws VertexCapError whose partial() holds the ratios computed so far.
SpreadEstimate spread_estimate(const AnnulusLift& f, const AnnulusArc& arc, int iterations,
                               double max_seg = kDefaultArcSegment, std::size_t vertex_cap = kDefaultVertexCap,
                               double offset = 0.0);

}  // namespace distortion::annulus
