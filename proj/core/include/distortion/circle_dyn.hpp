#pragma once

#include <memory>
#include <variant>
#include <vector>

namespace distortion::circle {

struct Breakpoint {
    double x;
    double value;
    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Lift F: R -> R of a degree-one circle homeomorphism, F(x + 1) = F(x) + 1.
///
/// Descriptors are closed-world so experiments can be serialized:
///   Rotation        x -> x + alpha
///   PiecewiseLinear breakpoints (x_i, F(x_i)) with x_i increasing in [0, 1); the segment
///                   after the last breakpoint ends at (x_0 + 1, F(x_0) + 1)
///   Composition     maps[0] o maps[1] o ... (the last map acts first)
///   Power           base^n; negative n uses the inverse lift
class CircleLift {
public:
    struct Rotation {
        double alpha;
    };
    struct PiecewiseLinear {
        std::vector<Breakpoint> points;
    };
    struct Composition {
        std::vector<CircleLift> maps;
    };
    struct Power {
        std::shared_ptr<const CircleLift> base;
        int exponent;
    };
    using Descriptor = std::variant<Rotation, PiecewiseLinear, Composition, Power>;

    static CircleLift rotation(double alpha);
    /// Throws InvalidDescriptor unless the breakpoints define a strictly increasing lift.
    static CircleLift piecewise_linear(std::vector<Breakpoint> points);
    static CircleLift composition(std::vector<CircleLift> maps);
    static CircleLift power(CircleLift base, int exponent);
    static CircleLift identity() { return rotation(0.0); }

    double operator()(double x) const;
    CircleLift inverse() const;
    const Descriptor& descriptor() const { return desc_; }

private:
    explicit CircleLift(Descriptor d) : desc_(std::move(d)) {}
    Descriptor desc_;
};

double lift_eval(const CircleLift& f, double x);

struct RotationEstimate {
    double estimate;
    double error_bound;  // 1/N
};

/// (F^N(x0) - x0) / N, iterating on [0, 1) representatives and tracking the integer part.
RotationEstimate rotation_number(const CircleLift& f, double x0, long iterations);

struct Interval {
    double lo;
    double hi;
};

/// Grid intervals [i/grid, (i+1)/grid] where F(x) - x changes sign or vanishes at an endpoint.
std::vector<Interval> fixed_point_scan(const CircleLift& f, int grid);

/// Distance in R/Z between rho(F o G) and rho(F) + rho(G), each from N iterates at x0 = 0.
/// Only meaningful when F and G preserve a common invariant measure.
double rotation_additivity_residual(const CircleLift& f, const CircleLift& g, long iterations);

/// Distance from x to the nearest integer.
double circle_distance(double x);

// ---- Heisenberg action on the cylinder -----------------------------------

/// Integer coordinates (a, b, c) of the element G^a H^b F^c, where on R^2
/// G(x, y) = (x + y, y), H(x, y) = (x, y + 1), F(x, y) = (x + 1, y) and F = [G, H].
struct HeisenbergCoords {
    long a = 0;
    long b = 0;
    long c = 0;
    friend bool operator==(const HeisenbergCoords&, const HeisenbergCoords&) = default;
};

HeisenbergCoords heisenberg_multiply(const HeisenbergCoords& u, const HeisenbergCoords& v);
HeisenbergCoords heisenberg_inverse(const HeisenbergCoords& u);
/// [u, v] = u^-1 v^-1 u v.
HeisenbergCoords heisenberg_commutator(const HeisenbergCoords& u, const HeisenbergCoords& v);

/// Point of the cylinder R^2 / (x ~ x + alpha); x is kept in [0, alpha).
struct CylinderPoint {
    double x;
    double y;
    double alpha;

    static CylinderPoint make(double x, double y, double alpha);
};

CylinderPoint calegari_eval(const HeisenbergCoords& element, const CylinderPoint& p);

/// Distance between two cylinder points with the x-gap measured mod alpha.
double cylinder_distance(const CylinderPoint& p, const CylinderPoint& q);

}  // namespace distortion::circle
