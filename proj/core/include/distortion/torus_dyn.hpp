#pragma once

#include <array>
#include <variant>
#include <vector>

#include "distortion/geometry.hpp"
#include "distortion/group_element.hpp"

namespace distortion::torus {

/// 2x2 integer matrix, row-major.
struct IntMatrix2 {
    std::array<long, 4> entries{1, 0, 0, 1};

    long operator()(int r, int c) const { return entries[static_cast<std::size_t>(r * 2 + c)]; }
    long determinant() const { return entries[0] * entries[3] - entries[1] * entries[2]; }
    Vec2 apply(Vec2 v) const {
        return {static_cast<double>(entries[0]) * v.x + static_cast<double>(entries[1]) * v.y,
                static_cast<double>(entries[2]) * v.x + static_cast<double>(entries[3]) * v.y};
    }
    friend IntMatrix2 operator*(const IntMatrix2& a, const IntMatrix2& b);
    friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

/// The cat map [[2,1],[1,1]].
IntMatrix2 cat_matrix();
/// Unit vector along (1, (sqrt5 - 1)/2), the expanding eigenline of the cat map.
Vec2 unstable_direction();

/// Lift x -> L x + w of an affine torus map. The translation is either a plain vector
/// or an exact multiple of the unstable direction of the cat map.
class ToralAffine {
public:
    using Translation = std::variant<Vec2, QuadScalar>;

    ToralAffine() = default;
    ToralAffine(IntMatrix2 linear, Translation translation);

    static ToralAffine linear(IntMatrix2 m) { return ToralAffine(m, Vec2{}); }
    static ToralAffine translation(Vec2 w) { return ToralAffine(IntMatrix2{}, w); }
    /// x -> A^j x + c w for a Mess pair (j, c).
    static ToralAffine from_mess(const MessPair& p);

    const IntMatrix2& linear_part() const { return linear_; }
    const Translation& translation_part() const { return translation_; }
    Vec2 translation_vector() const;
    bool is_diffeomorphism() const;

    Vec2 operator()(Vec2 x) const { return linear_.apply(x) + translation_vector(); }
    operator PlanarMap() const {
        return [f = *this](Vec2 x) { return f(x); };
    }

private:
    IntMatrix2 linear_{};
    Translation translation_ = Vec2{};
};

Vec2 affine_apply(const ToralAffine& f, Vec2 x);

struct MessIdentityReport {
    int n = 0;
    MessPair g_n;          // A^-n T A^n
    MessPair h_n;          // A^n T A^-n
    MessPair product;      // g_n h_n
    QuadScalar expected;   // lambda^n + lambda^-n
    BigInt trace;          // tr A^n
    bool product_matches = false;   // product == (0, expected)
    bool trace_matches = false;     // expected is the rational integer tr A^n
    bool pass() const { return product_matches && trace_matches; }
};

MessIdentityReport mess_identity_check(int n);

struct EgrEstimate {
    std::vector<double> lengths;              // l(f^n tau), n = 0..N
    std::vector<std::size_t> vertex_counts;   // vertices of the n-th image
    double slope = 0.0;                       // LSQ slope of log length over n in [N/2, N]
};

inline constexpr double kDefaultMaxSegment = 0.05;

/// Iterates a closed curve in the lift, refining before each application of f so no
/// pre-image segment is longer than max_seg. Lengths are flat Euclidean lengths of the
/// lifted image, which equal the lengths of the projected curve on T^2.
/// Throws VertexCapError carrying the lengths computed so far.
EgrEstimate curve_iterate_lengths(const PlanarMap& f, const Polyline& tau, int iterations,
                                  double max_seg = kDefaultMaxSegment, std::size_t vertex_cap = kDefaultVertexCap);

/// d(f^n x1, f^n x2) / n for n = 1..N in the lift.
std::vector<double> displacement_rate(const PlanarMap& f, Vec2 x1, Vec2 x2, int iterations);

}  // namespace distortion::torus
