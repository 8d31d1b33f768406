#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace distortion {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

using PlanarMap = std::function<Vec2(Vec2)>;

inline constexpr std::size_t kDefaultVertexCap = 1'000'000;

/// Refinement would exceed the vertex cap. Carries whatever per-iterate data was
/// collected before the failure.
class VertexCapError : public std::runtime_error {
public:
    VertexCapError(std::size_t cap, std::vector<double> partial);
    const std::vector<double>& partial() const { return partial_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
    std::vector<double> partial_;
};

/// Ordered points in a lift (R^2 or the strip R x [0, 1]).
class Polyline {
public:
    /// Throws std::invalid_argument when consecutive points coincide or a closed
    /// polyline has fewer than 3 points.
    Polyline(std::vector<Vec2> points, bool closed);

    const std::vector<Vec2>& points() const { return points_; }
    bool closed() const { return closed_; }
    std::size_t size() const { return points_.size(); }
    std::size_t segment_count() const;
    double length() const;

    /// Splits every segment longer than max_seg into equal pieces no longer than max_seg.
    Polyline refined(double max_seg, std::size_t vertex_cap = kDefaultVertexCap) const;
    /// Image of every vertex. Coincident consecutive images are merged.
    Polyline mapped(const PlanarMap& f) const;

    /// Open polyline followed by another, joined by one straight segment.
    static Polyline concatenate(const Polyline& a, const Polyline& b);
    /// Closed regular polygon approximating a circle.
    static Polyline circle(Vec2 center, double radius, std::size_t points);

private:
    std::vector<Vec2> points_;
    bool closed_;
};

}  // namespace distortion
