#include "distortion/geometry.hpp"

#include <numbers>
#include <string>

namespace distortion {

VertexCapError::VertexCapError(std::size_t cap, std::vector<double> partial)
    : std::runtime_error("polyline refinement exceeded vertex cap " + std::to_string(cap)),
      cap_(cap),
      partial_(std::move(partial)) {}

Polyline::Polyline(std::vector<Vec2> points, bool closed) : points_(std::move(points)), closed_(closed) {
    if (points_.empty()) throw std::invalid_argument("polyline needs at least one point");
    if (closed_ && points_.size() < 3) throw std::invalid_argument("closed polyline needs at least 3 points");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].y)) {
            throw std::invalid_argument("polyline points must be finite");
        }
        if (i > 0 && points_[i] == points_[i - 1]) {
            throw std::invalid_argument("consecutive polyline points must be distinct");
        }
    }
    if (closed_ && points_.front() == points_.back()) {
        throw std::invalid_argument("closed polyline must not repeat its first point");
    }
}

std::size_t Polyline::segment_count() const {
    if (points_.size() < 2) return 0;
    return closed_ ? points_.size() : points_.size() - 1;
}

double Polyline::length() const {
    double total = 0.0;
    const std::size_t n = points_.size();
    for (std::size_t i = 0; i < segment_count(); ++i) total += distance(points_[i], points_[(i + 1) % n]);
    return total;
}

Polyline Polyline::refined(double max_seg, std::size_t vertex_cap) const {
    if (!(max_seg > 0.0)) throw std::invalid_argument("max_seg must be positive");
    std::vector<Vec2> out;
    out.reserve(points_.size());
    const std::size_t n = points_.size();
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(points_[i]);
        if (i + 1 == n && !closed_) break;
        const Vec2 a = points_[i];
        const Vec2 b = points_[(i + 1) % n];
        const double len = distance(a, b);
        const double pieces = std::ceil(len / max_seg);
        if (out.size() + static_cast<std::size_t>(std::max(pieces, 1.0)) > vertex_cap) {
            throw VertexCapError(vertex_cap, {});
        }
        for (double k = 1.0; k < pieces; k += 1.0) out.push_back(a + (k / pieces) * (b - a));
    }
    return Polyline(std::move(out), closed_);
}

Polyline Polyline::mapped(const PlanarMap& f) const {
    std::vector<Vec2> out;
    out.reserve(points_.size());
    for (const Vec2& p : points_) {
        const Vec2 q = f(p);
        if (out.empty() || !(out.back() == q)) out.push_back(q);
    }
    if (closed_) {
        while (out.size() > 1 && out.back() == out.front()) out.pop_back();
        if (out.size() < 3) throw std::invalid_argument("closed polyline collapsed under the map");
    }
    return Polyline(std::move(out), closed_);
}

Polyline Polyline::concatenate(const Polyline& a, const Polyline& b) {
    if (a.closed() || b.closed()) throw std::invalid_argument("only open polylines concatenate");
    std::vector<Vec2> pts = a.points();
    for (const Vec2& p : b.points()) {
        if (!(pts.back() == p)) pts.push_back(p);
    }
    return Polyline(std::move(pts), false);
}

Polyline Polyline::circle(Vec2 center, double radius, std::size_t points) {
    if (points < 3 || !(radius > 0.0)) throw std::invalid_argument("circle needs >= 3 points and radius > 0");
    std::vector<Vec2> pts;
    pts.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(points);
        pts.push_back({center.x + radius * std::cos(t), center.y + radius * std::sin(t)});
    }
    return Polyline(std::move(pts), true);
}

}  // namespace distortion
