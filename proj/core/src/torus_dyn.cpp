#include "distortion/torus_dyn.hpp"

#include <cmath>
#include <stdexcept>

#include "distortion/numeric.hpp"

namespace distortion::torus {

IntMatrix2 operator*(const IntMatrix2& a, const IntMatrix2& b) {
    return IntMatrix2{{a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
                       a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)}};
}

IntMatrix2 cat_matrix() { return IntMatrix2{{2, 1, 1, 1}}; }

Vec2 unstable_direction() {
    const Vec2 v{1.0, (std::sqrt(5.0) - 1.0) / 2.0};
    return (1.0 / norm(v)) * v;
}

ToralAffine::ToralAffine(IntMatrix2 linear, Translation translation)
    : linear_(linear), translation_(std::move(translation)) {
    if (const auto* q = std::get_if<QuadScalar>(&translation_); q && q->discriminant() != 5) {
        throw std::invalid_argument("exact torus translations are coefficients in Q(sqrt 5)");
    }
}

ToralAffine ToralAffine::from_mess(const MessPair& p) {
    IntMatrix2 step = p.power >= 0 ? cat_matrix() : IntMatrix2{{1, -1, -1, 2}};
    IntMatrix2 m{};
    for (std::int64_t i = 0; i < (p.power >= 0 ? p.power : -p.power); ++i) m = m * step;
    return ToralAffine(m, p.coefficient);
}

Vec2 ToralAffine::translation_vector() const {
    if (const auto* v = std::get_if<Vec2>(&translation_)) return *v;
    return std::get<QuadScalar>(translation_).to_double() * unstable_direction();
}

bool ToralAffine::is_diffeomorphism() const {
    const long det = linear_.determinant();
    return det == 1 || det == -1;
}

Vec2 affine_apply(const ToralAffine& f, Vec2 x) { return f(x); }

MessIdentityReport mess_identity_check(int n) {
    if (n < 1) throw std::invalid_argument("mess identity check needs n >= 1");
    const MessPair a{1, QuadScalar::zero(5)};
    const MessPair a_inv = mess_inverse(a);
    const MessPair t{0, QuadScalar::one(5)};
    auto chain = [](const MessPair& outer, const MessPair& middle, const MessPair& inner, int k) {
        MessPair acc{};
        for (int i = 0; i < k; ++i) acc = mess_compose(acc, outer);
        acc = mess_compose(acc, middle);
        for (int i = 0; i < k; ++i) acc = mess_compose(acc, inner);
        return acc;
    };

    MessIdentityReport r;
    r.n = n;
    r.g_n = chain(a_inv, t, a, n);
    r.h_n = chain(a, t, a_inv, n);
    r.product = mess_compose(r.g_n, r.h_n);
    const QuadScalar lambda = cat_map_eigenvalue();
    r.expected = lambda.pow(n) + lambda.pow(-n);
    const QuadScalar tr = mat_trace(mat_power(ExactMatrix{{2, 1}, {1, 1}}, n));
    r.trace = tr.rational_part().get_num();
    r.product_matches = r.product == MessPair{0, r.expected};
    r.trace_matches = r.expected.is_integer() && r.expected.rational_part() == tr.rational_part();
    return r;
}

EgrEstimate curve_iterate_lengths(const PlanarMap& f, const Polyline& tau, int iterations, double max_seg,
                                  std::size_t vertex_cap) {
    if (iterations < 2) throw std::invalid_argument("egr needs N >= 2 iterates");
    if (!(max_seg > 0.0)) throw std::invalid_argument("max_seg must be positive");
    EgrEstimate est;
    Polyline curve = tau;
    est.lengths.push_back(curve.length());
    est.vertex_counts.push_back(curve.size());
    for (int n = 1; n <= iterations; ++n) {
        try {
            curve = curve.refined(max_seg, vertex_cap).mapped(f);
        } catch (const VertexCapError&) {
            throw VertexCapError(vertex_cap, est.lengths);
        }
        est.lengths.push_back(curve.length());
        est.vertex_counts.push_back(curve.size());
    }
    std::vector<double> xs, ys;
    for (int n = iterations / 2; n <= iterations; ++n) {
        const double len = est.lengths[static_cast<std::size_t>(n)];
        if (!(len > 0.0)) throw std::domain_error("curve length vanished; log-length undefined");
        xs.push_back(n);
        ys.push_back(std::log(len));
    }
    est.slope = least_squares_slope(xs, ys);
    return est;
}

std::vector<double> displacement_rate(const PlanarMap& f, Vec2 x1, Vec2 x2, int iterations) {
    if (iterations < 1) throw std::invalid_argument("displacement needs N >= 1");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(iterations));
    for (int n = 1; n <= iterations; ++n) {
        x1 = f(x1);
        x2 = f(x2);
        out.push_back(distance(x1, x2) / n);
    }
    return out;
}

}  // namespace distortion::torus
