#include "distortion/stability_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "distortion/errors.hpp"
#include "distortion/numeric.hpp"

namespace distortion::stability {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double eval_component(const std::vector<Monomial>& terms, const Point& x) {
    double v = 0.0;
    for (const auto& m : terms) v += m.coefficient * std::pow(x[0], m.exponents[0]) * std::pow(x[1], m.exponents[1]);
    return v;
}

Point sub(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1]}; }

}  // namespace

NearIdentityMap NearIdentityMap::polynomial(int dimension, std::vector<std::vector<Monomial>> components) {
    if (dimension != 1 && dimension != 2) throw InvalidDescriptor("near-identity maps live in R^1 or R^2");
    if (components.size() != static_cast<std::size_t>(dimension)) {
        throw InvalidDescriptor("need one monomial list per coordinate");
    }
    for (const auto& comp : components) {
        for (const auto& m : comp) {
            if (m.exponents[0] < 0 || m.exponents[1] < 0) throw InvalidDescriptor("negative exponent");
            if (dimension == 1 && m.exponents[1] != 0) throw InvalidDescriptor("x_2 exponent in a map of R^1");
            if (m.exponents[0] + m.exponents[1] < 2) {
                throw InvalidDescriptor("perturbation monomials must have degree >= 2 so that g(0) = 0 and Dg(0) = I");
            }
            if (!std::isfinite(m.coefficient)) throw InvalidDescriptor("non-finite coefficient");
        }
    }
    return NearIdentityMap(dimension, Polynomial{std::move(components)});
}

NearIdentityMap NearIdentityMap::composition(std::vector<NearIdentityMap> maps) {
    if (maps.empty()) throw InvalidDescriptor("empty composition");
    const int dim = maps.front().dimension();
    for (const auto& m : maps) {
        if (m.dimension() != dim) throw InvalidDescriptor("composed maps must share a dimension");
    }
    return NearIdentityMap(dim, Composition{std::move(maps)});
}

NearIdentityMap NearIdentityMap::power(NearIdentityMap base, int exponent) {
    if (exponent < 0) throw InvalidDescriptor("polynomial maps have no closed-form inverse; exponent must be >= 0");
    const int dim = base.dimension();
    return NearIdentityMap(dim, Power{std::make_shared<const NearIdentityMap>(std::move(base)), exponent});
}

Point NearIdentityMap::operator()(const Point& x) const {
    return std::visit(overloaded{
                          [&](const Polynomial& p) {
                              Point y = x;
                              for (std::size_t i = 0; i < p.components.size(); ++i) y[i] += eval_component(p.components[i], x);
                              return y;
                          },
                          [&](const Composition& c) {
                              Point y = x;
                              for (auto it = c.maps.rbegin(); it != c.maps.rend(); ++it) y = (*it)(y);
                              return y;
                          },
                          [&](const Power& p) {
                              Point y = x;
                              for (int i = 0; i < p.exponent; ++i) y = (*p.base)(y);
                              return y;
                          },
                      },
                      desc_);
}

Point NearIdentityMap::displacement(const Point& x) const { return sub((*this)(x), x); }

double point_norm(const Point& p, int dimension) { return dimension == 1 ? std::abs(p[0]) : std::hypot(p[0], p[1]); }

double cocycle_identity_residual(const NearIdentityMap& g, const NearIdentityMap& h, int samples, std::uint64_t seed) {
    if (g.dimension() != h.dimension()) throw std::invalid_argument("maps must share a dimension");
    const int dim = g.dimension();
    SeededUniform rng(seed);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        Point x{0.0, 0.0};
        if (dim == 1) {
            x[0] = 2.0 * rng.next() - 1.0;
        } else {
            // Uniform in the unit disk.
            const double r = std::sqrt(rng.next());
            const double t = 2.0 * std::numbers::pi * rng.next();
            x = {r * std::cos(t), r * std::sin(t)};
        }
        const Point lhs = sub(g(h(x)), x);
        const Point g_hat = g.displacement(x);
        const Point h_hat = h.displacement(x);
        const Point shifted = g.displacement({x[0] + h_hat[0], x[1] + h_hat[1]});
        const Point rhs{g_hat[0] + h_hat[0] + (shifted[0] - g_hat[0]), g_hat[1] + h_hat[1] + (shifted[1] - g_hat[1])};
        worst = std::max(worst, point_norm(sub(lhs, rhs), dim));
    }
    return worst;
}

ThetaReport theta_estimate(const std::vector<NearIdentityMap>& maps, const std::function<Point(long)>& x_sequence,
                           long n_terms) {
    if (maps.empty()) throw std::invalid_argument("theta estimate needs at least one map");
    if (n_terms < 1) throw std::invalid_argument("theta estimate needs n_terms >= 1");
    const int dim = maps.front().dimension();
    for (const auto& m : maps) {
        if (m.dimension() != dim) throw std::invalid_argument("maps must share a dimension");
    }
    ThetaReport r;
    r.n = n_terms;
    const Point x = x_sequence(n_terms);
    std::vector<Point> hats;
    for (const auto& m : maps) {
        hats.push_back(m.displacement(x));
        r.normalizer = std::max(r.normalizer, point_norm(hats.back(), dim));
    }
    if (r.normalizer == 0.0) {
        throw std::domain_error("normalizer M_n vanishes: every map has zero displacement at x_n");
    }
    for (const auto& h : hats) r.theta.push_back({h[0] / r.normalizer, h[1] / r.normalizer});
    r.pair_defect.assign(maps.size(), std::vector<double>(maps.size(), 0.0));
    for (std::size_t i = 0; i < maps.size(); ++i) {
        for (std::size_t j = 0; j < maps.size(); ++j) {
            const Point gij = sub(maps[i](maps[j](x)), x);
            const Point defect{gij[0] / r.normalizer - r.theta[i][0] - r.theta[j][0],
                               gij[1] / r.normalizer - r.theta[i][1] - r.theta[j][1]};
            r.pair_defect[i][j] = point_norm(defect, dim);
            r.max_defect = std::max(r.max_defect, r.pair_defect[i][j]);
        }
    }
    return r;
}

ThetaReport theta_estimate(const std::vector<NearIdentityMap>& maps, long n_terms, Point direction) {
    return theta_estimate(
        maps, [direction](long n) { return Point{direction[0] / static_cast<double>(n), direction[1] / static_cast<double>(n)}; },
        n_terms);
}

std::vector<NearIdentityMap> polynomial_test_family() {
    auto poly = [](std::vector<Monomial> terms) { return NearIdentityMap::polynomial(1, {std::move(terms)}); };
    return {
        poly({{1.0, {2, 0}}}),
        poly({{1.0, {3, 0}}}),
        poly({{2.0, {2, 0}}, {-1.0, {3, 0}}}),
        poly({{-0.5, {2, 0}}, {1.0, {4, 0}}}),
    };
}

}  // namespace distortion::stability
