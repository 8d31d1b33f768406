#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <variant>
#include <vector>

namespace distortion::stability {

/// Point of R^m, m in {1, 2}; unused coordinates stay zero.
using Point = std::array<double, 2>;

struct Monomial {
    double coefficient;
    std::array<int, 2> exponents;  // powers of x_1, x_2
};

/// Map g(x) = x + P(x) of R^m fixing 0 with Dg(0) = I. The perturbation P is a polynomial
/// whose monomials all have total degree >= 2, so both conditions hold by construction.
class NearIdentityMap {
public:
    struct Polynomial {
        std::vector<std::vector<Monomial>> components;  // one monomial list per output coordinate
    };
    struct Composition {
        std::vector<NearIdentityMap> maps;  // maps[0] o maps[1] o ...
    };
    struct Power {
        std::shared_ptr<const NearIdentityMap> base;
        int exponent;  // >= 0
    };
    using Descriptor = std::variant<Polynomial, Composition, Power>;

    /// Throws InvalidDescriptor on a monomial of degree < 2 or a dimension outside {1, 2}.
    static NearIdentityMap polynomial(int dimension, std::vector<std::vector<Monomial>> components);
    static NearIdentityMap identity(int dimension) { return polynomial(dimension, std::vector<std::vector<Monomial>>(static_cast<std::size_t>(dimension))); }
    static NearIdentityMap composition(std::vector<NearIdentityMap> maps);
    static NearIdentityMap power(NearIdentityMap base, int exponent);

    int dimension() const { return dim_; }
    Point operator()(const Point& x) const;
    /// g(x) - x.
    Point displacement(const Point& x) const;
    const Descriptor& descriptor() const { return desc_; }

private:
    NearIdentityMap(int dim, Descriptor d) : dim_(dim), desc_(std::move(d)) {}
    int dim_;
    Descriptor desc_;
};

double point_norm(const Point& p, int dimension);

/// Max over random x in the unit ball of
///   | (gh)^(x) - [ g^(x) + h^(x) + (g^(x + h^(x)) - g^(x)) ] |,
/// where f^(x) = f(x) - x and gh = g o h is evaluated by composition.
double cocycle_identity_residual(const NearIdentityMap& g, const NearIdentityMap& h, int samples, std::uint64_t seed);

struct ThetaReport {
    long n = 0;
    double normalizer = 0.0;            // M_n = max_i |g_i^(x_n)|
    std::vector<Point> theta;           // g_i^(x_n) / M_n
    std::vector<std::vector<double>> pair_defect;  // |Theta(g_i g_j) - Theta(g_i) - Theta(g_j)|
    double max_defect = 0.0;
};

/// Evaluates the normalized displacements at x_n for n = n_terms. The default sequence is
/// x_n = (1/n) * direction.
ThetaReport theta_estimate(const std::vector<NearIdentityMap>& maps, const std::function<Point(long)>& x_sequence,
                           long n_terms);
ThetaReport theta_estimate(const std::vector<NearIdentityMap>& maps, long n_terms, Point direction = {1.0, 0.0});

/// Quadratic-leading maps of R used by the tests and the CLI defaults:
/// x + x^2, x + x^3, x + 2x^2 - x^3, x - x^2/2 + x^4.
std::vector<NearIdentityMap> polynomial_test_family();

}  // namespace distortion::stability
