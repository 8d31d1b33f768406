#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace distortion {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Exact element u + v*sqrt(d) of the quadratic field Q(sqrt d).
///
/// The discriminant d is carried by every value and must be square-free and
/// at least 2. Binary operations between values with different d throw
/// DiscriminantMismatch. Rationals are kept in lowest terms, so equality and
/// hashing are componentwise.
class QuadScalar {
public:
    static constexpr int kDefaultDiscriminant = 2;

    QuadScalar() : QuadScalar(Rational(0)) {}
    explicit QuadScalar(Rational u, Rational v = 0, int d = kDefaultDiscriminant);
    QuadScalar(long u, int d = kDefaultDiscriminant) : QuadScalar(Rational(u), Rational(0), d) {}

    static QuadScalar zero(int d = kDefaultDiscriminant) { return QuadScalar(Rational(0), Rational(0), d); }
    static QuadScalar one(int d = kDefaultDiscriminant) { return QuadScalar(Rational(1), Rational(0), d); }

    const Rational& rational_part() const { return u_; }
    const Rational& sqrt_part() const { return v_; }
    int discriminant() const { return d_; }

    bool is_zero() const { return sgn(u_) == 0 && sgn(v_) == 0; }
    bool is_one() const { return sgn(v_) == 0 && u_ == 1; }
    bool is_rational() const { return sgn(v_) == 0; }
    bool is_integer() const;
    // Over a field every nonzero element is a unit.
    bool is_unit() const { return !is_zero(); }

    /// u^2 - d v^2, the field norm to Q.
    Rational norm() const;
    QuadScalar conjugate() const;
    QuadScalar inverse() const;
    QuadScalar pow(long exponent) const;

    double to_double() const;

    /// "u" when v == 0, otherwise "u+v*sqrt(d)" / "u-v*sqrt(d)" with u, v as p/q.
    std::string to_string() const;
    /// Always "u+v*sqrt(d)", even when v == 0.
    std::string to_full_string() const;
    /// Accepts both forms above; a bare rational takes the discriminant `d`.
    static QuadScalar parse(std::string_view text, int d = kDefaultDiscriminant);

    std::size_t hash() const;

    QuadScalar& operator+=(const QuadScalar& rhs);
    QuadScalar& operator-=(const QuadScalar& rhs);
    QuadScalar& operator*=(const QuadScalar& rhs);
    QuadScalar& operator/=(const QuadScalar& rhs);
    QuadScalar operator-() const;

    friend QuadScalar operator+(QuadScalar lhs, const QuadScalar& rhs) { return lhs += rhs; }
    friend QuadScalar operator-(QuadScalar lhs, const QuadScalar& rhs) { return lhs -= rhs; }
    friend QuadScalar operator*(const QuadScalar& lhs, const QuadScalar& rhs);
    friend QuadScalar operator/(QuadScalar lhs, const QuadScalar& rhs) { return lhs /= rhs; }
    friend bool operator==(const QuadScalar& lhs, const QuadScalar& rhs) {
        return lhs.d_ == rhs.d_ && lhs.u_ == rhs.u_ && lhs.v_ == rhs.v_;
    }

private:
    void require_same_field(const QuadScalar& other) const;

    Rational u_;
    Rational v_;
    int d_;
};

QuadScalar quad_multiply(const QuadScalar& p, const QuadScalar& q);
QuadScalar quad_conjugate(const QuadScalar& p);

bool is_square_free(int d);
std::size_t hash_rational(const Rational& q);
/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);

}  // namespace distortion

template <>
struct std::hash<distortion::QuadScalar> {
    std::size_t operator()(const distortion::QuadScalar& q) const noexcept { return q.hash(); }
};
