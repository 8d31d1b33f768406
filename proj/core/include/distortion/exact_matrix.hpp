#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "distortion/quad_scalar.hpp"

namespace distortion {

/// Square matrix over Q(sqrt d), row-major, all entries sharing one d.
class ExactMatrix {
public:
    ExactMatrix(std::size_t n, std::vector<QuadScalar> entries);
    /// Rational entries given row by row; e.g. {{2, 1}, {1, 1}}.
    ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows,
                int d = QuadScalar::kDefaultDiscriminant);

    static ExactMatrix identity(std::size_t n, int d = QuadScalar::kDefaultDiscriminant);
    static ExactMatrix from_rows(const std::vector<std::vector<QuadScalar>>& rows);

    std::size_t dimension() const { return n_; }
    int discriminant() const { return d_; }
    const QuadScalar& operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
    const std::vector<QuadScalar>& entries() const { return entries_; }

    QuadScalar determinant() const;
    QuadScalar trace() const;
    bool is_identity() const;
    ExactMatrix inverse() const;
    ExactMatrix pow(long exponent) const;
    ExactMatrix pow(const BigInt& exponent) const;
    /// Entrywise Galois conjugation a + b√d -> a - b√d.
    ExactMatrix conjugate() const;

    /// "[[a,b],[c,d]]" with entries in QuadScalar::to_string() form.
    std::string to_string() const;
    std::size_t hash() const;

    friend ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs);
    friend bool operator==(const ExactMatrix& lhs, const ExactMatrix& rhs) {
        return lhs.n_ == rhs.n_ && lhs.d_ == rhs.d_ && lhs.entries_ == rhs.entries_;
    }

private:
    std::size_t n_;
    int d_;
    std::vector<QuadScalar> entries_;
};

ExactMatrix mat_multiply(const ExactMatrix& m, const ExactMatrix& n);
ExactMatrix mat_inverse(const ExactMatrix& m);
ExactMatrix mat_power(const ExactMatrix& m, long n);
QuadScalar mat_trace(const ExactMatrix& m);

/// Group commutator [g, h] = g^-1 h^-1 g h.
ExactMatrix commutator(const ExactMatrix& g, const ExactMatrix& h);

}  // namespace distortion

template <>
struct std::hash<distortion::ExactMatrix> {
    std::size_t operator()(const distortion::ExactMatrix& m) const noexcept { return m.hash(); }
};
