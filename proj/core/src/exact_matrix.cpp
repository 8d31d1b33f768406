#include "distortion/exact_matrix.hpp"

#include "distortion/errors.hpp"

#include <utility>

namespace distortion {

ExactMatrix::ExactMatrix(std::size_t n, std::vector<QuadScalar> entries)
    : n_(n), d_(QuadScalar::kDefaultDiscriminant), entries_(std::move(entries)) {
    if (n_ == 0) throw DimensionMismatch("matrix dimension must be positive");
    if (entries_.size() != n_ * n_) {
        throw DimensionMismatch("expected " + std::to_string(n_ * n_) + " entries, got " +
                                std::to_string(entries_.size()));
    }
    d_ = entries_.front().discriminant();
    for (const auto& e : entries_) {
        if (e.discriminant() != d_) throw DiscriminantMismatch(d_, e.discriminant());
    }
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows, int d)
    : n_(rows.size()), d_(d) {
    if (n_ == 0) throw DimensionMismatch("matrix dimension must be positive");
    entries_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw DimensionMismatch("matrix rows must all have length n");
        for (const auto& q : row) entries_.emplace_back(q, Rational(0), d);
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n, int d) {
    std::vector<QuadScalar> e(n * n, QuadScalar::zero(d));
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = QuadScalar::one(d);
    return ExactMatrix(n, std::move(e));
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<QuadScalar>>& rows) {
    std::vector<QuadScalar> e;
    e.reserve(rows.size() * rows.size());
    for (const auto& row : rows) {
        if (row.size() != rows.size()) throw DimensionMismatch("matrix must be square");
        e.insert(e.end(), row.begin(), row.end());
    }
    return ExactMatrix(rows.size(), std::move(e));
}

QuadScalar ExactMatrix::trace() const {
    QuadScalar t = QuadScalar::zero(d_);
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

bool ExactMatrix::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const auto& e = (*this)(i, j);
            if (i == j ? !e.is_one() : !e.is_zero()) return false;
        }
    }
    return true;
}

QuadScalar ExactMatrix::determinant() const {
    // Fraction-based Gaussian elimination; exact because the field has exact division.
    std::vector<QuadScalar> a = entries_;
    QuadScalar det = QuadScalar::one(d_);
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && a[pivot * n_ + col].is_zero()) ++pivot;
        if (pivot == n_) return QuadScalar::zero(d_);
        if (pivot != col) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(a[pivot * n_ + j], a[col * n_ + j]);
            det = -det;
        }
        const QuadScalar p = a[col * n_ + col];
        det *= p;
        const QuadScalar p_inv = p.inverse();
        for (std::size_t r = col + 1; r < n_; ++r) {
            if (a[r * n_ + col].is_zero()) continue;
            const QuadScalar factor = a[r * n_ + col] * p_inv;
            for (std::size_t j = col; j < n_; ++j) a[r * n_ + j] -= factor * a[col * n_ + j];
        }
    }
    return det;
}

ExactMatrix ExactMatrix::inverse() const {
    if (!determinant().is_unit()) throw SingularError("matrix determinant is not a unit");
    // Gauss-Jordan on [A | I].
    std::vector<QuadScalar> a = entries_;
    std::vector<QuadScalar> inv = identity(n_, d_).entries_;
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (a[pivot * n_ + col].is_zero()) ++pivot;
        if (pivot != col) {
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(a[pivot * n_ + j], a[col * n_ + j]);
                std::swap(inv[pivot * n_ + j], inv[col * n_ + j]);
            }
        }
        const QuadScalar p_inv = a[col * n_ + col].inverse();
        for (std::size_t j = 0; j < n_; ++j) {
            a[col * n_ + j] *= p_inv;
            inv[col * n_ + j] *= p_inv;
        }
        for (std::size_t r = 0; r < n_; ++r) {
            if (r == col || a[r * n_ + col].is_zero()) continue;
            const QuadScalar factor = a[r * n_ + col];
            for (std::size_t j = 0; j < n_; ++j) {
                a[r * n_ + j] -= factor * a[col * n_ + j];
                inv[r * n_ + j] -= factor * inv[col * n_ + j];
            }
        }
    }
    return ExactMatrix(n_, std::move(inv));
}

ExactMatrix ExactMatrix::pow(long exponent) const {
    if (exponent < 0) {
        // -(exponent + 1) + 1 avoids overflow at LONG_MIN.
        return inverse().pow(BigInt(BigInt(-(exponent + 1)) + 1));
    }
    return pow(BigInt(exponent));
}

ExactMatrix ExactMatrix::pow(const BigInt& exponent) const {
    if (sgn(exponent) < 0) return inverse().pow(BigInt(-exponent));
    ExactMatrix result = identity(n_, d_);
    ExactMatrix base = *this;
    const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    for (std::size_t bit = 0; bit < bits; ++bit) {
        if (mpz_tstbit(exponent.get_mpz_t(), bit)) result = result * base;
        if (bit + 1 < bits) base = base * base;
    }
    return result;
}

ExactMatrix ExactMatrix::conjugate() const {
    std::vector<QuadScalar> e;
    e.reserve(entries_.size());
    for (const auto& x : entries_) e.push_back(x.conjugate());
    return ExactMatrix(n_, std::move(e));
}

std::string ExactMatrix::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < n_; ++i) {
        out += i == 0 ? "[" : ",[";
        for (std::size_t j = 0; j < n_; ++j) {
            if (j != 0) out += ',';
            out += (*this)(i, j).to_string();
        }
        out += ']';
    }
    out += ']';
    return out;
}

std::size_t ExactMatrix::hash() const {
    std::size_t h = n_ * 0x100000001b3ULL;
    for (const auto& e : entries_) h = (h ^ e.hash()) * 0x100000001b3ULL;
    return h;
}

ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs) {
    if (lhs.n_ != rhs.n_) {
        throw DimensionMismatch("cannot multiply " + std::to_string(lhs.n_) + "x" + std::to_string(lhs.n_) +
                                " by " + std::to_string(rhs.n_) + "x" + std::to_string(rhs.n_));
    }
    if (lhs.d_ != rhs.d_) throw DiscriminantMismatch(lhs.d_, rhs.d_);
    const std::size_t n = lhs.n_;
    std::vector<QuadScalar> out(n * n, QuadScalar::zero(lhs.d_));
    // Group generators are sparse (elementary and unipotent), so skip zero terms.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const QuadScalar& a = lhs.entries_[i * n + k];
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const QuadScalar& b = rhs.entries_[k * n + j];
                if (b.is_zero()) continue;
                out[i * n + j] += a * b;
            }
        }
    }
    return ExactMatrix(n, std::move(out));
}

ExactMatrix mat_multiply(const ExactMatrix& m, const ExactMatrix& n) { return m * n; }
ExactMatrix mat_inverse(const ExactMatrix& m) { return m.inverse(); }
ExactMatrix mat_power(const ExactMatrix& m, long n) { return m.pow(n); }
QuadScalar mat_trace(const ExactMatrix& m) { return m.trace(); }

ExactMatrix commutator(const ExactMatrix& g, const ExactMatrix& h) {
    return g.inverse() * h.inverse() * g * h;
}

}  // namespace distortion
