#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "distortion/exact_matrix.hpp"

namespace distortion {

/// Expanding eigenvalue (3 + sqrt 5)/2 of the cat map [[2,1],[1,1]], in Q(sqrt 5).
QuadScalar cat_map_eigenvalue();

/// Affine map x -> A^power x + coefficient * w of the torus, where A is the cat map
/// and w spans its unstable line, so A w = lambda w. These maps form a group that is
/// closed in (power, coefficient) coordinates:
///   (j2, c2) o (j1, c1) = (j2 + j1, lambda^j2 c1 + c2).
struct MessPair {
    std::int64_t power = 0;
    QuadScalar coefficient = QuadScalar::zero(5);

    friend bool operator==(const MessPair&, const MessPair&) = default;
};

MessPair mess_compose(const MessPair& outer, const MessPair& inner);
MessPair mess_inverse(const MessPair& m);

/// Element of an explicit matrix group or of the Mess affine group.
class GroupElement {
public:
    enum class Kind { matrix, mess };

    GroupElement(ExactMatrix m) : rep_(std::move(m)) {}
    GroupElement(MessPair p);

    Kind kind() const { return rep_.index() == 0 ? Kind::matrix : Kind::mess; }
    const ExactMatrix& matrix() const { return std::get<ExactMatrix>(rep_); }
    const MessPair& mess() const { return std::get<MessPair>(rep_); }

    /// Identity of the same group (same dimension and d, or the Mess identity).
    GroupElement identity() const;
    GroupElement inverse() const;
    GroupElement pow(const BigInt& exponent) const;
    bool is_identity() const;

    /// Canonical text: the matrix string, or "mess(j,c)".
    std::string canonical_id() const;
    std::size_t hash() const;

    /// Word convention: x * y is the composition x o y (y acts first).
    friend GroupElement operator*(const GroupElement& x, const GroupElement& y);
    friend bool operator==(const GroupElement& x, const GroupElement& y) = default;

private:
    std::variant<ExactMatrix, MessPair> rep_;
};

}  // namespace distortion

template <>
struct std::hash<distortion::GroupElement> {
    std::size_t operator()(const distortion::GroupElement& g) const noexcept { return g.hash(); }
};
