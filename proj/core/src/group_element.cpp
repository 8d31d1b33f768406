#include "distortion/group_element.hpp"

#include "distortion/errors.hpp"

namespace distortion {

QuadScalar cat_map_eigenvalue() { return QuadScalar(Rational(3, 2), Rational(1, 2), 5); }

namespace {

void require_mess_field(const MessPair& p) {
    if (p.coefficient.discriminant() != 5) throw DiscriminantMismatch(5, p.coefficient.discriminant());
}

}  // namespace

MessPair mess_compose(const MessPair& outer, const MessPair& inner) {
    return MessPair{outer.power + inner.power,
                    cat_map_eigenvalue().pow(static_cast<long>(outer.power)) * inner.coefficient +
                        outer.coefficient};
}

MessPair mess_inverse(const MessPair& m) {
    return MessPair{-m.power, -(cat_map_eigenvalue().pow(static_cast<long>(-m.power)) * m.coefficient)};
}

GroupElement::GroupElement(MessPair p) : rep_(std::move(p)) { require_mess_field(mess()); }

GroupElement GroupElement::identity() const {
    if (kind() == Kind::mess) return GroupElement(MessPair{});
    return GroupElement(ExactMatrix::identity(matrix().dimension(), matrix().discriminant()));
}

GroupElement GroupElement::inverse() const {
    if (kind() == Kind::mess) return GroupElement(mess_inverse(mess()));
    return GroupElement(matrix().inverse());
}

GroupElement GroupElement::pow(const BigInt& exponent) const {
    if (kind() == Kind::matrix) return GroupElement(matrix().pow(exponent));
    if (sgn(exponent) < 0) return inverse().pow(BigInt(-exponent));
    GroupElement result = identity();
    GroupElement base = *this;
    const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    for (std::size_t bit = 0; bit < bits; ++bit) {
        if (mpz_tstbit(exponent.get_mpz_t(), bit)) result = result * base;
        if (bit + 1 < bits) base = base * base;
    }
    return result;
}

bool GroupElement::is_identity() const {
    if (kind() == Kind::mess) return mess().power == 0 && mess().coefficient.is_zero();
    return matrix().is_identity();
}

std::string GroupElement::canonical_id() const {
    if (kind() == Kind::matrix) return matrix().to_string();
    return "mess(" + std::to_string(mess().power) + "," + mess().coefficient.to_string() + ")";
}

std::size_t GroupElement::hash() const {
    if (kind() == Kind::matrix) return matrix().hash();
    const auto& m = mess();
    return m.coefficient.hash() ^ (static_cast<std::size_t>(m.power) * 0x9e3779b97f4a7c15ULL);
}

GroupElement operator*(const GroupElement& x, const GroupElement& y) {
    if (x.kind() != y.kind()) throw std::invalid_argument("cannot multiply matrix and Mess-pair elements");
    if (x.kind() == GroupElement::Kind::mess) return GroupElement(mess_compose(x.mess(), y.mess()));
    return GroupElement(x.matrix() * y.matrix());
}

}  // namespace distortion
