#include "distortion/quad_scalar.hpp"

#include "distortion/errors.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace distortion {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_mpz(mpz_srcptr z) {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z) + 1);
    const std::size_t limbs = mpz_size(z);
    for (std::size_t i = 0; i < limbs; ++i) {
        h = mix(h, static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))));
    }
    return h;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

bool is_square_free(int d) {
    if (d < 1) return false;
    for (int p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

std::size_t hash_rational(const Rational& q) {
    return mix(hash_mpz(q.get_num_mpz_t()), hash_mpz(q.get_den_mpz_t()));
}

Rational parse_rational(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ParseError("empty rational");
    if (text.front() == '+') text.remove_prefix(1);
    for (char c : text) {
        if (!(c == '-' || c == '/' || (c >= '0' && c <= '9'))) {
            throw ParseError("malformed rational: '" + std::string(text) + "'");
        }
    }
    Rational q;
    if (q.set_str(std::string(text), 10) != 0 || sgn(q.get_den()) == 0) {
        throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

QuadScalar::QuadScalar(Rational u, Rational v, int d) : u_(std::move(u)), v_(std::move(v)), d_(d) {
    if (d_ < 2 || !is_square_free(d_)) {
        throw std::invalid_argument("discriminant must be square-free and >= 2, got " + std::to_string(d_));
    }
    u_.canonicalize();
    v_.canonicalize();
}

void QuadScalar::require_same_field(const QuadScalar& other) const {
    if (d_ != other.d_) throw DiscriminantMismatch(d_, other.d_);
}

bool QuadScalar::is_integer() const { return is_rational() && u_.get_den() == 1; }

Rational QuadScalar::norm() const { return u_ * u_ - Rational(d_) * v_ * v_; }

QuadScalar QuadScalar::conjugate() const {
    QuadScalar c = *this;
    c.v_ = -c.v_;
    return c;
}

QuadScalar QuadScalar::inverse() const {
    if (is_zero()) throw SingularError("inverse of zero quadratic scalar");
    // (u + v√d)^-1 = (u - v√d) / (u² - d v²); the norm of a nonzero element is nonzero
    // because d is not a perfect square.
    const Rational n = norm();
    QuadScalar r = *this;
    r.u_ = u_ / n;
    r.v_ = -v_ / n;
    return r;
}

QuadScalar QuadScalar::pow(long exponent) const {
    QuadScalar base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-(exponent + 1)) + 1UL
                                   : static_cast<unsigned long>(exponent);
    QuadScalar result = one(d_);
    while (e != 0) {
        if (e & 1UL) result *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return result;
}

double QuadScalar::to_double() const {
    return u_.get_d() + v_.get_d() * std::sqrt(static_cast<double>(d_));
}

std::string QuadScalar::to_string() const {
    if (is_rational()) return u_.get_str();
    return to_full_string();
}

std::string QuadScalar::to_full_string() const {
    std::string out = u_.get_str();
    if (sgn(v_) < 0) {
        out += '-';
        out += Rational(-v_).get_str();
    } else {
        out += '+';
        out += v_.get_str();
    }
    out += "*sqrt(" + std::to_string(d_) + ")";
    return out;
}

QuadScalar QuadScalar::parse(std::string_view text, int d) {
    text = trim(text);
    const auto star = text.find("*sqrt(");
    if (star == std::string_view::npos) return QuadScalar(parse_rational(text), Rational(0), d);

    if (text.back() != ')') throw ParseError("malformed quadratic scalar: '" + std::string(text) + "'");
    const std::string_view disc = text.substr(star + 6, text.size() - star - 7);
    int parsed_d = 0;
    auto [ptr, ec] = std::from_chars(disc.data(), disc.data() + disc.size(), parsed_d);
    if (ec != std::errc() || ptr != disc.data() + disc.size()) {
        throw ParseError("malformed discriminant in '" + std::string(text) + "'");
    }
    if (parsed_d != d) throw DiscriminantMismatch(parsed_d, d);
    // The sign separating u from v is the last '+' or '-' that is not the leading sign.
    const std::string_view head = text.substr(0, star);
    std::size_t split = std::string_view::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
        if (head[i] == '+' || head[i] == '-') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) throw ParseError("missing rational part in '" + std::string(text) + "'");
    Rational u = parse_rational(head.substr(0, split));
    Rational v = parse_rational(head.substr(split + 1));
    if (head[split] == '-') v = -v;
    try {
        return QuadScalar(std::move(u), std::move(v), parsed_d);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::size_t QuadScalar::hash() const {
    return mix(mix(hash_rational(u_), hash_rational(v_)), static_cast<std::size_t>(d_));
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& rhs) {
    require_same_field(rhs);
    u_ += rhs.u_;
    v_ += rhs.v_;
    return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& rhs) {
    require_same_field(rhs);
    u_ -= rhs.u_;
    v_ -= rhs.v_;
    return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& rhs) {
    *this = *this * rhs;
    return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& rhs) {
    require_same_field(rhs);
    *this = *this * rhs.inverse();
    return *this;
}

QuadScalar QuadScalar::operator-() const {
    QuadScalar r = *this;
    r.u_ = -r.u_;
    r.v_ = -r.v_;
    return r;
}

QuadScalar operator*(const QuadScalar& p, const QuadScalar& q) {
    p.require_same_field(q);
    QuadScalar r = QuadScalar::zero(p.d_);
    // Rational-subring fast path: most matrix entries in the group examples are integers.
    if (sgn(p.v_) == 0 && sgn(q.v_) == 0) {
        r.u_ = p.u_ * q.u_;
        return r;
    }
    r.u_ = p.u_ * q.u_ + Rational(p.d_) * p.v_ * q.v_;
    r.v_ = p.u_ * q.v_ + p.v_ * q.u_;
    return r;
}

QuadScalar quad_multiply(const QuadScalar& p, const QuadScalar& q) { return p * q; }

QuadScalar quad_conjugate(const QuadScalar& p) { return p.conjugate(); }

}  // namespace distortion
