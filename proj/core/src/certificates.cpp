#include "distortion/certificates.hpp"

#include <stdexcept>

namespace distortion::cayley {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::heisenberg: return "heisenberg";
        case Family::sl2: return "sl2";
        case Family::polterovich: return "polterovich";
        case Family::mess: return "mess";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::heisenberg, Family::sl2, Family::polterovich, Family::mess}) {
        if (family_name(f) == name) return f;
    }
    throw std::invalid_argument("unknown certificate family '" + std::string(name) + "'");
}

namespace {

QuadScalar silver_ratio() { return QuadScalar(Rational(1), Rational(1), 2); }

ExactMatrix diagonal(const QuadScalar& a, const QuadScalar& b) {
    const int d = a.discriminant();
    return ExactMatrix(2, {a, QuadScalar::zero(d), QuadScalar::zero(d), b});
}

std::size_t claimed_length(Family f, int n) {
    switch (f) {
        case Family::heisenberg: return 4 * static_cast<std::size_t>(n);
        case Family::sl2: return 2 * static_cast<std::size_t>(n) + 1;
        case Family::polterovich:
        case Family::mess: return 4 * static_cast<std::size_t>(n) + 2;
    }
    return 0;
}

BigInt claimed_power(Family f, int n) {
    switch (f) {
        case Family::heisenberg: return BigInt(n) * n;
        case Family::sl2: {
            BigInt p;
            mpz_ui_pow_ui(p.get_mpz_t(), 4, static_cast<unsigned long>(n));
            return p;
        }
        case Family::polterovich: return polterovich_power(n);
        case Family::mess: return cat_map_trace(n);
    }
    return 0;
}

}  // namespace

FamilyGroup family_group(Family f) {
    switch (f) {
        case Family::heisenberg: {
            ExactMatrix g{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
            ExactMatrix h{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}};
            GroupElement fz = GroupElement(commutator(g, h));
            return {GeneratingSet({"g", "h"}, {GroupElement(g), GroupElement(h)}), fz, "f"};
        }
        case Family::sl2: {
            ExactMatrix a{{Rational(1, 2), 0}, {0, 2}};
            ExactMatrix b{{1, 1}, {0, 1}};
            return {GeneratingSet({"A", "B"}, {GroupElement(a), GroupElement(b)}), GroupElement(b), "B"};
        }
        case Family::polterovich: {
            const QuadScalar lambda = silver_ratio();
            ExactMatrix a = diagonal(lambda.inverse(), lambda);
            ExactMatrix b{{1, 1}, {0, 1}};
            return {GeneratingSet({"A", "B"}, {GroupElement(a), GroupElement(b)}), GroupElement(b), "B"};
        }
        case Family::mess: {
            GroupElement a(MessPair{1, QuadScalar::zero(5)});
            GroupElement t(MessPair{0, QuadScalar::one(5)});
            return {GeneratingSet({"A", "T"}, {a, t}), t, "T"};
        }
    }
    throw std::invalid_argument("unknown family");
}

BigInt polterovich_power(int n) {
    const QuadScalar lambda = silver_ratio();
    const QuadScalar m = lambda.pow(2L * n) + lambda.pow(-2L * n);
    if (!m.is_integer()) throw std::logic_error("lambda^2n + lambda^-2n is not an integer: " + m.to_string());
    return m.rational_part().get_num();
}

BigInt cat_map_trace(int n) {
    const QuadScalar t = mat_trace(mat_power(ExactMatrix{{2, 1}, {1, 1}}, n));
    return t.rational_part().get_num();
}

Certificate certificate_witness(Family f, int n) {
    if (n < 1) throw std::invalid_argument("certificate index n must be >= 1");
    FamilyGroup group = family_group(f);
    const Word first = Word::generator(0);   // g or A
    const Word second = Word::generator(1);  // h, B or T
    Word w;
    switch (f) {
        case Family::heisenberg:
            w = first.pow(-n) + second.pow(-n) + first.pow(n) + second.pow(n);
            break;
        case Family::sl2:
            w = first.pow(-n) + second + first.pow(n);
            break;
        case Family::polterovich:
        case Family::mess:
            w = first.pow(-n) + second + first.pow(n) + first.pow(n) + second + first.pow(-n);
            break;
    }
    BigInt power = claimed_power(f, n);
    GroupElement claimed = group.distorted.pow(power);
    return Certificate{f, n, std::move(w), std::move(power), std::move(claimed), claimed_length(f, n)};
}

bool verify_certificate(const Certificate& c) {
    const FamilyGroup group = family_group(c.family);
    return c.word.length() == c.length && evaluate_word(group.generators, c.word) == c.claimed;
}

DistortionProfile distortion_profile(const GeneratingSet& gens, const GroupElement& g,
                                     const std::vector<BigInt>& powers, int max_radius,
                                     std::optional<Family> certificate, std::size_t element_cap) {
    for (std::size_t i = 0; i < powers.size(); ++i) {
        if (sgn(powers[i]) <= 0 || (i > 0 && powers[i] <= powers[i - 1])) {
            throw std::invalid_argument("profile powers must be positive and strictly ascending");
        }
    }
    Ball ball;
    try {
        ball = generate_ball(gens, max_radius, element_cap);
    } catch (const CapacityError& e) {
        ball = e.partial();
    }

    DistortionProfile profile;
    profile.max_radius = max_radius;
    profile.complete_radius = ball.complete_radius();
    profile.ball_size = ball.size();

    int next_witness = 1;
    for (const BigInt& p : powers) {
        ProfileRow row;
        row.n = p;
        const GroupElement gp = g.pow(p);
        row.element_id = gp.canonical_id();
        if (auto len = ball.length_of(gp)) {
            row.bfs_status = BfsStatus::found;
            row.bfs_length = *len;
        } else {
            row.bfs_status = ball.complete_radius() >= max_radius ? BfsStatus::not_found : BfsStatus::unknown;
        }
        if (certificate) {
            // Witness powers increase with the index, so the scan resumes where it stopped.
            while (claimed_power(*certificate, next_witness) < p) ++next_witness;
            if (claimed_power(*certificate, next_witness) == p) {
                const Certificate c = certificate_witness(*certificate, next_witness);
                if (c.claimed == gp && evaluate_word(gens, c.word) == gp) {
                    row.certificate_length = c.length;
                    row.certificate_n = next_witness;
                }
            }
        }
        std::optional<std::size_t> best;
        if (row.bfs_length) best = static_cast<std::size_t>(*row.bfs_length);
        if (row.certificate_length && (!best || *row.certificate_length < *best)) best = row.certificate_length;
        if (best) {
            row.ratio = Rational(BigInt(static_cast<unsigned long>(*best)), p);
            row.ratio->canonicalize();
        }
        profile.rows.push_back(std::move(row));
    }
    return profile;
}

std::vector<ExactMatrix> witte_generators(long k) {
    static constexpr std::size_t kPositions[6][2] = {{0, 1}, {0, 2}, {1, 2}, {1, 0}, {2, 0}, {2, 1}};
    std::vector<ExactMatrix> out;
    for (const auto& pos : kPositions) {
        std::vector<QuadScalar> e(9, QuadScalar::zero());
        for (std::size_t i = 0; i < 3; ++i) e[i * 3 + i] = QuadScalar::one();
        e[pos[0] * 3 + pos[1]] = QuadScalar(k);
        out.emplace_back(3, std::move(e));
    }
    return out;
}

WitteReport witte_relation_check(long k, int i, long m, long n) {
    if (k < 1 || m < 1 || n < 1) throw std::invalid_argument("witte check needs k, m, n >= 1");
    if (i < 1 || i > 6) throw std::invalid_argument("witte index i must be in 1..6");
    const auto a = witte_generators(k);
    auto at = [&](int index) -> const ExactMatrix& { return a[static_cast<std::size_t>(((index - 1) % 6 + 6) % 6)]; };

    WitteReport r{k, i, m, n, false, false, 0, 0};
    r.neighbors_commute = commutator(at(i), at(i + 1)).is_identity();
    const ExactMatrix c = commutator(mat_power(at(i - 1), m), mat_power(at(i + 1), n));
    const long magnitude = m * n * k;
    if (c == mat_power(at(i), magnitude)) {
        r.sign = 1;
    } else if (c == mat_power(at(i), -magnitude)) {
        r.sign = -1;
    }
    r.commutator_matches = r.sign != 0;
    r.exponent = r.sign * magnitude;
    return r;
}

}  // namespace distortion::cayley
