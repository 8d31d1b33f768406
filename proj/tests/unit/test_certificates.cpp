#include <gtest/gtest.h>

#include "distortion/certificates.hpp"
#include "oracles.hpp"

using namespace distortion;
using cayley::Family;

TEST(Certificate, HeisenbergThree) {
    const auto c = cayley::certificate_witness(Family::heisenberg, 3);
    const auto group = cayley::family_group(Family::heisenberg);
    EXPECT_EQ(group.generators.word_to_string(c.word), "g^-1 g^-1 g^-1 h^-1 h^-1 h^-1 g g g h h h");
    EXPECT_EQ(c.power, 9);
    EXPECT_EQ(c.length, 12u);
    EXPECT_EQ(evaluate_word(group.generators, c.word).matrix(), ExactMatrix({{1, 0, 9}, {0, 1, 0}, {0, 0, 1}}));
}

TEST(Certificate, PolterovichAndMessExamples) {
    const auto p = cayley::certificate_witness(Family::polterovich, 1);
    EXPECT_EQ(p.power, 6);
    EXPECT_EQ(p.length, 6u);
    const auto m = cayley::certificate_witness(Family::mess, 2);
    EXPECT_EQ(m.power, 7);
    EXPECT_EQ(m.length, 10u);
    EXPECT_EQ(m.claimed.mess().coefficient, QuadScalar(7, 5));
    EXPECT_EQ(mat_trace(mat_power(ExactMatrix({{2, 1}, {1, 1}}), 2)), QuadScalar(7));
}

TEST(Certificate, AllFamiliesSoundForNUpToEight) {
    for (const auto f : {Family::heisenberg, Family::sl2, Family::polterovich, Family::mess}) {
        const auto group = cayley::family_group(f);
        for (int n = 1; n <= 8; ++n) {
            const auto c = cayley::certificate_witness(f, n);
            ASSERT_TRUE(cayley::verify_certificate(c)) << cayley::family_name(f) << " " << n;
            ASSERT_EQ(evaluate_word(group.generators, c.word), group.distorted.pow(c.power));
            ASSERT_EQ(c.word.length(), c.length);
        }
    }
}

TEST(Certificate, ClaimedPowersFollowOracles) {
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(cayley::certificate_witness(Family::heisenberg, n).power, n * n);
        EXPECT_EQ(cayley::certificate_witness(Family::heisenberg, n).length, 4u * n);
        EXPECT_EQ(cayley::certificate_witness(Family::sl2, n).power, BigInt(1) << (2 * n));
        EXPECT_EQ(cayley::certificate_witness(Family::sl2, n).length, 2u * n + 1);
        EXPECT_EQ(cayley::polterovich_power(n), oracle::polterovich_m(n));
        EXPECT_EQ(cayley::certificate_witness(Family::polterovich, n).length, 4u * n + 2);
        EXPECT_EQ(cayley::cat_map_trace(n), oracle::lucas_trace(n));
        EXPECT_EQ(cayley::certificate_witness(Family::mess, n).length, 4u * n + 2);
    }
    EXPECT_EQ(cayley::polterovich_power(2), 34);
    EXPECT_EQ(cayley::polterovich_power(3), 198);
    EXPECT_EQ(cayley::polterovich_power(4), 1154);
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(cayley::cat_map_trace(n), (std::array<int, 5>{3, 7, 18, 47, 123})[n - 1]);
}

TEST(Certificate, TamperedClaimFails) {
    auto c = cayley::certificate_witness(Family::sl2, 2);
    c.claimed = c.claimed * c.claimed;
    EXPECT_FALSE(cayley::verify_certificate(c));
    auto d = cayley::certificate_witness(Family::heisenberg, 2);
    d.length = 7;
    EXPECT_FALSE(cayley::verify_certificate(d));
}

TEST(Certificate, Errors) {
    EXPECT_THROW(cayley::certificate_witness(Family::mess, 0), std::invalid_argument);
    EXPECT_THROW(cayley::parse_family("free"), std::invalid_argument);
    EXPECT_EQ(cayley::parse_family("polterovich"), Family::polterovich);
}

TEST(MessPairs, ConjugatesOfTranslation) {
    const QuadScalar lambda(Rational(3, 2), Rational(1, 2), 5);
    const GroupElement A = MessPair{1, QuadScalar::zero(5)};
    const GroupElement T = MessPair{0, QuadScalar::one(5)};
    for (int n = 1; n <= 12; ++n) {
        const auto gn = A.pow(-n) * T * A.pow(n);
        EXPECT_EQ(gn.mess().power, 0);
        EXPECT_EQ(gn.mess().coefficient, lambda.pow(-n)) << n;
    }
}

TEST(Profile, HeisenbergRatios) {
    const auto group = cayley::family_group(Family::heisenberg);
    const auto profile = cayley::distortion_profile(group.generators, group.distorted, {1, 4, 9}, 8, Family::heisenberg);
    ASSERT_EQ(profile.rows.size(), 3u);
    const std::array<Rational, 3> bound{Rational(4), Rational(2), Rational(4, 3)};
    for (std::size_t i = 0; i < 3; ++i) {
        ASSERT_TRUE(profile.rows[i].ratio.has_value());
        EXPECT_LE(*profile.rows[i].ratio, bound[i]);
        if (profile.rows[i].bfs_length && profile.rows[i].certificate_length) {
            EXPECT_LE(static_cast<std::size_t>(*profile.rows[i].bfs_length), *profile.rows[i].certificate_length);
        }
    }
    EXPECT_EQ(profile.rows[1].bfs_length, 8);
    EXPECT_EQ(profile.rows[2].bfs_status, cayley::BfsStatus::not_found);
}

TEST(Profile, Sl2CertificateLengths) {
    const auto group = cayley::family_group(Family::sl2);
    const auto profile = cayley::distortion_profile(group.generators, group.distorted, {4, 16, 64}, 3, Family::sl2);
    EXPECT_EQ(profile.rows[0].certificate_length, 3u);
    EXPECT_EQ(profile.rows[1].certificate_length, 5u);
    EXPECT_EQ(profile.rows[2].certificate_length, 7u);
    EXPECT_EQ(profile.rows[2].ratio, Rational(7, 64));
}

TEST(Profile, PlainBfsRatioAndCapacity) {
    const auto group = cayley::family_group(Family::heisenberg);
    const GroupElement g = group.generators.element(0);
    const auto profile = cayley::distortion_profile(group.generators, g, {1}, 2);
    EXPECT_EQ(profile.rows[0].ratio, Rational(1));
    const auto capped = cayley::distortion_profile(group.generators, group.distorted, {100}, 20, std::nullopt, 50);
    EXPECT_EQ(capped.rows[0].bfs_status, cayley::BfsStatus::unknown);
    EXPECT_LT(capped.complete_radius, 20);
    EXPECT_THROW(cayley::distortion_profile(group.generators, g, {4, 2}, 2), std::invalid_argument);
}

TEST(Witte, Examples) {
    const auto r = cayley::witte_relation_check(1, 2, 1, 1);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.sign, 1);
    EXPECT_EQ(r.exponent, 1);
    for (int i = 1; i <= 6; ++i) {
        const auto s = cayley::witte_relation_check(2, i, 1, 1);
        EXPECT_TRUE(s.pass()) << i;
        EXPECT_EQ(std::abs(s.exponent), 2);
    }
    const auto t = cayley::witte_relation_check(2, 2, 3, 2);
    EXPECT_TRUE(t.pass());
    EXPECT_EQ(std::abs(t.exponent), 12);
    EXPECT_THROW(cayley::witte_relation_check(0, 1, 1, 1), std::invalid_argument);
    EXPECT_THROW(cayley::witte_relation_check(1, 7, 1, 1), std::invalid_argument);
}

TEST(Witte, AgreesWithInt64Commutators) {
    static constexpr int kPos[6][2] = {{0, 1}, {0, 2}, {1, 2}, {1, 0}, {2, 0}, {2, 1}};
    for (long k : {1, 2, 3}) {
        for (int i = 1; i <= 6; ++i) {
            const int prev = (i + 4) % 6, next = i % 6, self = i - 1;
            for (int m = 1; m <= 3; ++m) {
                for (int n = 1; n <= 3; ++n) {
                    const auto a = oracle::power(oracle::elementary(kPos[prev][0], kPos[prev][1], k), m);
                    const auto b = oracle::power(oracle::elementary(kPos[next][0], kPos[next][1], k), n);
                    const auto c = oracle::mul(oracle::mul(oracle::inverse(a), oracle::inverse(b)), oracle::mul(a, b));
                    const auto r = cayley::witte_relation_check(k, i, m, n);
                    ASSERT_TRUE(r.pass());
                    ASSERT_EQ(c, oracle::elementary(kPos[self][0], kPos[self][1], r.exponent * k));
                }
            }
        }
    }
}
