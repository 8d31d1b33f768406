#include <gtest/gtest.h>

#include "distortion/errors.hpp"
#include "distortion/exact_matrix.hpp"
#include "oracles.hpp"

using distortion::ExactMatrix;
using distortion::QuadScalar;
using distortion::Rational;

namespace {

ExactMatrix from_int(const oracle::Mat2& m) { return ExactMatrix({{m[0], m[1]}, {m[2], m[3]}}); }

ExactMatrix from_int(const oracle::Mat3& m) {
    return ExactMatrix({{m[0], m[1], m[2]}, {m[3], m[4], m[5]}, {m[6], m[7], m[8]}});
}

const ExactMatrix kCat({{2, 1}, {1, 1}});

std::vector<ExactMatrix> sample_matrices() {
    const QuadScalar lambda(Rational(1), Rational(1), 2);
    return {
        kCat,
        ExactMatrix({{Rational(1, 2), 0}, {0, 2}}),
        ExactMatrix({{1, 1}, {0, 1}}),
        ExactMatrix::from_rows({{lambda.inverse(), QuadScalar(0)}, {QuadScalar(0), lambda}}),
        ExactMatrix({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}),
        ExactMatrix({{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}),
    };
}

}  // namespace

TEST(ExactMatrix, MultiplyExamples) {
    EXPECT_EQ(mat_multiply(kCat, kCat), ExactMatrix({{5, 3}, {3, 2}}));
    EXPECT_EQ(mat_multiply(ExactMatrix::identity(2), kCat), kCat);
    const ExactMatrix g({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}), h({{1, 0, 0}, {0, 1, 1}, {0, 0, 1}});
    EXPECT_EQ(g * h, ExactMatrix({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}));
}

TEST(ExactMatrix, InverseExamples) {
    EXPECT_EQ(mat_inverse(ExactMatrix({{1, 1}, {0, 1}})), ExactMatrix({{1, -1}, {0, 1}}));
    EXPECT_EQ(mat_inverse(kCat), ExactMatrix({{1, -1}, {-1, 2}}));
    EXPECT_EQ(mat_inverse(ExactMatrix({{Rational(1, 2), 0}, {0, 2}})), ExactMatrix({{2, 0}, {0, Rational(1, 2)}}));
    for (const auto& m : sample_matrices()) EXPECT_TRUE((m * m.inverse()).is_identity());
}

TEST(ExactMatrix, PowerExamples) {
    EXPECT_EQ(mat_power(kCat, 3), ExactMatrix({{13, 8}, {8, 5}}));
    EXPECT_TRUE(mat_power(kCat, 0).is_identity());
    EXPECT_EQ(mat_power(ExactMatrix({{1, 1}, {0, 1}}), 4), ExactMatrix({{1, 4}, {0, 1}}));
    EXPECT_EQ(mat_power(kCat, -2), mat_power(mat_inverse(kCat), 2));
}

TEST(ExactMatrix, PowerAgreesWithInt64Products) {
    const oracle::Mat2 a{2, 1, 1, 1};
    for (int n = 0; n <= 30; ++n) EXPECT_EQ(mat_power(kCat, n), from_int(oracle::power(a, n))) << n;
    const auto w = oracle::elementary(0, 2, 3);
    for (int n = -6; n <= 6; ++n) EXPECT_EQ(from_int(w).pow(n), from_int(oracle::power(w, n))) << n;
}

TEST(ExactMatrix, PowerAdditivity) {
    for (const auto& m : sample_matrices()) {
        for (long a = -10; a <= 10; a += 3) {
            for (long b = -10; b <= 10; b += 4) {
                ASSERT_EQ(mat_power(m, a + b), mat_power(m, a) * mat_power(m, b)) << m.to_string() << " " << a << " " << b;
            }
        }
    }
}

TEST(ExactMatrix, TraceExamplesAndRecurrence) {
    EXPECT_EQ(mat_trace(kCat), QuadScalar(3));
    EXPECT_EQ(mat_trace(ExactMatrix::identity(3)), QuadScalar(3));
    EXPECT_EQ(mat_trace(mat_power(kCat, 2)), QuadScalar(7));
    for (int n = 0; n <= 20; ++n) {
        EXPECT_EQ(mat_trace(mat_power(kCat, n)), QuadScalar(oracle::lucas_trace(n))) << n;
    }
    for (int n = 1; n < 20; ++n) {
        EXPECT_EQ(mat_trace(mat_power(kCat, n + 1)), QuadScalar(3) * mat_trace(mat_power(kCat, n)) - mat_trace(mat_power(kCat, n - 1)));
    }
}

TEST(ExactMatrix, DeterminantAndConjugate) {
    EXPECT_EQ(kCat.determinant(), QuadScalar(1));
    EXPECT_EQ(ExactMatrix({{Rational(1, 2), 0}, {0, 2}}).determinant(), QuadScalar(1));
    EXPECT_EQ(ExactMatrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}).determinant(), QuadScalar(-3));
    const QuadScalar lambda(Rational(1), Rational(1), 2);
    const auto a = ExactMatrix::from_rows({{lambda.inverse(), QuadScalar(0)}, {QuadScalar(0), lambda}});
    EXPECT_EQ(a.conjugate(), ExactMatrix::from_rows({{-lambda, QuadScalar(0)}, {QuadScalar(0), -lambda.inverse()}}));
}

TEST(ExactMatrix, CommutatorOfHeisenbergGenerators) {
    const ExactMatrix g({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}), h({{1, 0, 0}, {0, 1, 1}, {0, 0, 1}});
    EXPECT_EQ(commutator(g, h), ExactMatrix({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}));
    EXPECT_EQ(commutator(g, h), from_int(oracle::mul(oracle::mul(oracle::inverse(oracle::elementary(0, 1, 1)),
                                                                oracle::inverse(oracle::elementary(1, 2, 1))),
                                                    oracle::mul(oracle::elementary(0, 1, 1), oracle::elementary(1, 2, 1)))));
}

TEST(ExactMatrix, StringAndHash) {
    EXPECT_EQ(kCat.to_string(), "[[2,1],[1,1]]");
    EXPECT_EQ(ExactMatrix({{Rational(1, 2), 0}, {0, 2}}).to_string(), "[[1/2,0],[0,2]]");
    EXPECT_EQ(kCat.hash(), ExactMatrix({{2, 1}, {1, 1}}).hash());
}

TEST(ExactMatrix, Errors) {
    EXPECT_THROW(ExactMatrix({{1, 2}, {2, 4}}).inverse(), distortion::SingularError);
    EXPECT_THROW(mat_power(ExactMatrix({{1, 2}, {2, 4}}), -1), distortion::SingularError);
    EXPECT_THROW(kCat * ExactMatrix::identity(3), distortion::DimensionMismatch);
    EXPECT_THROW(kCat * ExactMatrix::identity(2, 5), distortion::DiscriminantMismatch);
    EXPECT_THROW(ExactMatrix(2, std::vector<QuadScalar>(3, QuadScalar(0))), distortion::DimensionMismatch);
}
