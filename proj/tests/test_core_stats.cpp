#include "crossvar/core_stats.hpp"
#include "crossvar/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace crossvar;

namespace {

const std::vector<double> kData1X{5, 7, 5, 3, 5, 3, 3, 9};
const std::vector<double> kData1Y{8, 1, 4, 6, 6, 4, 1, 2};
const std::vector<double> kData4X{33, 31, 34, 38, 32, 28};
const std::vector<double> kData4Y{35, 42, 43, 41};

std::vector<double> normals(std::mt19937_64& gen, std::size_t n, double mu, double sd) {
    std::normal_distribution<double> d(mu, sd);
    std::vector<double> v(n);
    for (auto& x : v) x = d(gen);
    return v;
}

}  // namespace

TEST(Summarize, PrintedMoments) {
    const auto s = summarize(kData1X);
    EXPECT_EQ(s.n, 8u);
    EXPECT_NEAR(s.mean, 5.000, 5e-4);
    EXPECT_NEAR(s.variance, 4.571, 5e-4);
    const auto s9 = summarize(std::vector<double>{19, 22, 24, 24, 25, 25, 26, 26, 28, 32});
    EXPECT_NEAR(s9.mean, 25.100, 5e-4);
    EXPECT_NEAR(s9.variance, 11.878, 5e-4);
}

TEST(Summarize, ConstantSample) {
    const auto s = summarize(std::vector<double>{2.5, 2.5, 2.5});
    EXPECT_EQ(s.mean, 2.5);
    EXPECT_EQ(s.variance, 0.0);
}

TEST(Summarize, StableForLargeOffset) {
    const auto s = summarize(std::vector<double>{1e9 + 4, 1e9 + 7, 1e9 + 13, 1e9 + 16});
    EXPECT_NEAR(s.variance, 30.0, 1e-6);
}

TEST(Sample, RejectsTooFewOrNonFinite) {
    EXPECT_THROW(Sample({1.0}), DegenerateSampleError);
    EXPECT_THROW(Sample({}), DegenerateSampleError);
    EXPECT_THROW(Sample({1.0, NAN}), DegenerateSampleError);
    EXPECT_THROW(summarize(std::vector<double>{3.0}), DegenerateSampleError);
}

TEST(CrossVariance, Examples) {
    EXPECT_NEAR(cross_variance(kData1X, 4.0), 32.0 / 7.0 + 8.0 / 7.0, 1e-12);
    const Sample x(kData1X);
    EXPECT_NEAR(cross_variance(x, x.mean()), x.variance(), 1e-14);
    EXPECT_NEAR(cross_variance(std::vector<double>{0, 2}, 3.0), 10.0, 1e-14);
}

TEST(CrossVariance, ShiftIdentity) {
    std::mt19937_64 gen(3);
    std::uniform_int_distribution<int> size(2, 40);
    std::uniform_real_distribution<double> loc(-50.0, 50.0);
    for (int i = 0; i < 10000; ++i) {
        const Sample x(normals(gen, size(gen), loc(gen), 3.0));
        const double ybar = loc(gen);
        const double m = static_cast<double>(x.size());
        const double d = ybar - x.mean();
        const double expected = x.variance() + m * d * d / (m - 1.0);
        EXPECT_NEAR(cross_variance(x, ybar) / expected, 1.0, 1e-10);
    }
}

TEST(StatisticT, Data1) {
    const auto b = statistic_T(Sample(kData1X), Sample(kData1Y));
    // Direct sums: Vx = 32/7, Vy = 46/7, d = -1, so Vx* = Vx + 8/7 and Vy* = Vy + 8/7.
    const double vx = 32.0 / 7.0, vy = 46.0 / 7.0, shift = 8.0 / 7.0;
    EXPECT_NEAR(b.z1, vx / (2.0 * (vx + shift)), 1e-14);
    EXPECT_NEAR(b.z2, vy / (2.0 * (vy + shift)), 1e-14);
    EXPECT_NEAR(b.z1, 0.4000, 5e-5);
    EXPECT_NEAR(b.z2, 0.4259, 5e-5);
    EXPECT_NEAR(b.t, 0.8259, 5e-5);
    EXPECT_EQ(b.t, b.z1 + b.z2);
    EXPECT_GE(b.vx_star, b.vx);
    EXPECT_GE(b.vy_star, b.vy);
}

TEST(StatisticT, EqualMeansGiveOne) {
    const std::vector<double> x{1, 4, 2, 9};
    const std::vector<double> y{9, 2, 4, 1};
    const auto b = statistic_T(Sample(x), Sample(y));
    EXPECT_DOUBLE_EQ(b.z1, 0.5);
    EXPECT_DOUBLE_EQ(b.z2, 0.5);
    EXPECT_DOUBLE_EQ(b.t, 1.0);
}

TEST(StatisticT, ZeroVarianceCases) {
    const auto b = statistic_T(Sample({3, 3, 3}), Sample({1, 5, 6}));
    EXPECT_EQ(b.z1, 0.0);
    EXPECT_GT(b.z2, 0.0);
    EXPECT_THROW(statistic_T(Sample({4, 4, 4}), Sample({3, 5, 4})), DegenerateSampleError);
}

TEST(StatisticT, RangeOnRandomSamples) {
    std::mt19937_64 gen(5);
    for (int i = 0; i < 2000; ++i) {
        const auto b = statistic_T(Sample(normals(gen, 6, 0, 1)), Sample(normals(gen, 6, 0.5, 2)));
        EXPECT_GT(b.z1, 0.0);
        EXPECT_LE(b.z1, 0.5);
        EXPECT_GT(b.z2, 0.0);
        EXPECT_LE(b.z2, 0.5);
        EXPECT_GT(b.t, 0.0);
        EXPECT_LE(b.t, 1.0);
    }
}

TEST(StatisticTstar, Examples) {
    const Sample x(kData1X);
    EXPECT_DOUBLE_EQ(statistic_Tstar(x, x), 1.0);
    EXPECT_NEAR(statistic_Tstar(x, Sample(kData1Y)), 0.8298, 5e-5);
    EXPECT_NEAR(statistic_Tstar(Sample(kData4X), Sample(kData4Y), NPolicy::Average), 0.1430, 5e-5);
}

TEST(StatisticTstar, UnequalSizesNeedPolicy) {
    EXPECT_THROW(statistic_Tstar(Sample(kData4X), Sample(kData4Y)), ConfigError);
    EXPECT_EQ(effective_n(6, 4, NPolicy::Min), 4.0);
    EXPECT_EQ(effective_n(6, 4, NPolicy::Max), 6.0);
    EXPECT_EQ(effective_n(6, 4, NPolicy::Average), 5.0);
    EXPECT_EQ(effective_n(7, 4, NPolicy::Average), 5.5);
    EXPECT_EQ(effective_n(5, 5, std::nullopt), 5.0);
}

TEST(StatisticTstar, DegenerateWhenNoSpreadAndNoShift) {
    EXPECT_THROW(statistic_Tstar(Sample({2, 2}), Sample({2, 2})), DegenerateSampleError);
    EXPECT_EQ(statistic_Tstar(Sample({2, 2}), Sample({3, 3})), 0.0);
}

TEST(StatisticTstar, ShiftAndExchangeInvariance) {
    std::mt19937_64 gen(9);
    for (int i = 0; i < 500; ++i) {
        auto xs = normals(gen, 7, 1.0, 2.0);
        auto ys = normals(gen, 7, 2.0, 2.0);
        const double base = statistic_Tstar(Sample(xs), Sample(ys));
        EXPECT_NEAR(statistic_Tstar(Sample(ys), Sample(xs)), base, 1e-14);
        for (auto& v : xs) v += 123.25;
        for (auto& v : ys) v += 123.25;
        EXPECT_NEAR(statistic_Tstar(Sample(xs), Sample(ys)), base, 1e-9);
    }
}

TEST(StatisticJ, Examples) {
    EXPECT_EQ(statistic_J(1.0, 9.0), 0.0);
    EXPECT_NEAR(statistic_J(0.5, 5.0), 2.0, 1e-15);
    const double tstar = statistic_Tstar(Sample(kData4X), Sample(kData4Y), NPolicy::Average);
    EXPECT_NEAR(statistic_J(tstar, 5.0), 4.897, 5e-4);
    EXPECT_THROW(statistic_J(0.0, 5.0), DomainError);
    EXPECT_THROW(statistic_J(1.2, 5.0), DomainError);
    EXPECT_THROW(statistic_J(0.5, 1.0), DomainError);
}

TEST(StatisticJ, SquaredEqualsTwicePooledTSquared) {
    std::mt19937_64 gen(21);
    for (int i = 0; i < 5000; ++i) {
        const std::size_t n = 2 + i % 30;
        const Sample x(normals(gen, n, 0.0, 1.0));
        const Sample y(normals(gen, n, 0.3, 1.0));
        const double sp2 = (x.variance() + y.variance()) / 2.0;
        const double t = (x.mean() - y.mean()) / std::sqrt(sp2 * 2.0 / n);
        const double j = statistic_J(x, y);
        EXPECT_NEAR(j * j / (2.0 * t * t), 1.0, 1e-10);
        // The T* route loses relative accuracy as T* -> 1; compare it where 1 - T* is not tiny.
        const double tstar = statistic_Tstar(x, y);
        if (1.0 - tstar > 1e-4) {
            EXPECT_NEAR(statistic_J(tstar, static_cast<double>(n)) / j, 1.0, 1e-10);
        }
    }
}

TEST(StatisticJ, SampleOverloadMatchesTstarRoute) {
    const Sample x(kData4X), y(kData4Y);
    const double tstar = statistic_Tstar(x, y, NPolicy::Average);
    EXPECT_NEAR(statistic_J(x, y, NPolicy::Average), statistic_J(tstar, 5.0), 1e-12);
    EXPECT_THROW(statistic_J(x, y), ConfigError);
    EXPECT_THROW(statistic_J(Sample({2, 2}), Sample({3, 3})), DegenerateSampleError);
}

TEST(NPolicy, ParseAndPrint) {
    EXPECT_EQ(parse_n_policy("min"), NPolicy::Min);
    EXPECT_EQ(parse_n_policy("max"), NPolicy::Max);
    EXPECT_EQ(parse_n_policy("avg"), NPolicy::Average);
    EXPECT_EQ(parse_n_policy("average"), NPolicy::Average);
    EXPECT_THROW(parse_n_policy("median"), ConfigError);
    EXPECT_EQ(to_string(NPolicy::Average), "avg");
}
