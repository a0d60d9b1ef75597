#include "crossvar/datasets.hpp"
#include "crossvar/errors.hpp"
#include "crossvar/hypothesis_tests.hpp"

#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace crossvar;

namespace {

Sample sx(const char* name) { return Sample(data::find(name).x); }
Sample sy(const char* name) { return Sample(data::find(name).y); }

// Two-sided pooled t p-value from Boost.
double boost_t_p(const Sample& x, const Sample& y) {
    const double n1 = x.size(), n2 = y.size();
    const double sp2 = ((n1 - 1) * x.variance() + (n2 - 1) * y.variance()) / (n1 + n2 - 2);
    const double t = (x.mean() - y.mean()) / std::sqrt(sp2 * (1 / n1 + 1 / n2));
    boost::math::students_t dist(n1 + n2 - 2);
    return 2 * boost::math::cdf(complement(dist, std::abs(t)));
}

std::vector<double> normals(std::mt19937_64& gen, std::size_t n, double mu, double sd) {
    std::normal_distribution<double> d(mu, sd);
    std::vector<double> v(n);
    for (auto& x : v) x = d(gen);
    return v;
}

}  // namespace

TEST(Decide, StrictInequality) {
    EXPECT_EQ(decide(0.0099, 0.01), Decision::Reject);
    EXPECT_EQ(decide(0.01, 0.01), Decision::Accept);
    EXPECT_EQ(decide(0.0101, 0.01), Decision::Accept);
}

TEST(CrossvarTest, PrintedExamples) {
    const auto d1 = crossvar_test(sx("ds1"), sy("ds1"), 0.01);
    EXPECT_NEAR(d1.p_value, 0.411, 5e-4);
    EXPECT_EQ(d1.decision, Decision::Accept);
    EXPECT_EQ(d1.method, Method::CrossVariance);
    EXPECT_DOUBLE_EQ(d1.df.first, 14.0);
    EXPECT_DOUBLE_EQ(*d1.effective_n, 8.0);

    const auto d5 = crossvar_test(sx("ds5"), sy("ds5"), 0.01);
    EXPECT_NEAR(d5.p_value, 0.001, 5e-4);
    EXPECT_EQ(d5.decision, Decision::Reject);

    const auto mx = crossvar_test(sx("ds4"), sy("ds4"), 0.01, NPolicy::Max);
    EXPECT_NEAR(mx.p_value, 0.004, 5e-4);
    EXPECT_EQ(mx.decision, Decision::Reject);
    EXPECT_EQ(mx.n_policy_used, NPolicy::Max);
    const auto mn = crossvar_test(sx("ds4"), sy("ds4"), 0.01, NPolicy::Min);
    EXPECT_NEAR(mn.p_value, 0.021, 5e-4);
    EXPECT_EQ(mn.decision, Decision::Accept);
    const auto av = crossvar_test(sx("ds4"), sy("ds4"), 0.01, NPolicy::Average);
    EXPECT_NEAR(av.p_value, 0.009, 5e-4);
    EXPECT_DOUBLE_EQ(av.df.first, 8.0);
}

TEST(CrossvarTest, Errors) {
    EXPECT_THROW(crossvar_test(sx("ds4"), sy("ds4"), 0.01), ConfigError);
    EXPECT_THROW(crossvar_test(Sample({1, 1}), Sample({1, 1}), 0.01), DegenerateSampleError);
    EXPECT_THROW(crossvar_test(sx("ds1"), sy("ds1"), 1.5), ConfigError);
}

TEST(PooledTTest, PrintedExamplesAndBoostOracle) {
    const auto d1 = pooled_t_test(sx("ds1"), sy("ds1"), 0.01);
    EXPECT_NEAR(d1.p_value, 0.411, 5e-4);
    EXPECT_EQ(d1.decision, Decision::Accept);
    const auto d9 = pooled_t_test(sx("ds9"), sy("ds9"), 0.01);
    EXPECT_NEAR(d9.p_value, 0.229, 5e-4);
    const auto d4 = pooled_t_test(sx("ds4"), sy("ds4"), 0.01);
    EXPECT_NEAR(d4.p_value, 0.009, 5e-4);
    EXPECT_EQ(d4.decision, Decision::Reject);
    EXPECT_DOUBLE_EQ(d4.df.first, 8.0);
    for (const auto& d : data::catalog()) {
        const Sample x(d.x), y(d.y);
        EXPECT_NEAR(pooled_t_test(x, y, 0.05).p_value, boost_t_p(x, y), 1e-12) << d.name;
    }
    EXPECT_THROW(pooled_t_test(Sample({2, 2}), Sample({2, 2}), 0.05), DegenerateSampleError);
}

TEST(FVarianceTest, PrintedDecisionsAndBoostOracle) {
    EXPECT_EQ(f_variance_test(sx("ds13"), sy("ds13")).decision, Decision::Reject);
    EXPECT_EQ(f_variance_test(sx("ds1"), sy("ds1")).decision, Decision::Accept);
    for (const auto& d : data::catalog()) {
        const Sample x(d.x), y(d.y);
        const auto r = f_variance_test(x, y, 0.05);
        boost::math::fisher_f dist(x.size() - 1.0, y.size() - 1.0);
        const double lo = boost::math::cdf(dist, r.statistic);
        EXPECT_NEAR(r.p_value, std::min(1.0, 2 * std::min(lo, 1 - lo)), 1e-12) << d.name;
    }
}

TEST(FVarianceTest, SameSampleTwice) {
    const auto r = f_variance_test(sx("ds3"), sx("ds3"));
    EXPECT_DOUBLE_EQ(r.statistic, 1.0);
    EXPECT_NEAR(r.p_value, 1.0, 1e-12);
    EXPECT_EQ(r.decision, Decision::Accept);
    EXPECT_THROW(f_variance_test(Sample({1, 1}), sx("ds3")), DegenerateSampleError);
}

TEST(Equivalence, EqualSizePValuesCoincide) {
    std::mt19937_64 gen(404);
    for (int i = 0; i < 10000; ++i) {
        const std::size_t n = 2 + i % 60;
        const Sample x(normals(gen, n, 0.0, 1.5));
        const Sample y(normals(gen, n, (i % 7) * 0.2, 1.5));
        EXPECT_NEAR(crossvar_test(x, y, 0.05).p_value, pooled_t_test(x, y, 0.05).p_value, 1e-9);
    }
}

TEST(Equivalence, LocationAndScaleInvariance) {
    std::mt19937_64 gen(405);
    for (int i = 0; i < 300; ++i) {
        auto xs = normals(gen, 9, 1.0, 1.0);
        auto ys = normals(gen, 9, 1.7, 1.0);
        const double p = crossvar_test(Sample(xs), Sample(ys), 0.05).p_value;
        for (auto& v : xs) v = 3.5 * v - 40.0;
        for (auto& v : ys) v = 3.5 * v - 40.0;
        EXPECT_NEAR(crossvar_test(Sample(xs), Sample(ys), 0.05).p_value, p, 1e-10);
    }
}

TEST(Names, Tags) {
    EXPECT_EQ(to_string(Method::CrossVariance), "CROSSVAR");
    EXPECT_EQ(to_string(Method::PooledT), "POOLED_T");
    EXPECT_EQ(to_string(Method::FVariance), "F_VARIANCE");
    EXPECT_EQ(to_string(Decision::Reject), "REJECT");
}
