#pragma once

// Sample moments, cross-variances and the cross-variance statistics T, T* and J.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace crossvar {

/// One group's observations. Holds at least two finite values.
class Sample {
public:
    explicit Sample(std::vector<double> values);

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double mean() const noexcept { return mean_; }
    /// Unbiased variance (divisor n - 1).
    double variance() const noexcept { return variance_; }

private:
    std::vector<double> values_;
    double mean_ = 0.0;
    double variance_ = 0.0;
};

struct MomentSummary {
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0;
};

/// Per-group ingredients of T = Z1 + Z2.
struct CrossVarianceBreakdown {
    double vx = 0.0;
    double vy = 0.0;
    double vx_star = 0.0;  // sum (x_i - ybar)^2 / (m - 1)
    double vy_star = 0.0;  // sum (y_j - xbar)^2 / (n - 1)
    double z1 = 0.0;       // vx / (2 vx_star)
    double z2 = 0.0;       // vy / (2 vy_star)
    double t = 0.0;        // z1 + z2
};

/// Effective per-group size used by T* when the two groups differ in size.
enum class NPolicy { Min, Max, Average };

std::string_view to_string(NPolicy policy);
NPolicy parse_n_policy(std::string_view text);  // "min" | "max" | "avg" | "average"

/// Effective n for T*. Unequal sizes need an explicit policy (ConfigError otherwise).
double effective_n(std::size_t n1, std::size_t n2, std::optional<NPolicy> policy);

/// Two-pass mean and unbiased variance. Throws DegenerateSampleError for n < 2.
MomentSummary summarize(std::span<const double> values);
MomentSummary summarize(const Sample& sample);

/// sum (x_i - other_mean)^2 / (n - 1).
double cross_variance(std::span<const double> values, double other_mean);
double cross_variance(const Sample& sample, double other_mean);

CrossVarianceBreakdown statistic_T(const Sample& x, const Sample& y);

/// T* = Sp^2 / (Sp^2 + n d^2 / (n - 1)) with Sp^2 = (Vx + Vy)/2 and d = ybar - xbar.
double statistic_Tstar(const Sample& x, const Sample& y,
                       std::optional<NPolicy> policy = std::nullopt);

/// T* from summary moments; n is the effective per-group size.
double statistic_Tstar(double vx, double vy, double mean_diff, double n);

/// J = sqrt((n - 1)(1/T* - 1)).
double statistic_J(double tstar, double n);

/// J from the samples as sqrt(n d^2 / Sp^2); avoids the cancellation in 1/T* - 1 near T* = 1.
double statistic_J(const Sample& x, const Sample& y,
                   std::optional<NPolicy> policy = std::nullopt);

}  // namespace crossvar
