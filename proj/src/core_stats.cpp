#include "crossvar/core_stats.hpp"

#include "crossvar/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace crossvar {
namespace {

void require_sample(std::span<const double> values) {
    if (values.size() < 2) {
        throw DegenerateSampleError("sample needs at least 2 observations, got " +
                                    std::to_string(values.size()));
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw DegenerateSampleError("sample value at index " + std::to_string(i) +
                                        " is not finite");
        }
    }
}

double mean_of(std::span<const double> values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

double centered_sum_of_squares(std::span<const double> values, double center) {
    double ss = 0.0;
    double comp = 0.0;  // corrected two-pass: removes the rounding error of center
    for (double v : values) {
        const double d = v - center;
        ss += d * d;
        comp += d;
    }
    return ss - comp * comp / static_cast<double>(values.size());
}

}  // namespace

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    const MomentSummary m = summarize(values_);
    mean_ = m.mean;
    variance_ = m.variance;
}

std::string_view to_string(NPolicy policy) {
    switch (policy) {
        case NPolicy::Min: return "min";
        case NPolicy::Max: return "max";
        case NPolicy::Average: return "avg";
    }
    return "?";
}

NPolicy parse_n_policy(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "min") return NPolicy::Min;
    if (lower == "max") return NPolicy::Max;
    if (lower == "avg" || lower == "average") return NPolicy::Average;
    throw ConfigError("unknown n-policy '" + std::string(text) + "' (expected min, max or avg)");
}

double effective_n(std::size_t n1, std::size_t n2, std::optional<NPolicy> policy) {
    const double a = static_cast<double>(n1);
    const double b = static_cast<double>(n2);
    if (!policy) {
        if (n1 != n2) {
            throw ConfigError("group sizes differ (" + std::to_string(n1) + " vs " +
                              std::to_string(n2) + "); choose an n-policy (min, max or avg)");
        }
        return a;
    }
    switch (*policy) {
        case NPolicy::Min: return std::min(a, b);
        case NPolicy::Max: return std::max(a, b);
        case NPolicy::Average: return 0.5 * (a + b);
    }
    return std::max(a, b);
}

MomentSummary summarize(std::span<const double> values) {
    require_sample(values);
    MomentSummary out;
    out.n = values.size();
    out.mean = mean_of(values);
    out.variance = std::max(0.0, centered_sum_of_squares(values, out.mean)) /
                   static_cast<double>(out.n - 1);
    return out;
}

MomentSummary summarize(const Sample& sample) {
    return MomentSummary{sample.size(), sample.mean(), sample.variance()};
}

double cross_variance(std::span<const double> values, double other_mean) {
    require_sample(values);
    if (!std::isfinite(other_mean)) throw DomainError("cross_variance: other_mean must be finite");
    double ss = 0.0;
    for (double v : values) {
        const double d = v - other_mean;
        ss += d * d;
    }
    return ss / static_cast<double>(values.size() - 1);
}

double cross_variance(const Sample& sample, double other_mean) {
    return cross_variance(sample.values(), other_mean);
}

CrossVarianceBreakdown statistic_T(const Sample& x, const Sample& y) {
    CrossVarianceBreakdown out;
    out.vx = x.variance();
    out.vy = y.variance();
    out.vx_star = cross_variance(x, y.mean());
    out.vy_star = cross_variance(y, x.mean());

    // vx_star = 0 forces vx = 0 and xbar = ybar: the ratio is 0/0.
    if (out.vx_star == 0.0 || out.vy_star == 0.0) {
        throw DegenerateSampleError(
            "statistic_T: a group has zero variance and the means coincide (0/0)");
    }
    out.z1 = out.vx / (2.0 * out.vx_star);
    out.z2 = out.vy / (2.0 * out.vy_star);
    out.t = out.z1 + out.z2;
    return out;
}

double statistic_Tstar(double vx, double vy, double mean_diff, double n) {
    if (!(n > 1.0)) throw DomainError("statistic_Tstar: effective n must exceed 1");
    const double pooled = 0.5 * (vx + vy);
    const double gap = n * mean_diff * mean_diff / (n - 1.0);
    if (pooled == 0.0 && gap == 0.0) {
        throw DegenerateSampleError("statistic_Tstar: pooled variance and mean difference are both 0");
    }
    return pooled / (pooled + gap);
}

double statistic_Tstar(const Sample& x, const Sample& y, std::optional<NPolicy> policy) {
    const double n = effective_n(x.size(), y.size(), policy);
    return statistic_Tstar(x.variance(), y.variance(), y.mean() - x.mean(), n);
}

double statistic_J(double tstar, double n) {
    if (!(tstar > 0.0 && tstar <= 1.0)) throw DomainError("statistic_J: T* must lie in (0, 1]");
    if (!(n > 1.0)) throw DomainError("statistic_J: n must exceed 1");
    return std::sqrt((n - 1.0) * (1.0 - tstar) / tstar);
}

double statistic_J(const Sample& x, const Sample& y, std::optional<NPolicy> policy) {
    const double n = effective_n(x.size(), y.size(), policy);
    const double pooled = 0.5 * (x.variance() + y.variance());
    if (pooled == 0.0) throw DegenerateSampleError("statistic_J: pooled variance is 0");
    const double d = y.mean() - x.mean();
    return std::sqrt(n * d * d / pooled);
}

}  // namespace crossvar
