#pragma once

// Distribution of the cross-variance statistic
//
//   T = Z1 + Z2 = U / (2U + 2abV) + S / (2S + 2bcV)
//
// for two equal-size normal samples with known variances, where
// U, S ~ chi2_{n-1} and V ~ chi2_1 are independent and
// a = 1/sigma_x^2, b = sigma_x^2 + sigma_y^2, c = 1/sigma_y^2.
//
// general_cdf_quadrature is the production evaluator. The five-fold series
// evaluators are EXPERIMENTAL: they reproduce the printed expansion term by
// term and report whether the truncated sum settled, nothing more.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace crossvar::general {

class GeneralModel {
public:
    GeneralModel(int n, double sigma_x2, double sigma_y2);

    int n() const noexcept { return n_; }
    double sigma_x2() const noexcept { return sigma_x2_; }
    double sigma_y2() const noexcept { return sigma_y2_; }
    double a() const noexcept { return 1.0 / sigma_x2_; }
    double b() const noexcept { return sigma_x2_ + sigma_y2_; }
    double c() const noexcept { return 1.0 / sigma_y2_; }
    double ab() const noexcept { return b() / sigma_x2_; }
    double bc() const noexcept { return b() / sigma_y2_; }
    /// 2(1 - ab - bc)/(bc - 1), the ratio raised to the p-th power in the series.
    double p_ratio() const noexcept { return 2.0 * (1.0 - ab() - bc()) / (bc() - 1.0); }

private:
    int n_;
    double sigma_x2_;
    double sigma_y2_;
};

/// Joint density of (Z1, Z2) on the open square (0, 1/2)^2.
double joint_pdf_z1z2(double z1, double z2, const GeneralModel& model);

struct CdfEstimate {
    double value = 0.0;
    double abs_error = 0.0;
};

/// P(T <= t): the inner integral over z2 is done in closed form (an
/// incomplete beta), the outer one by adaptive Gauss-Kronrod after the
/// substitution z1 = sin^2(theta)/2, which removes both endpoint singularities.
/// Throws QuadratureError if the error estimate exceeds 1e-6.
CdfEstimate general_cdf_quadrature_estimate(double t, const GeneralModel& model);
double general_cdf_quadrature(double t, const GeneralModel& model);

/// Which printed form of the five-fold expansion to evaluate.
enum class SeriesVariant {
    /// t^{(n-1)/2+k+l}, 2^k binom((n-1)/2+k, k), denominator (n-1)/2+k+l.
    Printed,
    /// t^{(n+1)/2+k+l}, (-2)^k binom((n+1)/2, k), denominator (n+1)/2+k+l.
    IntermediateExponents,
};

struct SeriesCaps {
    int k = 40;
    int l = 40;
    int m = 40;
    int p = 40;
    int q = 40;
    double abs_tol = 1e-8;
    SeriesVariant variant = SeriesVariant::Printed;
};

struct SeriesOutcome {
    double value = 0.0;
    bool converged = false;
    std::size_t terms_used = 0;
    /// Largest |term| among terms that sit on a truncation boundary.
    double last_shell_max = 0.0;
};

/// Bound on ln|term| beyond which the series evaluators raise SeriesOverflowError.
inline constexpr double kSeriesLogTermLimit = 700.0;

SeriesOutcome general_cdf_series(double t, const GeneralModel& model, const SeriesCaps& caps = {});

/// Term-wise t-derivative of general_cdf_series.
SeriesOutcome general_pdf_series(double t, const GeneralModel& model, const SeriesCaps& caps = {});

/// reps independent draws of T from a generator seeded with `seed`.
std::vector<double> sample_T(const GeneralModel& model, std::size_t reps, std::uint64_t seed);

}  // namespace crossvar::general
