#pragma once

// Null distribution of the equal-variance statistic
//
//   T* = U / (U + 4V),   U ~ chi2_{2(n-1)},  V ~ chi2_1,
//
// together with the intermediate ratio G = V / U (beta of the second kind,
// parameters 1/2 and n - 1) and Y = 1 + 4G = 1 / T*.
//
// The production cdf is the closed form F(t) = I_{4t/(1+3t)}(n - 1, 1/2).
// tstar_cdf_series expands (1 + 3t)^{-(n-1/2)} binomially and integrates term
// by term; it converges only for t < 1/3 and exists for cross-validation.
// Fractional n is accepted everywhere.

#include <cstddef>

namespace crossvar::tstar {

class TstarModel {
public:
    /// n is the effective per-group size; must exceed 1.
    explicit TstarModel(double n);

    double n() const noexcept { return n_; }
    /// Degrees of freedom of the matching pooled t statistic, 2(n - 1).
    double df() const noexcept { return 2.0 * (n_ - 1.0); }
    /// ln B(1/2, n - 1).
    double log_beta() const noexcept { return log_beta_; }

private:
    double n_;
    double log_beta_;
};

struct SeriesControl {
    double abs_tol = 1e-10;
    std::size_t max_terms = 10'000;
};

struct SeriesSum {
    double value = 0.0;
    std::size_t terms_used = 0;
};

/// Density of G = V/U: g^{-1/2} / (B(1/2, n-1) (1+g)^{n-1/2}), g > 0.
double g_pdf(double g, const TstarModel& model);

/// Density of Y = 1 + 4G on y >= 1 (+inf at y = 1).
double y_pdf(double y, const TstarModel& model);

/// Density of T* on (0, 1); integrable (1 - t)^{-1/2} singularity at t = 1.
double tstar_pdf(double t, const TstarModel& model);

/// Exact cdf of T* on [0, 1].
double tstar_cdf(double t, const TstarModel& model);

/// Term-by-term binomial series for the cdf.
///
/// Terms are accumulated in 128-bit floating point because the alternating
/// terms peak many orders of magnitude above the result as t approaches 1/3.
/// Stops once a term past the peak falls below ctl.abs_tol (alternating-tail
/// bound). Throws NonConvergenceError after ctl.max_terms terms, which is the
/// expected outcome for t >= 1/3.
SeriesSum tstar_cdf_series(double t, const TstarModel& model, SeriesControl ctl = {});

/// t with tstar_cdf(t) = p, by bisection on the monotone cdf.
double tstar_quantile(double p, const TstarModel& model);

}  // namespace crossvar::tstar
