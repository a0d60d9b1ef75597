#pragma once

// Real-valued special functions used by every distribution in the toolkit.
// All functions are pure and reentrant. Arguments outside the documented
// domain (including NaN/inf) raise crossvar::DomainError.

#include <cstdint>

namespace crossvar::special {

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// ln B(a, b), evaluated without cancellation when one or both arguments are large.
double log_beta(double a, double b);

/// B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b).
double beta_fn(double a, double b);

/// Regularized incomplete beta I_x(a, b).
double reg_inc_beta(double x, double a, double b);

/// I_x(a, b) with the complement y = 1 - x supplied by the caller.
///
/// Callers that know 1 - x more accurately than the subtraction would give
/// (e.g. x = d/(d + t^2)) pass it here to keep full relative precision in
/// both tails. Requires |x + y - 1| to be at rounding level.
double reg_inc_beta(double x, double y, double a, double b);

/// Magnitude and sign of a real number kept as (log|v|, sign) to survive
/// products whose intermediate values overflow a double.
struct SignedLog {
    double log_abs = 0.0;  // -inf when the value is exactly zero
    int sign = 1;          // -1, 0 or +1

    double value() const;
};

/// Generalized binomial coefficient prod_{i=1..k} (r - i + 1) / i.
double gen_binom(double r, std::int64_t k);

/// gen_binom in sign / log-magnitude form.
SignedLog gen_binom_log(double r, std::int64_t k);

/// Standard normal cdf.
double normal_cdf(double x);

/// P(T_df <= x) for Student's t with df > 0 degrees of freedom.
double student_t_cdf(double x, double df);

/// P(F_{d1,d2} <= x).
double f_cdf(double x, double d1, double d2);

}  // namespace crossvar::special
