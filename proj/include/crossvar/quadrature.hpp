#pragma once

#include <cstddef>
#include <functional>

namespace crossvar::numeric {

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;  // difference between the last two refinement levels
};

/// Tanh-sinh integration of f over [a, b].
///
/// Halves the step until successive estimates agree to rel_tol times the L1
/// norm of the integrand or max_refinements levels are used. Endpoints are
/// never sampled, and algebraic endpoint singularities converge at the usual
/// double-exponential rate. max_refinements is fixed by the first call on a thread.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = 1e-12, std::size_t max_refinements = 15);

}  // namespace crossvar::numeric
