#include "crossvar/quadrature.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace crossvar::numeric {

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, std::size_t max_refinements) {
    QuadratureResult out;
    if (a == b) return out;
    // The integrator caches abscissae lazily, so each thread keeps its own.
    thread_local boost::math::quadrature::tanh_sinh<double> ts(max_refinements);
    double l1 = 0.0;
    out.value = ts.integrate(f, a, b, rel_tol, &out.abs_error, &l1);
    return out;
}

}  // namespace crossvar::numeric
