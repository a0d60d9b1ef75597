#include "crossvar/tstar_dist.hpp"

#include "crossvar/errors.hpp"
#include "crossvar/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace crossvar::tstar {
namespace {

using Wide = __float128;

const double kLog4 = 2.0 * std::numbers::ln2;

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

// c_j t^j with c_j = (1/2)_j / j!, truncated once the term drops below 1e-36.
std::vector<Wide> half_rising_powers(Wide t) {
    std::vector<Wide> out;
    Wide c = 1;
    while (true) {
        out.push_back(c);
        const std::size_t j = out.size() - 1;
        c = c * t * (static_cast<Wide>(j) + Wide(0.5)) / static_cast<Wide>(j + 1);
        if (c < Wide(1e-36) || out.size() > 4096) break;
    }
    return out;
}

// t^{-(a+k)} * int_0^t s^{a+k-1} (1 - s)^{-1/2} ds.
class ScaledIncompleteBeta {
public:
    ScaledIncompleteBeta(double t, double a) : t_(t), a_(a) {
        if (t <= 0.5) powers_ = half_rising_powers(static_cast<Wide>(t));
    }

    Wide operator()(std::size_t k) const {
        const double shape = a_ + static_cast<double>(k);
        if (!powers_.empty()) {
            Wide sum = 0;
            const Wide base = static_cast<Wide>(shape);
            for (std::size_t j = 0; j < powers_.size(); ++j) {
                sum += powers_[j] / (base + static_cast<Wide>(j));
            }
            return sum;
        }
        // Only reached in the divergent regime t > 1/2; double precision suffices there.
        const double ib = special::reg_inc_beta(t_, shape, 0.5);
        return static_cast<Wide>(
            std::exp(special::log_beta(shape, 0.5) - shape * std::log(t_)) * ib);
    }

private:
    double t_;
    double a_;
    std::vector<Wide> powers_;
};

void require_unit_open(double t, const char* fn) {
    if (!(t > 0.0 && t < 1.0)) throw DomainError(std::string(fn) + ": t must lie in (0, 1)");
}

void require_unit_closed(double t, const char* fn) {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError(std::string(fn) + ": t must lie in [0, 1]");
}

}  // namespace

TstarModel::TstarModel(double n) : n_(n) {
    if (!(n > 1.0) || !std::isfinite(n)) {
        throw DomainError("TstarModel: n must be a finite number greater than 1");
    }
    log_beta_ = special::log_beta(0.5, n - 1.0);
}

double g_pdf(double g, const TstarModel& model) {
    if (!(g > 0.0)) throw DomainError("g_pdf: g must be positive");
    if (std::isinf(g)) return 0.0;
    return std::exp(-0.5 * std::log(g) - model.log_beta() - (model.n() - 0.5) * std::log1p(g));
}

double y_pdf(double y, const TstarModel& model) {
    if (!(y >= 1.0)) throw DomainError("y_pdf: y must be at least 1");
    if (y == 1.0) return std::numeric_limits<double>::infinity();
    if (std::isinf(y)) return 0.0;
    const double n = model.n();
    return std::exp((n - 1.0) * kLog4 - 0.5 * std::log(y - 1.0) - model.log_beta() -
                    (n - 0.5) * std::log(y + 3.0));
}

double tstar_pdf(double t, const TstarModel& model) {
    require_unit_open(t, "tstar_pdf");
    const double n = model.n();
    return std::exp((n - 1.0) * kLog4 + (n - 2.0) * std::log(t) - 0.5 * std::log1p(-t) -
                    model.log_beta() - (n - 0.5) * std::log1p(3.0 * t));
}

double tstar_cdf(double t, const TstarModel& model) {
    require_unit_closed(t, "tstar_cdf");
    if (t == 0.0) return 0.0;
    if (t == 1.0) return 1.0;
    const double denom = 1.0 + 3.0 * t;
    return special::reg_inc_beta(4.0 * t / denom, (1.0 - t) / denom, model.n() - 1.0, 0.5);
}

SeriesSum tstar_cdf_series(double t, const TstarModel& model, SeriesControl ctl) {
    require_unit_closed(t, "tstar_cdf_series");
    if (!(ctl.abs_tol > 0.0) || ctl.max_terms < 1) {
        throw ConfigError("tstar_cdf_series: abs_tol must be positive and max_terms >= 1");
    }
    if (t == 0.0) return SeriesSum{0.0, 1};

    const double n = model.n();
    const double a = n - 1.0;
    // 4^{n-1} t^{n-1} / B(1/2, n-1): common factor of every term.
    const double prefactor = std::exp(a * (kLog4 + std::log(t)) - model.log_beta());
    const ScaledIncompleteBeta inner(t, a);
    const Wide ratio = -3 * static_cast<Wide>(t);

    Wide sum = 0;
    Wide coeff = 1;  // (-3t)^k binom(n - 3/2 + k, k)
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < ctl.max_terms; ++k) {
        const Wide term = coeff * inner(k);
        sum += term;
        const double magnitude = prefactor * static_cast<double>(wide_abs(term));
        if (!std::isfinite(magnitude)) {
            throw NonConvergenceError("tstar_cdf_series: terms overflowed (t >= 1/3 diverges)",
                                      prefactor * static_cast<double>(sum), k + 1);
        }
        if (k > 0 && magnitude < ctl.abs_tol && magnitude <= previous) {
            return SeriesSum{prefactor * static_cast<double>(sum), k + 1};
        }
        previous = magnitude;
        coeff *= ratio * (static_cast<Wide>(n - 0.5) + static_cast<Wide>(k)) /
                 static_cast<Wide>(k + 1);
    }
    throw NonConvergenceError(
        "tstar_cdf_series: no convergence within " + std::to_string(ctl.max_terms) + " terms",
        prefactor * static_cast<double>(sum), ctl.max_terms);
}

double tstar_quantile(double p, const TstarModel& model) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("tstar_quantile: p must lie in (0, 1)");
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (tstar_cdf(mid, model) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double f_lo = tstar_cdf(lo, model);
    const double f_hi = tstar_cdf(hi, model);
    return (p - f_lo <= f_hi - p) ? lo : hi;
}

}  // namespace crossvar::tstar
