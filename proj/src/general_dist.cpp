#include "crossvar/general_dist.hpp"

#include "crossvar/errors.hpp"
#include "crossvar/quadrature.hpp"
#include "crossvar/random.hpp"
#include "crossvar/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace crossvar::general {
namespace {

using special::gen_binom_log;
using special::log_beta;
using special::log_gamma;
using special::SignedLog;

constexpr double kMaxCdfError = 1e-6;

SignedLog signed_log(double v) {
    if (v == 0.0) return SignedLog{-std::numeric_limits<double>::infinity(), 0};
    return SignedLog{std::log(std::abs(v)), v > 0 ? 1 : -1};
}

// Neumaier compensated sum.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// P(Z1 <= z) from the closed-form marginal of X1 = Z1/(1 - 2 Z1).
double z1_marginal_cdf(double z, const GeneralModel& model) {
    if (z <= 0.0) return 0.0;
    if (z >= 0.5) return 1.0;
    const double p = 0.5 * (model.n() - 1);
    const double num = 2.0 * model.ab() * z;
    const double rest = 1.0 - 2.0 * z;
    return special::reg_inc_beta(num / (num + rest), rest / (num + rest), p, 0.5);
}

SeriesOutcome evaluate_series(double t, const GeneralModel& model, const SeriesCaps& caps,
                              bool derivative) {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("general series: t must lie in [0, 1]");
    if (caps.k < 1 || caps.l < 1 || caps.m < 1 || caps.p < 1 || caps.q < 1 ||
        !(caps.abs_tol > 0.0)) {
        throw ConfigError("SeriesCaps: caps must be >= 1 and abs_tol positive");
    }
    if (t == 0.0) {
        if (derivative) throw DomainError("general_pdf_series: t must lie in (0, 1)");
        return SeriesOutcome{0.0, true, 0, 0.0};
    }

    const double n = model.n();
    const double p0 = 0.5 * (n - 1.0);
    const double ab = model.ab();
    const double bc = model.bc();
    const double log_t = std::log(t);
    const bool printed = caps.variant == SeriesVariant::Printed;

    const double log_prefactor = p0 * std::log(4.0 * model.a() * model.b() * model.b() * model.c()) +
                                 log_gamma(n - 0.5) - log_gamma(0.5) - 2.0 * log_gamma(p0);

    const int K = caps.k, L = caps.l, M = caps.m, P = caps.p, Q = caps.q;

    std::vector<SignedLog> k_fac(K + 1);
    for (int k = 0; k <= K; ++k) {
        if (printed) {
            SignedLog b = gen_binom_log(p0 + k, k);
            b.log_abs += k * std::numbers::ln2;
            k_fac[k] = b;
        } else {
            SignedLog b = gen_binom_log(0.5 * (n + 1.0), k);
            b.log_abs += k * std::numbers::ln2;
            if (k % 2 == 1) b.sign = -b.sign;
            k_fac[k] = b;
        }
    }
    const SignedLog l_base = signed_log(-2.0 * (bc - 1.0));
    std::vector<SignedLog> l_fac(L + 1);
    for (int l = 0; l <= L; ++l) {
        SignedLog b = gen_binom_log(n - 1.5 + l, l);
        b.log_abs += l * l_base.log_abs;
        if (l % 2 == 1) b.sign *= l_base.sign;
        l_fac[l] = b;
    }
    std::vector<SignedLog> m_fac(M + 1);
    for (int m = 0; m <= M; ++m) {
        SignedLog b = gen_binom_log(0.5 * n, m);
        b.log_abs += m * std::numbers::ln2;
        if (m % 2 == 1) b.sign = -b.sign;
        m_fac[m] = b;
    }
    const SignedLog rho = signed_log(model.p_ratio());
    const SignedLog q_base = signed_log(-2.0 * (1.0 - ab));
    // binom(n + l + q - 3/2, q) (-2(1 - ab))^q, indexed [l][q]
    std::vector<std::vector<SignedLog>> q_fac(L + 1, std::vector<SignedLog>(Q + 1));
    for (int l = 0; l <= L; ++l) {
        for (int q = 0; q <= Q; ++q) {
            SignedLog b = gen_binom_log(n + l + q - 1.5, q);
            if (q > 0) {
                if (q_base.sign == 0) {
                    b = SignedLog{-std::numeric_limits<double>::infinity(), 0};
                } else {
                    b.log_abs += q * q_base.log_abs;
                    if (q % 2 == 1) b.sign *= q_base.sign;
                }
            }
            q_fac[l][q] = b;
        }
    }
    std::vector<std::vector<double>> log_binom_lp(L + 1);
    for (int l = 0; l <= L; ++l) {
        for (int p = 0; p <= std::min(l, P); ++p) log_binom_lp[l].push_back(gen_binom_log(l, p).log_abs);
    }
    // ln B(p0 + r, (n+1)/2 + s), r = m + p + q, s = k + l
    const int R = M + P + Q;
    const int S = K + L;
    std::vector<double> log_beta_table(static_cast<std::size_t>(R + 1) * (S + 1));
    for (int r = 0; r <= R; ++r) {
        for (int s = 0; s <= S; ++s) {
            log_beta_table[static_cast<std::size_t>(r) * (S + 1) + s] =
                log_beta(p0 + r, 0.5 * (n + 1.0) + s);
        }
    }

    const double t_base = printed ? 0.0 : 1.0;  // t-exponent is t_base + k + l - (m + p + q)
    const double den_base = printed ? p0 : 0.5 * (n + 1.0);

    CompensatedSum sum;
    double shell_max = 0.0;
    std::size_t terms = 0;
    for (int k = 0; k <= K; ++k) {
        if (k_fac[k].sign == 0) continue;
        for (int l = 0; l <= L; ++l) {
            if (l_fac[l].sign == 0) continue;
            const double log_kl = log_prefactor + k_fac[k].log_abs + l_fac[l].log_abs -
                                  std::log(den_base + k + l);
            const int sign_kl = k_fac[k].sign * l_fac[l].sign;
            const bool edge_kl = (k == K) || (l == L);
            const int p_max = std::min(l, P);
            for (int m = 0; m <= M; ++m) {
                if (m_fac[m].sign == 0) continue;
                for (int p = 0; p <= p_max; ++p) {
                    const double log_klmp =
                        log_kl + m_fac[m].log_abs + p * rho.log_abs + log_binom_lp[l][p];
                    int sign_klmp = sign_kl * m_fac[m].sign;
                    if (p % 2 == 1) sign_klmp *= rho.sign;
                    const bool edge_klmp = edge_kl || (m == M) || (p == P && P < l);
                    for (int q = 0; q <= Q; ++q) {
                        const SignedLog& qf = q_fac[l][q];
                        if (qf.sign == 0) continue;
                        const int r = m + p + q;
                        const double exponent = t_base + (k + l) - r;
                        double log_term = log_klmp + qf.log_abs +
                                          log_beta_table[static_cast<std::size_t>(r) * (S + 1) + k + l] +
                                          exponent * log_t;
                        int sign = sign_klmp * qf.sign;
                        if (derivative) {
                            if (exponent == 0.0) continue;
                            log_term += std::log(std::abs(exponent)) - log_t;
                            if (exponent < 0.0) sign = -sign;
                        }
                        if (log_term > kSeriesLogTermLimit) {
                            throw SeriesOverflowError(
                                "general series: term magnitude exp(" + std::to_string(log_term) +
                                    ") exceeds the safety bound",
                                log_term);
                        }
                        const double magnitude = std::exp(log_term);
                        sum.add(sign * magnitude);
                        ++terms;
                        if (edge_klmp || q == Q) shell_max = std::max(shell_max, magnitude);
                    }
                }
            }
        }
    }
    SeriesOutcome out;
    out.value = sum.value();
    out.terms_used = terms;
    out.last_shell_max = shell_max;
    out.converged = shell_max < caps.abs_tol && std::isfinite(out.value);
    return out;
}

}  // namespace

GeneralModel::GeneralModel(int n, double sigma_x2, double sigma_y2)
    : n_(n), sigma_x2_(sigma_x2), sigma_y2_(sigma_y2) {
    if (n < 2) throw DomainError("GeneralModel: n must be at least 2");
    if (!(sigma_x2 > 0.0) || !(sigma_y2 > 0.0) || !std::isfinite(sigma_x2) ||
        !std::isfinite(sigma_y2)) {
        throw DomainError("GeneralModel: variances must be positive and finite");
    }
}

double joint_pdf_z1z2(double z1, double z2, const GeneralModel& model) {
    if (!(z1 > 0.0 && z1 < 0.5 && z2 > 0.0 && z2 < 0.5)) {
        throw DomainError("joint_pdf_z1z2: (z1, z2) must lie in the open square (0, 1/2)^2");
    }
    const double n = model.n();
    const double p = 0.5 * (n - 1.0);
    const double ab = model.ab();
    const double bc = model.bc();
    const double log_c = p * std::log(4.0 * model.a() * model.b() * model.b() * model.c()) +
                         log_gamma(n - 0.5) - (n - 0.5) * std::numbers::ln2 - log_gamma(0.5) -
                         2.0 * log_gamma(p);
    const double r1 = 1.0 - 2.0 * z1;
    const double r2 = 1.0 - 2.0 * z2;
    const double lambda = 0.5 + ab * z1 / r1 + bc * z2 / r2;
    return std::exp(log_c + (p - 1.0) * (std::log(z1) + std::log(z2)) -
                    0.5 * (n + 1.0) * (std::log(r1) + std::log(r2)) - (n - 0.5) * std::log(lambda));
}

CdfEstimate general_cdf_quadrature_estimate(double t, const GeneralModel& model) {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("general_cdf_quadrature: t must lie in [0, 1]");
    if (t == 0.0) return {0.0, 0.0};
    if (t == 1.0) return {1.0, 0.0};

    const double n = model.n();
    const double p = 0.5 * (n - 1.0);
    const double q = 0.5 * n;
    const double ab = model.ab();
    const double bc = model.bc();
    const double scale = 2.0 * std::exp(p * std::log(ab) - log_beta(p, 0.5));

    // Region z1 <= t - 1/2: z2 is unconstrained, so the marginal cdf of Z1 applies.
    CdfEstimate out;
    if (t > 0.5) out.value = z1_marginal_cdf(t - 0.5, model);

    // z1 = sin^2(theta)/2. Takes s = sin(theta), c = cos(theta) and the exact 1 - 2 w2,
    // where w2 = t - s^2/2 is the upper limit for z2.
    auto integrand = [&](double s, double c, double one_minus_2w2) {
        const double c2 = c * c;
        const double mix = c2 + ab * s * s;
        const double w2 = 0.5 * (1.0 - one_minus_2w2);
        if (w2 <= 0.0) return 0.0;
        double inner = 1.0;
        if (one_minus_2w2 > 0.0) {
            // omega = bc X2 / (A + bc X2) with X2 = w2/(1 - 2 w2), A = mix / (2 c^2)
            const double num = 2.0 * bc * w2 * c2;
            const double rest = mix * one_minus_2w2;
            inner = special::reg_inc_beta(num / (num + rest), rest / (num + rest), p, q);
        }
        return std::pow(s, n - 2.0) * std::pow(mix, -q) * inner;
    };
    numeric::QuadratureResult result;
    if (t < 0.5) {
        const double theta_hi = std::asin(std::sqrt(2.0 * t));
        result = numeric::integrate(
            [&](double theta) {
                const double s = std::sin(theta);
                return integrand(s, std::cos(theta), 1.0 - 2.0 * t + s * s);
            },
            0.0, theta_hi, 1e-12);
    } else {
        // phi = pi/2 - theta keeps the short interval near theta = pi/2 resolved as t -> 1.
        const double phi_hi = std::asin(std::sqrt(2.0 * (1.0 - t)));
        result = numeric::integrate(
            [&](double phi) {
                const double c = std::sin(phi);
                return integrand(std::cos(phi), c, 2.0 * (1.0 - t) - c * c);
            },
            0.0, phi_hi, 1e-12);
    }
    out.value += scale * result.value;
    out.abs_error = scale * result.abs_error;
    if (!(out.abs_error <= kMaxCdfError) || !std::isfinite(out.value)) {
        throw QuadratureError("general_cdf_quadrature: error estimate " +
                                  std::to_string(out.abs_error) + " exceeds target",
                              out.value, out.abs_error);
    }
    out.value = std::clamp(out.value, 0.0, 1.0);
    return out;
}

double general_cdf_quadrature(double t, const GeneralModel& model) {
    return general_cdf_quadrature_estimate(t, model).value;
}

SeriesOutcome general_cdf_series(double t, const GeneralModel& model, const SeriesCaps& caps) {
    return evaluate_series(t, model, caps, false);
}

SeriesOutcome general_pdf_series(double t, const GeneralModel& model, const SeriesCaps& caps) {
    if (!(t > 0.0 && t < 1.0)) throw DomainError("general_pdf_series: t must lie in (0, 1)");
    return evaluate_series(t, model, caps, true);
}

std::vector<double> sample_T(const GeneralModel& model, std::size_t reps, std::uint64_t seed) {
    if (reps < 1) throw ConfigError("sample_T: reps must be at least 1");
    rng::NormalStream stream = rng::make_normal_generator(seed);
    const int df = model.n() - 1;
    const double ab = model.ab();
    const double bc = model.bc();
    std::vector<double> out(reps);
    for (double& value : out) {
        const double u = stream.chi_square(df);
        const double s = stream.chi_square(df);
        const double v = stream.chi_square(1);
        value = u / (2.0 * u + 2.0 * ab * v) + s / (2.0 * s + 2.0 * bc * v);
    }
    return out;
}

}  // namespace crossvar::general
