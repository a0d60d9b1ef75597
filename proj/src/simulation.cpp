#include "crossvar/simulation.hpp"

#include "crossvar/core_stats.hpp"
#include "crossvar/errors.hpp"
#include "crossvar/hypothesis_tests.hpp"
#include "crossvar/random.hpp"
#include "crossvar/tstar_dist.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

namespace crossvar::sim {
namespace {

// Substream roles below a grid point or row.
constexpr std::uint64_t kNullRole = 0;
constexpr std::uint64_t kAltRole = 1;

struct PairDraw {
    double tstar;
    double t_p;
    double tstar_p;
};

// Draws x ~ N(mu_x, sigma^2), y ~ N(mu_y, sigma^2) of size n and evaluates both tests.
PairDraw draw_pair(std::uint64_t stream_seed, int n, double mu_x, double mu_y, double sigma,
                   bool want_tstar_p) {
    rng::NormalStream gen(stream_seed);
    std::vector<double> xs(static_cast<std::size_t>(n));
    std::vector<double> ys(static_cast<std::size_t>(n));
    gen.fill(xs, mu_x, sigma);
    gen.fill(ys, mu_y, sigma);
    const Sample x(std::move(xs));
    const Sample y(std::move(ys));

    PairDraw d{};
    d.tstar = statistic_Tstar(x.variance(), y.variance(), y.mean() - x.mean(), n);
    d.t_p = pooled_t_test(x, y, 0.5).p_value;
    d.tstar_p = want_tstar_p ? tstar::tstar_cdf(d.tstar, tstar::TstarModel(n)) : 0.0;
    return d;
}

ErrorRateRow run_row(const StudyConfig& cfg, std::uint64_t row_index) {
    const auto reps = static_cast<std::size_t>(cfg.reps);
    ErrorRateRow row;
    row.n = cfg.n;
    row.sigma = cfg.sigma;
    row.variance_label = cfg.variance_label;
    row.reps = cfg.reps;
    row.alphas = cfg.error_alphas;
    row.proposed_p.resize(reps);
    row.t_p.resize(reps);

    parallel_for(reps, resolve_threads(cfg.threads), [&](std::size_t r) {
        const auto d = draw_pair(rng::derive_seed(cfg.seed, {row_index, kNullRole, r}), cfg.n,
                                 cfg.mu_x, cfg.mu_x, cfg.sigma, true);
        row.proposed_p[r] = d.tstar_p;
        row.t_p[r] = d.t_p;
    });

    for (double a : row.alphas) {
        std::size_t prop = 0, tt = 0;
        for (std::size_t r = 0; r < reps; ++r) {
            prop += decide(row.proposed_p[r], a) == Decision::Reject;
            tt += decide(row.t_p[r], a) == Decision::Reject;
        }
        row.proposed_rate.push_back(static_cast<double>(prop) / static_cast<double>(reps));
        row.t_rate.push_back(static_cast<double>(tt) / static_cast<double>(reps));
    }
    for (std::size_t r = 0; r < reps; ++r) {
        for (double a : row.alphas) {
            if (decide(row.proposed_p[r], a) != decide(row.t_p[r], a)) {
                ++row.decision_mismatches;
                break;
            }
        }
    }
    return row;
}

}  // namespace

void validate(const StudyConfig& c, bool power) {
    if (c.n < 2) throw ConfigError("n must be at least 2");
    if (c.reps < 1) throw ConfigError("reps must be positive");
    if (!(c.sigma > 0.0) || !std::isfinite(c.sigma)) throw ConfigError("sigma must be positive");
    if (!std::isfinite(c.mu_x)) throw ConfigError("mu_x must be finite");
    if (power) {
        if (!(c.alpha > 0.0 && c.alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
        if (c.mu_y_grid.empty()) throw ConfigError("power study needs a nonempty mu_y grid");
        for (double m : c.mu_y_grid) {
            if (!std::isfinite(m)) throw ConfigError("mu_y grid values must be finite");
        }
    } else {
        if (c.error_alphas.empty()) throw ConfigError("type-I study needs at least one alpha");
        for (double a : c.error_alphas) {
            if (!(a > 0.0 && a < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
        }
    }
}

double empirical_quantile(std::span<const double> values, double q) {
    if (values.empty()) throw ConfigError("empirical_quantile: no values");
    if (!(q >= 0.0 && q <= 1.0)) throw ConfigError("empirical_quantile: q must lie in [0, 1]");
    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    const double h = static_cast<double>(v.size() - 1) * q;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

unsigned resolve_threads(unsigned requested) {
    unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("CROSSVAR_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap > 0) n = std::min(n, static_cast<unsigned>(cap));
    }
    return n;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

PowerCurve run_power_study(const StudyConfig& cfg) {
    validate(cfg, true);
    const auto reps = static_cast<std::size_t>(cfg.reps);
    const unsigned threads = resolve_threads(cfg.threads);
    const tstar::TstarModel model(cfg.n);
    const double analytic = cfg.quantile_mode == QuantileMode::Analytic
                                ? tstar::tstar_quantile(cfg.alpha, model)
                                : 0.0;

    PowerCurve curve;
    curve.config = cfg;
    std::vector<double> null_t(reps), alt_t(reps), alt_p(reps);
    for (std::size_t g = 0; g < cfg.mu_y_grid.size(); ++g) {
        const double mu_y = cfg.mu_y_grid[g];
        parallel_for(reps, threads, [&](std::size_t r) {
            if (cfg.quantile_mode == QuantileMode::Empirical) {
                null_t[r] = draw_pair(rng::derive_seed(cfg.seed, {g, kNullRole, r}), cfg.n,
                                      cfg.mu_x, cfg.mu_x, cfg.sigma, false)
                                .tstar;
            }
            const auto d = draw_pair(rng::derive_seed(cfg.seed, {g, kAltRole, r}), cfg.n,
                                     cfg.mu_x, mu_y, cfg.sigma, false);
            alt_t[r] = d.tstar;
            alt_p[r] = d.t_p;
        });

        PowerPoint pt;
        pt.mu_y = mu_y;
        pt.delta = mu_y - cfg.mu_x;
        pt.critical_value = cfg.quantile_mode == QuantileMode::Empirical
                                ? empirical_quantile(null_t, cfg.alpha)
                                : analytic;
        std::size_t prop = 0, tt = 0;
        for (std::size_t r = 0; r < reps; ++r) {
            prop += alt_t[r] < pt.critical_value;
            tt += decide(alt_p[r], cfg.alpha) == Decision::Reject;
        }
        pt.proposed_power = static_cast<double>(prop) / static_cast<double>(reps);
        pt.t_power = static_cast<double>(tt) / static_cast<double>(reps);
        curve.points.push_back(pt);
    }
    return curve;
}

ErrorRateTable run_type1_study(const StudyConfig& config) {
    return run_type1_study(std::span<const StudyConfig>(&config, 1));
}

ErrorRateTable run_type1_study(std::span<const StudyConfig> rows) {
    if (rows.empty()) throw ConfigError("type-I study needs at least one row");
    for (const auto& c : rows) validate(c, false);
    ErrorRateTable table;
    for (std::size_t i = 0; i < rows.size(); ++i) table.rows.push_back(run_row(rows[i], i));
    return table;
}

std::vector<StudyConfig> paper_table1_preset(std::uint64_t seed, int reps) {
    static constexpr int kSizes[] = {5, 25, 100, 500};
    static constexpr double kSigmas[] = {1.25, 3.5, 10.0};
    static const char* const kLabels[] = {"low", "medium", "high"};
    std::vector<StudyConfig> out;
    for (int n : kSizes) {
        for (int s = 0; s < 3; ++s) {
            StudyConfig c;
            c.n = n;
            c.reps = reps;
            c.mu_x = 9.2;
            c.sigma = kSigmas[s];
            c.variance_label = kLabels[s];
            c.seed = seed;
            out.push_back(c);
        }
    }
    return out;
}

std::vector<StudyConfig> paper_figure_preset(int figure, std::uint64_t seed, int reps) {
    static constexpr int kSizes[] = {5, 25, 100, 500};
    static constexpr double kSigmas[] = {0.2, 1.2, 7.0};
    static const char* const kLabels[] = {"low", "medium", "high"};
    if (figure < 1 || figure > 4) throw ConfigError("figure preset must be 1..4");
    const int n = kSizes[figure - 1];
    std::vector<StudyConfig> out;
    for (int s = 0; s < 3; ++s) {
        StudyConfig c;
        c.n = n;
        c.reps = reps;
        c.alpha = 0.01;
        c.mu_x = 9.2;
        c.sigma = kSigmas[s];
        c.variance_label = kLabels[s];
        // Panels differ by seed path through the row index only via the seed itself.
        c.seed = rng::derive_seed(seed, {static_cast<std::uint64_t>(s)});
        const double step = 0.5 * c.sigma * std::sqrt(2.0 / n);
        for (int j = 0; j <= 12; ++j) c.mu_y_grid.push_back(c.mu_x + step * j);
        out.push_back(c);
    }
    return out;
}

}  // namespace crossvar::sim
