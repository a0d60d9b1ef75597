#pragma once

// Monte Carlo power and type-I error studies comparing the cross-variance
// test with the pooled t-test on equal-size normal samples.
//
// Every replicate draws from its own substream addressed by
// (seed, row/grid index, role, replicate), so results do not depend on the
// number of worker threads or on the order in which replicates run.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace crossvar::sim {

enum class QuantileMode {
    Empirical,  // alpha order-statistic quantile of simulated null T* values
    Analytic,   // tstar_quantile(alpha)
};

struct StudyConfig {
    int n = 25;                        // per-group size
    int reps = 500;                    // M
    double alpha = 0.01;               // level of the power study
    double mu_x = 9.2;
    std::vector<double> mu_y_grid;     // power study only
    double sigma = 1.2;                // standard deviation of both groups
    std::string variance_label;        // "low" / "medium" / "high", informational
    std::uint64_t seed = 42;
    QuantileMode quantile_mode = QuantileMode::Empirical;
    std::vector<double> error_alphas{0.05, 0.01};  // type-I study columns
    unsigned threads = 0;              // 0 = hardware concurrency
};

struct PowerPoint {
    double mu_y = 0.0;
    double delta = 0.0;           // mu_y - mu_x
    double critical_value = 0.0;  // t*_{0,alpha}
    double proposed_power = 0.0;
    double t_power = 0.0;
};

struct PowerCurve {
    StudyConfig config;
    std::vector<PowerPoint> points;
};

struct ErrorRateRow {
    int n = 0;
    double sigma = 0.0;
    std::string variance_label;
    int reps = 0;
    std::vector<double> alphas;
    std::vector<double> proposed_rate;  // one entry per alpha
    std::vector<double> t_rate;
    /// Replicates where the two tests disagree at some alpha.
    std::size_t decision_mismatches = 0;
    std::vector<double> proposed_p;
    std::vector<double> t_p;
};

struct ErrorRateTable {
    std::vector<ErrorRateRow> rows;
};

/// Throws ConfigError. `power` additionally requires a nonempty grid.
void validate(const StudyConfig& config, bool power);

PowerCurve run_power_study(const StudyConfig& config);

/// One row; the group means are both config.mu_x.
ErrorRateTable run_type1_study(const StudyConfig& config);
/// One row per config; row i draws from substream i of its config's seed.
ErrorRateTable run_type1_study(std::span<const StudyConfig> rows);

/// Type-7 quantile: linear interpolation between order statistics
/// floor(h) and floor(h) + 1 (0-based) with h = (N - 1) q.
double empirical_quantile(std::span<const double> values, double q);

/// Worker count: requested (0 = hardware), capped by CROSSVAR_THREADS if set.
unsigned resolve_threads(unsigned requested);

/// Runs body(i) for i in [0, count) on `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

/// Twelve type-I rows: n in {5, 25, 100, 500} x sigma in {1.25, 3.5, 10}, mu = 9.2.
std::vector<StudyConfig> paper_table1_preset(std::uint64_t seed, int reps = 500);

/// Three power panels (sigma 0.2, 1.2, 7) at n = 5, 25, 100, 500 for figure 1..4.
/// The grid puts mu_y - mu_x at sigma sqrt(2/n) * {0, 0.5, ..., 6}.
std::vector<StudyConfig> paper_figure_preset(int figure, std::uint64_t seed, int reps = 500);

}  // namespace crossvar::sim
