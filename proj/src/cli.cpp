#include "crossvar/cli.hpp"

#include "crossvar/core_stats.hpp"
#include "crossvar/datasets.hpp"
#include "crossvar/errors.hpp"
#include "crossvar/general_dist.hpp"
#include "crossvar/hypothesis_tests.hpp"
#include "crossvar/report.hpp"
#include "crossvar/simulation.hpp"
#include "crossvar/tstar_dist.hpp"

#include <CLI/CLI11.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace crossvar::cli {
namespace {

namespace fs = std::filesystem;
using report::fixed;
using report::shortest;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n\f\v");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n\f\v");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    const auto delim = line.find_first_of(",;\t");
    if (delim != std::string_view::npos) {
        const char d = line[delim];
        std::size_t start = 0;
        while (true) {
            const auto pos = line.find(d, start);
            out.push_back(trim(line.substr(start, pos - start)));
            if (pos == std::string_view::npos) break;
            start = pos + 1;
        }
        return out;
    }
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0, start = 0;
    while (start <= text.size()) {
        const auto end = text.find('\n', start);
        const auto line = text.substr(start, end == std::string_view::npos ? end : end - start);
        ++line_no;
        const auto t = trim(line);
        if (!t.empty() && t.front() != '#') fn(line_no, t);
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
}

std::string line_error(std::size_t line, const std::string& what) {
    return "line " + std::to_string(line) + ": " + what;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw ConfigError("failed writing '" + path.string() + "'");
}

fs::path prepare_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw ConfigError("cannot create output directory '" + dir + "'");
    return fs::path(dir);
}

std::string join(const std::vector<double>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ',';
        s += shortest(values[i]);
    }
    return s;
}

// ---------------------------------------------------------------- test

struct TestOptions {
    std::string dataset;
    std::string csv;
    std::string x_file;
    std::string y_file;
    double alpha = 0.01;
    double f_alpha = 0.05;
    std::string n_policy;
    std::string format = "text";
};

std::string describe(const TestResult& r) {
    std::ostringstream os;
    std::string name(to_string(r.method));
    name.resize(12, ' ');
    os << name << "statistic=" << fixed(r.statistic, 6) << "  df=";
    if (r.method == Method::FVariance) {
        os << '(' << shortest(r.df.first) << ", " << shortest(r.df.second) << ')';
    } else {
        os << shortest(r.df.first);
    }
    os << "  p=" << fixed(r.p_value, 3) << "  alpha=" << shortest(r.alpha) << "  ";
    if (r.method == Method::FVariance) {
        os << (r.decision == Decision::Reject ? "not equal variance" : "equal variance");
    } else {
        os << to_string(r.decision);
    }
    if (r.effective_n && r.n_policy_used) {
        os << "  n=" << shortest(*r.effective_n) << " (" << to_string(*r.n_policy_used) << ')';
    }
    return os.str();
}

int cmd_test(const TestOptions& o, std::ostream& out, std::ostream& err) {
    const int sources = !o.dataset.empty() + !o.csv.empty() + (!o.x_file.empty() || !o.y_file.empty());
    if (sources != 1) throw ConfigError("give exactly one of --dataset, --csv, or --x with --y");

    report::RunManifest manifest;
    manifest.command = "test";
    std::string label;
    std::vector<double> xs, ys;
    if (!o.dataset.empty()) {
        const auto& d = data::find(o.dataset);
        xs = d.x;
        ys = d.y;
        label = std::string(d.name);
        manifest.flags["dataset"] = label;
        manifest.input_digests["x"] = report::digest_values(xs);
        manifest.input_digests["y"] = report::digest_values(ys);
    } else if (!o.csv.empty()) {
        const auto text = read_file(o.csv);
        auto groups = parse_two_column(text);
        xs = std::move(groups.x);
        ys = std::move(groups.y);
        label = o.csv + " (" + groups.x_label + " vs " + groups.y_label + ")";
        manifest.flags["csv"] = o.csv;
        manifest.input_digests[o.csv] = report::fnv1a_hex(text);
    } else {
        if (o.x_file.empty() || o.y_file.empty()) throw ConfigError("--x and --y must be given together");
        const auto tx = read_file(o.x_file);
        const auto ty = read_file(o.y_file);
        try {
            xs = parse_value_list(tx);
        } catch (const ConfigError& e) {
            throw ConfigError(o.x_file + ": " + e.what());
        }
        try {
            ys = parse_value_list(ty);
        } catch (const ConfigError& e) {
            throw ConfigError(o.y_file + ": " + e.what());
        }
        label = o.x_file + " vs " + o.y_file;
        manifest.flags["x"] = o.x_file;
        manifest.flags["y"] = o.y_file;
        manifest.input_digests[o.x_file] = report::fnv1a_hex(tx);
        manifest.input_digests[o.y_file] = report::fnv1a_hex(ty);
    }
    manifest.flags["alpha"] = shortest(o.alpha);
    manifest.flags["f_alpha"] = shortest(o.f_alpha);
    manifest.flags["format"] = o.format;
    if (!o.n_policy.empty()) manifest.flags["n_policy"] = o.n_policy;

    std::optional<NPolicy> policy;
    if (!o.n_policy.empty()) policy = parse_n_policy(o.n_policy);

    const Sample x(std::move(xs));
    const Sample y(std::move(ys));
    if (x.size() != y.size() && !policy) {
        throw ConfigError("group sizes differ (" + std::to_string(x.size()) + " vs " +
                          std::to_string(y.size()) + "); choose --n-policy min, max or avg");
    }
    const auto f = f_variance_test(x, y, o.f_alpha);
    const auto t = pooled_t_test(x, y, o.alpha);
    const auto c = crossvar_test(x, y, o.alpha, policy);

    std::vector<std::string> warnings;
    if (f.decision == Decision::Reject) {
        warnings.push_back("F-test rejects equal variances (p=" + fixed(f.p_value, 4) +
                           "); the cross-variance test assumes equal variances");
    }

    if (o.format == "json") {
        report::Json groups;
        for (const auto* s : {&x, &y}) {
            groups[s == &x ? "x" : "y"] = {{"n", s->size()}, {"mean", s->mean()}, {"variance", s->variance()}};
        }
        report::Json results = report::Json::array();
        for (const auto* r : {&f, &t, &c}) results.push_back(report::to_json(*r));
        const report::Json doc{{"kind", "test"},
                               {"input", label},
                               {"manifest", report::to_json(manifest)},
                               {"groups", groups},
                               {"results", results},
                               {"warnings", warnings}};
        out << report::render(doc);
    } else if (o.format == "csv") {
        out << "method,statistic,df1,df2,p_value,alpha,decision,effective_n\n";
        for (const auto* r : {&f, &t, &c}) {
            out << to_string(r->method) << ',' << shortest(r->statistic) << ','
                << shortest(r->df.first) << ',';
            if (r->method == Method::FVariance) out << shortest(r->df.second);
            out << ',' << shortest(r->p_value) << ',' << shortest(r->alpha) << ','
                << to_string(r->decision) << ',';
            if (r->effective_n) out << shortest(*r->effective_n);
            out << '\n';
        }
    } else {
        out << "input: " << label << '\n';
        for (const auto* s : {&x, &y}) {
            out << (s == &x ? "x" : "y") << ": n=" << s->size() << " mean=" << fixed(s->mean(), 3)
                << " variance=" << fixed(s->variance(), 3) << '\n';
        }
        for (const auto* r : {&f, &t, &c}) out << describe(*r) << '\n';
    }
    // Text reports carry the warning inline; machine formats keep stdout clean.
    for (const auto& w : warnings) (o.format == "text" ? out : err) << "warning: " << w << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------- dist

struct DistOptions {
    std::string which;
    double n = 0.0;
    std::vector<double> t;
    std::vector<double> p;
    int grid = 0;
    double sigma_x2 = 0.0;
    double sigma_y2 = 0.0;
    int digits = 6;
    CLI::Option* n_opt = nullptr;
    CLI::Option* sx_opt = nullptr;
    CLI::Option* sy_opt = nullptr;
};

int cmd_dist(const DistOptions& o, std::ostream& out) {
    const bool quantile = o.which == "tstar-quantile";
    const bool general = o.which == "general-cdf";
    if (!o.n_opt->count()) throw ConfigError("--n is required");
    if (quantile && !o.t.empty()) throw ConfigError("tstar-quantile takes --p, not --t");
    if (!quantile && !o.p.empty()) throw ConfigError(o.which + " takes --t, not --p");
    if (general != (o.sx_opt->count() > 0) || general != (o.sy_opt->count() > 0)) {
        throw ConfigError(general ? "general-cdf needs --sigma-x2 and --sigma-y2"
                                  : "--sigma-x2/--sigma-y2 apply to general-cdf only");
    }
    if (o.grid < 0) throw ConfigError("--grid must be non-negative");
    if (o.digits < 0 || o.digits > 17) throw ConfigError("--digits must lie in 0..17");

    std::vector<double> inputs = quantile ? o.p : o.t;
    for (int i = 1; i <= o.grid; ++i) inputs.push_back(static_cast<double>(i) / (o.grid + 1));
    if (inputs.empty()) throw ConfigError(quantile ? "give --p or --grid" : "give --t or --grid");
    if (quantile) {
        for (double p : inputs) {
            if (!(p > 0.0 && p < 1.0)) throw ConfigError("p must be interior to (0, 1), got " + shortest(p));
        }
    }

    std::optional<tstar::TstarModel> tm;
    std::optional<general::GeneralModel> gm;
    if (general) {
        if (o.n != std::floor(o.n) || o.n < 2.0 || o.n > 1e6) {
            throw ConfigError("general-cdf needs an integer n >= 2");
        }
        gm.emplace(static_cast<int>(o.n), o.sigma_x2, o.sigma_y2);
    } else {
        tm.emplace(o.n);
    }

    out << "input,output,method,error_estimate\n";
    for (double v : inputs) {
        double value = 0.0;
        std::string method, error;
        if (o.which == "tstar-pdf") {
            value = tstar::tstar_pdf(v, *tm);
            method = "closed-form";
        } else if (o.which == "tstar-cdf") {
            value = tstar::tstar_cdf(v, *tm);
            method = "closed-form";
        } else if (o.which == "tstar-cdf-series") {
            const auto s = tstar::tstar_cdf_series(v, *tm);
            value = s.value;
            method = "series";
            error = report::shortest(tstar::SeriesControl{}.abs_tol);
        } else if (quantile) {
            value = tstar::tstar_quantile(v, *tm);
            method = "bisection";
        } else {
            const auto est = general::general_cdf_quadrature_estimate(v, *gm);
            value = est.value;
            method = "quadrature";
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3e", est.abs_error);
            error = buf;
        }
        out << fixed(v, o.digits) << ',' << fixed(value, o.digits) << ',' << method << ',' << error << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- studies

struct StudyOptions {
    int n = 25;
    int reps = 500;
    double alpha = 0.01;
    std::vector<double> alphas{0.05, 0.01};
    double sigma = 1.2;
    double mu_x = 9.2;
    std::vector<double> mu_grid;
    std::uint64_t seed = 42;
    std::string out_dir;
    std::string preset;
    std::string quantile_mode = "empirical";
    unsigned threads = 0;
    bool dump_pvalues = false;
};

// Thread count and output location stay out of the manifest so that reports
// are byte-identical across worker counts and directories.
report::RunManifest study_manifest(const std::string& command, const StudyOptions& o, bool power) {
    report::RunManifest m;
    m.command = command;
    m.seed = o.seed;
    m.has_seed = true;
    m.flags["reps"] = std::to_string(o.reps);
    m.flags["seed"] = std::to_string(o.seed);
    if (!o.preset.empty()) {
        m.flags["preset"] = o.preset;
    } else {
        m.flags["n"] = std::to_string(o.n);
        m.flags["sigma"] = shortest(o.sigma);
        m.flags[power ? "mu_x" : "mu"] = shortest(o.mu_x);
        if (power) m.flags["mu_grid"] = join(o.mu_grid);
    }
    if (power) {
        m.flags["alpha"] = shortest(o.alpha);
        m.flags["quantile_mode"] = o.quantile_mode;
    } else {
        m.flags["alpha"] = join(o.alphas);
        m.flags["dump_pvalues"] = o.dump_pvalues ? "true" : "false";
    }
    return m;
}

int cmd_power(const StudyOptions& o, std::ostream& out) {
    const auto mode = o.quantile_mode == "analytic" ? sim::QuantileMode::Analytic
                                                    : sim::QuantileMode::Empirical;
    std::vector<sim::StudyConfig> configs;
    if (!o.preset.empty()) {
        configs = sim::paper_figure_preset(o.preset.back() - '0', o.seed, o.reps);
    } else {
        sim::StudyConfig c;
        c.n = o.n;
        c.reps = o.reps;
        c.alpha = o.alpha;
        c.mu_x = o.mu_x;
        c.mu_y_grid = o.mu_grid;
        c.sigma = o.sigma;
        c.seed = o.seed;
        configs.push_back(c);
    }
    for (auto& c : configs) {
        c.quantile_mode = mode;
        c.threads = o.threads;
        sim::validate(c, true);
    }
    std::vector<sim::PowerCurve> curves;
    for (const auto& c : configs) curves.push_back(sim::run_power_study(c));

    const auto doc = report::power_report(curves, study_manifest("power", o, true));
    if (o.out_dir.empty()) {
        out << report::render(doc);
        return kExitOk;
    }
    const auto dir = prepare_out_dir(o.out_dir);
    write_file(dir / "power.json", report::render(doc));
    write_file(dir / "power.csv", report::power_csv(curves));
    write_file(dir / "power_plot.csv", report::power_plot_csv(curves));
    out << "wrote " << (dir / "power.json").string() << ", power.csv, power_plot.csv\n";
    return kExitOk;
}

int cmd_type1(const StudyOptions& o, std::ostream& out) {
    std::vector<sim::StudyConfig> configs;
    if (!o.preset.empty()) {
        configs = sim::paper_table1_preset(o.seed, o.reps);
    } else {
        sim::StudyConfig c;
        c.n = o.n;
        c.reps = o.reps;
        c.mu_x = o.mu_x;
        c.sigma = o.sigma;
        c.seed = o.seed;
        configs.push_back(c);
    }
    for (auto& c : configs) {
        c.error_alphas = o.alphas;
        c.threads = o.threads;
    }
    const auto table = sim::run_type1_study(configs);
    const auto doc = report::type1_report(table, study_manifest("type1", o, false), o.dump_pvalues);
    if (o.out_dir.empty()) {
        out << report::render(doc);
        return kExitOk;
    }
    const auto dir = prepare_out_dir(o.out_dir);
    write_file(dir / "type1.json", report::render(doc));
    write_file(dir / "type1.csv", report::type1_csv(table));
    if (o.dump_pvalues) write_file(dir / "type1_pvalues.csv", report::pvalues_csv(table));
    out << "wrote " << (dir / "type1.json").string() << ", type1.csv"
        << (o.dump_pvalues ? ", type1_pvalues.csv" : "") << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------- datasets

int cmd_datasets(const std::string& format, std::ostream& out) {
    const bool csv = format == "csv";
    out << (csv ? "name,n_x,mean_x,variance_x,n_y,mean_y,variance_y\n"
                : "name   n_x    mean_x  variance_x  n_y    mean_y  variance_y\n");
    for (const auto& d : data::catalog()) {
        const auto sx = summarize(d.x);
        const auto sy = summarize(d.y);
        if (csv) {
            out << d.name << ',' << sx.n << ',' << fixed(sx.mean, 3) << ',' << fixed(sx.variance, 3)
                << ',' << sy.n << ',' << fixed(sy.mean, 3) << ',' << fixed(sy.variance, 3) << '\n';
        } else {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%-5s %4zu %9.3f %11.3f %4zu %9.3f %11.3f\n",
                          std::string(d.name).c_str(), sx.n, sx.mean, sx.variance, sy.n, sy.mean,
                          sy.variance);
            out << buf;
        }
    }
    return kExitOk;
}

}  // namespace

TwoGroups parse_two_column(std::string_view text) {
    TwoGroups g;
    bool first = true;
    for_each_line(text, [&](std::size_t line, std::string_view content) {
        const auto fields = split_fields(content);
        const bool was_first = first;
        first = false;
        if (fields.size() != 2) {
            if (was_first) return;  // header of a different shape
            throw ConfigError(line_error(line, "expected 2 fields (group, value), found " +
                                                   std::to_string(fields.size())));
        }
        const auto value = parse_number(fields[1]);
        if (!value) {
            if (was_first) return;
            throw ConfigError(line_error(line, "cannot parse value '" + std::string(fields[1]) + "'"));
        }
        const std::string group(fields[0]);
        if (group.empty()) throw ConfigError(line_error(line, "empty group label"));
        if (g.x_label.empty() || group == g.x_label) {
            g.x_label = group;
            g.x.push_back(*value);
        } else if (g.y_label.empty() || group == g.y_label) {
            g.y_label = group;
            g.y.push_back(*value);
        } else {
            throw ConfigError(line_error(line, "third group '" + group + "'; expected two groups"));
        }
    });
    if (g.y_label.empty()) throw ConfigError("input must contain two groups");
    return g;
}

std::vector<double> parse_value_list(std::string_view text) {
    std::vector<double> out;
    bool first = true;
    for_each_line(text, [&](std::size_t line, std::string_view content) {
        const auto value = parse_number(content);
        const bool was_first = first;
        first = false;
        if (!value) {
            if (was_first) return;
            throw ConfigError(line_error(line, "cannot parse value '" + std::string(content) + "'"));
        }
        out.push_back(*value);
    });
    return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cross-variance two-sample test toolkit", "crossvar"};
    app.set_version_flag("--version", std::string(report::toolkit_version()));
    app.require_subcommand(1);

    TestOptions topt;
    auto* test = app.add_subcommand("test", "Run the F, pooled t and cross-variance tests");
    test->add_option("--dataset", topt.dataset, "Bundled dataset ds1..ds14");
    test->add_option("--csv", topt.csv, "Two-column CSV (group, value)");
    test->add_option("--x", topt.x_file, "File with one x value per line");
    test->add_option("--y", topt.y_file, "File with one y value per line");
    test->add_option("--alpha", topt.alpha, "Level of the mean tests")->capture_default_str();
    test->add_option("--f-alpha", topt.f_alpha, "Level of the variance F-test")->capture_default_str();
    test->add_option("--n-policy", topt.n_policy, "Effective n for unequal sizes")
        ->check(CLI::IsMember({"min", "max", "avg", "average"}));
    test->add_option("--format", topt.format)->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();

    DistOptions dopt;
    auto* dist = app.add_subcommand("dist", "Evaluate T* and general-case distribution functions");
    dist->add_option("--which", dopt.which)
        ->required()
        ->check(CLI::IsMember({"tstar-pdf", "tstar-cdf", "tstar-cdf-series", "tstar-quantile", "general-cdf"}));
    dopt.n_opt = dist->add_option("--n", dopt.n, "Per-group sample size");
    dist->add_option("--t", dopt.t, "Evaluation points")->delimiter(',');
    dist->add_option("--p", dopt.p, "Probabilities for tstar-quantile")->delimiter(',');
    dist->add_option("--grid", dopt.grid, "Also evaluate at i/(N+1), i = 1..N");
    dopt.sx_opt = dist->add_option("--sigma-x2", dopt.sigma_x2, "Variance of X (general-cdf)");
    dopt.sy_opt = dist->add_option("--sigma-y2", dopt.sigma_y2, "Variance of Y (general-cdf)");
    dist->add_option("--digits", dopt.digits, "Decimals in the output")->capture_default_str();

    StudyOptions popt;
    auto* power = app.add_subcommand("power", "Monte Carlo power curves");
    auto* p_n = power->add_option("--n", popt.n)->capture_default_str();
    power->add_option("--reps", popt.reps)->capture_default_str();
    power->add_option("--alpha", popt.alpha)->capture_default_str();
    auto* p_sigma = power->add_option("--sigma", popt.sigma)->capture_default_str();
    auto* p_mu = power->add_option("--mu-x", popt.mu_x)->capture_default_str();
    auto* p_grid = power->add_option("--mu-grid", popt.mu_grid, "Comma-separated mu_y values")->delimiter(',');
    power->add_option("--seed", popt.seed)->capture_default_str();
    power->add_option("--out", popt.out_dir, "Directory for power.json, power.csv, power_plot.csv");
    power->add_option("--preset", popt.preset)
        ->check(CLI::IsMember({"paper-fig1", "paper-fig2", "paper-fig3", "paper-fig4"}))
        ->excludes(p_n)
        ->excludes(p_sigma)
        ->excludes(p_mu)
        ->excludes(p_grid);
    power->add_option("--quantile-mode", popt.quantile_mode)
        ->check(CLI::IsMember({"empirical", "analytic"}))
        ->capture_default_str();
    power->add_option("--threads", popt.threads, "Worker threads (0 = all cores)");

    StudyOptions eopt;
    eopt.sigma = 3.5;
    auto* type1 = app.add_subcommand("type1", "Monte Carlo type-I error rates");
    auto* e_n = type1->add_option("--n", eopt.n)->capture_default_str();
    type1->add_option("--reps", eopt.reps)->capture_default_str();
    type1->add_option("--alpha", eopt.alphas, "Comma-separated levels")->delimiter(',');
    auto* e_sigma = type1->add_option("--sigma", eopt.sigma)->capture_default_str();
    auto* e_mu = type1->add_option("--mu", eopt.mu_x)->capture_default_str();
    type1->add_option("--seed", eopt.seed)->capture_default_str();
    type1->add_option("--out", eopt.out_dir, "Directory for type1.json, type1.csv");
    type1->add_option("--preset", eopt.preset)
        ->check(CLI::IsMember({"paper-table1"}))
        ->excludes(e_n)
        ->excludes(e_sigma)
        ->excludes(e_mu);
    type1->add_flag("--dump-pvalues", eopt.dump_pvalues, "Keep per-replicate p-values");
    type1->add_option("--threads", eopt.threads, "Worker threads (0 = all cores)");

    std::string ds_format = "text";
    auto* datasets = app.add_subcommand("datasets", "List the bundled datasets with their moments");
    datasets->add_option("--format", ds_format)->check(CLI::IsMember({"text", "csv"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*test) return cmd_test(topt, out, err);
        if (*dist) return cmd_dist(dopt, out);
        if (*power) return cmd_power(popt, out);
        if (*type1) return cmd_type1(eopt, out);
        if (*datasets) return cmd_datasets(ds_format, out);
    } catch (const DegenerateSampleError& e) {
        err << "error: degenerate sample: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}

}  // namespace crossvar::cli
