#include "crossvar/report.hpp"

#include <charconv>
#include <cmath>
#include <cinttypes>
#include <cstdio>
#include <sstream>

#ifndef CROSSVAR_VERSION
#define CROSSVAR_VERSION "0.0.0"
#endif

namespace crossvar::report {
namespace {

std::string_view mode_name(sim::QuantileMode mode) {
    return mode == sim::QuantileMode::Empirical ? "EMPIRICAL" : "ANALYTIC";
}

// Standardized shift (mu_y - mu_x) / (sigma sqrt(2/n)), the t noncentrality.
double noncentrality(const sim::StudyConfig& c, double delta) {
    return delta / (c.sigma * std::sqrt(2.0 / c.n));
}

}  // namespace

std::string_view toolkit_version() { return CROSSVAR_VERSION; }

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

std::string digest_values(const std::vector<double>& values) {
    std::string text;
    for (double v : values) {
        text += shortest(v);
        text += '\n';
    }
    return fnv1a_hex(text);
}

std::string shortest(double value) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string fixed(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, value);
    return buf;
}

Json to_json(const RunManifest& m) {
    Json j;
    j["command"] = m.command;
    j["flags"] = m.flags;
    j["seed"] = m.has_seed ? Json(m.seed) : Json(nullptr);
    j["version"] = m.version.empty() ? std::string(toolkit_version()) : m.version;
    j["input_digests"] = m.input_digests;
    return j;
}

Json to_json(const TestResult& r) {
    Json j;
    j["method"] = std::string(to_string(r.method));
    j["statistic"] = r.statistic;
    j["df"] = r.method == Method::FVariance ? Json::array({r.df.first, r.df.second})
                                             : Json::array({r.df.first});
    j["p_value"] = r.p_value;
    j["alpha"] = r.alpha;
    j["decision"] = std::string(to_string(r.decision));
    j["n_policy"] = r.n_policy_used ? Json(std::string(to_string(*r.n_policy_used))) : Json(nullptr);
    j["effective_n"] = r.effective_n ? Json(*r.effective_n) : Json(nullptr);
    return j;
}

Json to_json(const sim::StudyConfig& c) {
    Json j;
    j["n"] = c.n;
    j["reps"] = c.reps;
    j["alpha"] = c.alpha;
    j["mu_x"] = c.mu_x;
    j["mu_y_grid"] = c.mu_y_grid;
    j["sigma"] = c.sigma;
    j["variance_label"] = c.variance_label;
    j["seed"] = c.seed;
    j["quantile_mode"] = std::string(mode_name(c.quantile_mode));
    j["error_alphas"] = c.error_alphas;
    return j;
}

Json to_json(const sim::PowerCurve& curve) {
    Json pts = Json::array();
    for (const auto& p : curve.points) {
        pts.push_back({{"mu_y", p.mu_y},
                       {"delta", p.delta},
                       {"noncentrality", noncentrality(curve.config, p.delta)},
                       {"critical_value", p.critical_value},
                       {"proposed_power", p.proposed_power},
                       {"t_power", p.t_power}});
    }
    return {{"config", to_json(curve.config)}, {"points", pts}};
}

Json to_json(const sim::ErrorRateRow& row, bool include_pvalues) {
    Json rates = Json::array();
    for (std::size_t i = 0; i < row.alphas.size(); ++i) {
        rates.push_back({{"alpha", row.alphas[i]},
                         {"proposed", row.proposed_rate[i]},
                         {"t", row.t_rate[i]}});
    }
    Json j{{"n", row.n},
           {"sigma", row.sigma},
           {"variance_label", row.variance_label},
           {"reps", row.reps},
           {"rates", rates},
           {"decision_mismatches", row.decision_mismatches}};
    if (include_pvalues) {
        j["proposed_p"] = row.proposed_p;
        j["t_p"] = row.t_p;
    }
    return j;
}

Json power_report(const std::vector<sim::PowerCurve>& curves, const RunManifest& manifest) {
    Json arr = Json::array();
    for (const auto& c : curves) arr.push_back(to_json(c));
    return {{"kind", "power"}, {"manifest", to_json(manifest)}, {"curves", arr}};
}

Json type1_report(const sim::ErrorRateTable& table, const RunManifest& manifest,
                  bool include_pvalues) {
    Json arr = Json::array();
    for (const auto& r : table.rows) arr.push_back(to_json(r, include_pvalues));
    return {{"kind", "type1"}, {"manifest", to_json(manifest)}, {"rows", arr}};
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

std::string power_csv(const std::vector<sim::PowerCurve>& curves) {
    std::ostringstream os;
    os << "panel,n,sigma,variance_label,alpha,quantile_mode,mu_x,mu_y,delta,critical_value,"
          "proposed_power,t_power\n";
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const auto& c = curves[i].config;
        for (const auto& p : curves[i].points) {
            os << i << ',' << c.n << ',' << shortest(c.sigma) << ',' << c.variance_label << ','
               << shortest(c.alpha) << ',' << mode_name(c.quantile_mode) << ','
               << shortest(c.mu_x) << ',' << shortest(p.mu_y) << ',' << shortest(p.delta) << ','
               << shortest(p.critical_value) << ',' << shortest(p.proposed_power) << ','
               << shortest(p.t_power) << '\n';
        }
    }
    return os.str();
}

std::string power_plot_csv(const std::vector<sim::PowerCurve>& curves) {
    std::ostringstream os;
    os << "panel,n,sigma,noncentrality,proposed_power,t_power\n";
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const auto& c = curves[i].config;
        for (const auto& p : curves[i].points) {
            os << i << ',' << c.n << ',' << shortest(c.sigma) << ','
               << fixed(noncentrality(c, p.delta), 6) << ',' << fixed(p.proposed_power, 6) << ','
               << fixed(p.t_power, 6) << '\n';
        }
    }
    return os.str();
}

std::string type1_csv(const sim::ErrorRateTable& table) {
    std::ostringstream os;
    os << "n,variance_label,sigma,reps";
    const auto& alphas = table.rows.front().alphas;
    for (double a : alphas) os << ",proposed_" << shortest(a);
    for (double a : alphas) os << ",t_" << shortest(a);
    os << ",decision_mismatches\n";
    for (const auto& r : table.rows) {
        os << r.n << ',' << r.variance_label << ',' << shortest(r.sigma) << ',' << r.reps;
        for (double v : r.proposed_rate) os << ',' << fixed(v, 3);
        for (double v : r.t_rate) os << ',' << fixed(v, 3);
        os << ',' << r.decision_mismatches << '\n';
    }
    return os.str();
}

std::string pvalues_csv(const sim::ErrorRateTable& table) {
    std::ostringstream os;
    os << "row,n,sigma,replicate,proposed_p,t_p\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& r = table.rows[i];
        for (std::size_t k = 0; k < r.proposed_p.size(); ++k) {
            os << i << ',' << r.n << ',' << shortest(r.sigma) << ',' << k << ','
               << shortest(r.proposed_p[k]) << ',' << shortest(r.t_p[k]) << '\n';
        }
    }
    return os.str();
}

}  // namespace crossvar::report
