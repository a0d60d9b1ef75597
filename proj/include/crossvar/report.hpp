#pragma once

// JSON and CSV renderings of test results and study outputs.
//
// JSON objects carry sorted keys and shortest round-trip number formatting,
// so parsing a report and rendering it again yields the same bytes.

#include "crossvar/hypothesis_tests.hpp"
#include "crossvar/simulation.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace crossvar::report {

using Json = nlohmann::json;

struct RunManifest {
    std::string command;
    std::map<std::string, std::string> flags;
    std::uint64_t seed = 0;
    bool has_seed = false;
    std::string version;
    /// Input label -> FNV-1a 64-bit digest (16 hex digits).
    std::map<std::string, std::string> input_digests;
};

std::string_view toolkit_version();

/// FNV-1a 64 over the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);
/// Digest of a numeric vector via its shortest round-trip text form.
std::string digest_values(const std::vector<double>& values);

Json to_json(const RunManifest& manifest);
Json to_json(const TestResult& result);
Json to_json(const sim::StudyConfig& config);
Json to_json(const sim::PowerCurve& curve);
Json to_json(const sim::ErrorRateRow& row, bool include_pvalues);

Json power_report(const std::vector<sim::PowerCurve>& curves, const RunManifest& manifest);
Json type1_report(const sim::ErrorRateTable& table, const RunManifest& manifest, bool include_pvalues);

/// Pretty-printed JSON with a trailing newline.
std::string render(const Json& doc);

/// One row per (panel, grid point).
std::string power_csv(const std::vector<sim::PowerCurve>& curves);
/// Plot-ready: panel, standardized shift, proposed power, t power.
std::string power_plot_csv(const std::vector<sim::PowerCurve>& curves);
/// One row per table row, one column pair per alpha.
std::string type1_csv(const sim::ErrorRateTable& table);
/// Long format: row, replicate, proposed p, t p.
std::string pvalues_csv(const sim::ErrorRateTable& table);

/// Fixed-point with `digits` decimals.
std::string fixed(double value, int digits);
/// Shortest text that parses back to the same double.
std::string shortest(double value);

}  // namespace crossvar::report
