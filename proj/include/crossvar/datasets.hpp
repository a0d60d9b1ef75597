#pragma once

// The fourteen two-group example datasets, values as printed.

#include <span>
#include <string_view>
#include <vector>

namespace crossvar::data {

struct Dataset {
    std::string_view name;  // "ds1" .. "ds14"
    std::vector<double> x;
    std::vector<double> y;
};

std::span<const Dataset> catalog();

/// Lookup by name ("ds4"); throws ConfigError for an unknown name.
const Dataset& find(std::string_view name);

}  // namespace crossvar::data
