#include "crossvar/datasets.hpp"

#include "crossvar/errors.hpp"

#include <string>

namespace crossvar::data {

std::span<const Dataset> catalog() {
    static const std::vector<Dataset> kData = {
        {"ds1", {5, 7, 5, 3, 5, 3, 3, 9}, {8, 1, 4, 6, 6, 4, 1, 2}},
        {"ds2",
         {0.72, 0.68, 0.69, 0.66, 0.57, 0.66, 0.70, 0.63, 0.71, 0.73},
         {0.71, 0.83, 0.89, 0.57, 0.68, 0.74, 0.75, 0.67, 0.80, 0.78}},
        {"ds3", {42, 45, 40, 37, 41, 41, 48, 50, 45, 46}, {43, 51, 56, 40, 32, 54, 51, 55, 50, 48}},
        {"ds4", {33, 31, 34, 38, 32, 28}, {35, 42, 43, 41}},
        {"ds5",
         {35, 40, 12, 15, 21, 14, 46, 10, 28, 48, 16, 30, 32, 48, 31, 22, 12, 39, 19, 25},
         {2, 27, 38, 31, 1, 19, 1, 34, 3, 1, 2, 3, 2, 1, 2, 1, 3, 29, 37, 2}},
        // The first two X values are printed without a separating comma.
        {"ds6",
         {26, 21, 22, 26, 19, 22, 26, 25, 24, 21, 23, 23, 18, 29, 22},
         {18, 23, 21, 20, 20, 29, 20, 16, 20, 26, 21, 25, 17, 18, 19}},
        {"ds7", {520, 460, 500, 470}, {230, 270, 250, 280}},
        {"ds8", {3, 0, 6, 7, 4, 3, 2, 1, 4}, {5, 1, 5, 7, 10, 9, 7, 11, 8}},
        {"ds9", {16, 20, 21, 22, 23, 22, 27, 25, 27, 28}, {19, 22, 24, 24, 25, 25, 26, 26, 28, 32}},
        {"ds10", {91, 87, 99, 77, 88, 91}, {101, 110, 103, 93, 99, 104}},
        {"ds11", {10.11, 7.36, 6.34, 11.83, 8.61}, {3.28, 6.52, 2.28, 6.66, 4.55}},
        {"ds12", {4.79, 4.95, 2.52, 4.98, 4.99}, {7.90, 7.51, 6.62, 7.57, 7.49}},
        {"ds13", {3.99, 3.98, 4.03, 4.06, 3.84}, {6.68, 6.25, 6.97, 5.75, 4.01}},
        {"ds14", {10.16, 8.26, 16.23, 1.44, 0.66}, {28.06, 8.52, 25.39, 15.45, 16.03}},
    };
    return kData;
}

const Dataset& find(std::string_view name) {
    for (const auto& d : catalog()) {
        if (d.name == name) return d;
    }
    throw ConfigError("unknown dataset '" + std::string(name) + "' (expected ds1..ds14)");
}

}  // namespace crossvar::data
