#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crossvar {

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Sample cannot support the requested statistic (n < 2, 0/0 ratios, zero variance).
class DegenerateSampleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid study or command configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An infinite series did not reach its stopping rule within the term budget.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, double partial_sum, std::size_t terms_used)
        : std::runtime_error(what), partial_sum_(partial_sum), terms_used_(terms_used) {}

    double partial_sum() const noexcept { return partial_sum_; }
    std::size_t terms_used() const noexcept { return terms_used_; }

private:
    double partial_sum_;
    std::size_t terms_used_;
};

/// Adaptive quadrature could not meet its error target.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double value, double error_estimate)
        : std::runtime_error(what), value_(value), error_estimate_(error_estimate) {}

    double value() const noexcept { return value_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double value_;
    double error_estimate_;
};

/// A log-magnitude series term exceeded the representable range.
class SeriesOverflowError : public std::overflow_error {
public:
    SeriesOverflowError(const std::string& what, double log_term)
        : std::overflow_error(what), log_term_(log_term) {}

    double log_term() const noexcept { return log_term_; }

private:
    double log_term_;
};

}  // namespace crossvar
