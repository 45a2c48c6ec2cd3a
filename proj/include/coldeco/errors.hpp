#pragma once

#include <stdexcept>
#include <string>

namespace coldeco {

/// Invalid physical input; `field` names the offending parameter.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Config-file or CLI option problem; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Adaptive quadrature failed to reach the requested tolerance.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double worst_panel_error,
                    double panel_lo, double panel_hi)
        : std::runtime_error(what),
          worst_panel_error_(worst_panel_error), panel_lo_(panel_lo), panel_hi_(panel_hi) {}
    double worst_panel_error() const { return worst_panel_error_; }
    double panel_lo() const { return panel_lo_; }
    double panel_hi() const { return panel_hi_; }

private:
    double worst_panel_error_;
    double panel_lo_, panel_hi_;
};

/// Brute-force validator misuse (dimension cap, bad model).
class OracleError : public std::runtime_error {
public:
    explicit OracleError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace coldeco
