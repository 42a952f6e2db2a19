#pragma once

#include <stdexcept>
#include <string>

namespace volwing {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the mathematical domain of an operation.
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

/// Option price outside the static no-arbitrage band.
class band_error : public error {
public:
    explicit band_error(const std::string& what) : error(what) {}
};

/// Wing formula evaluated outside its asymptotic regime.
class wing_error : public error {
public:
    explicit wing_error(const std::string& what) : error(what) {}
};

/// Substitute curve too far from the pricing function for any wing regime.
class regime_error : public error {
public:
    explicit regime_error(const std::string& what) : error(what) {}
};

/// Adaptive quadrature failed to reach the requested tolerance.
class quadrature_error : public error {
public:
    quadrature_error(const std::string& what, double achieved_rel_err)
        : error(what + " (achieved relative error " + std::to_string(achieved_rel_err) + ")"),
          achieved(achieved_rel_err) {}
    double achieved;
};

/// Probe grid unusable (too short, wrong ordering, nonpositive values, ...).
class grid_error : public error {
public:
    explicit grid_error(const std::string& what) : error(what) {}
};

/// Invalid experiment / CLI configuration.
class config_error : public error {
public:
    explicit config_error(const std::string& what) : error(what) {}
};

}  // namespace volwing
