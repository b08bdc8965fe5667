#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace gendawson {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    /// Short machine-readable category, e.g. "overflow".
    virtual const char* kind() const noexcept { return "error"; }
};

/// Not enough derivative data supplied for the requested order.
class InputLengthError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "input-length"; }
};

/// Index or parameter outside its valid range, or non-finite input.
class DomainError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "domain"; }
};

/// Malformed text (b-spec, matrix file, grid).
class ParseError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "parse"; }
};

/// A floating-point quantity left the representable range.
/// Carries the derivative order or abscissa at which it happened, when known.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what,
                           std::optional<int> order = std::nullopt,
                           std::optional<double> x = std::nullopt)
        : Error(what), order_(order), x_(x) {}

    const char* kind() const noexcept override { return "overflow"; }
    std::optional<int> order() const noexcept { return order_; }
    std::optional<double> x() const noexcept { return x_; }

private:
    std::optional<int> order_;
    std::optional<double> x_;
};

/// Adaptive quadrature did not reach its tolerance within the depth cap.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double best_estimate, double est_error)
        : Error(what), best_estimate_(best_estimate), est_error_(est_error) {}

    const char* kind() const noexcept override { return "convergence"; }
    double best_estimate() const noexcept { return best_estimate_; }
    double est_error() const noexcept { return est_error_; }

private:
    double best_estimate_;
    double est_error_;
};

/// ODE state became non-finite.
class DivergenceError : public Error {
public:
    DivergenceError(const std::string& what, double last_good_x)
        : Error(what), last_good_x_(last_good_x) {}

    const char* kind() const noexcept override { return "divergence"; }
    double last_good_x() const noexcept { return last_good_x_; }

private:
    double last_good_x_;
};

/// A Riccati witness failed its residual check.
class WitnessError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "witness"; }
};

}  // namespace gendawson
