#pragma once

#include <stdexcept>
#include <string>

namespace plsec {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A parameter or argument is outside its documented domain.
// `field()` names the offending parameter when known.
class invalid_argument_error : public error {
public:
    explicit invalid_argument_error(const std::string& msg, std::string field = {})
        : error(msg), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// A numeric routine could not reach its requested accuracy.  Carries the best
// available estimate together with a bound on its error so callers can decide
// whether the partial result is still usable.
class accuracy_error : public error {
public:
    accuracy_error(const std::string& msg, double estimate, double error_bound)
        : error(msg), estimate_(estimate), error_bound_(error_bound) {}
    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

// The requested transform/integral does not converge for these parameters
// (e.g. a Mellin-Barnes integrand that decays too slowly on every contour).
class divergence_error : public error {
public:
    using error::error;
};

} // namespace plsec
