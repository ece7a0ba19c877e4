#pragma once

#include <stdexcept>
#include <string>

namespace scnewton {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The square-root radicand of the Hamiltonian collapsed (branch point).
class DegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An adaptive integration could not complete (step limit, step underflow).
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A root finder or shooting solve did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual, double last_r, double last_theta)
        : std::runtime_error(what), residual_(residual), last_r_(last_r), last_theta_(last_theta) {}

    double residual() const noexcept { return residual_; }
    double last_r() const noexcept { return last_r_; }
    double last_theta() const noexcept { return last_theta_; }

private:
    double residual_;
    double last_r_;
    double last_theta_;
};

/// A path-following iterate left the region where the decrement bounds apply.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A bracketing search found no sign change.
class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace scnewton
