#ifndef BTSOLVE_ERRORS_HPP
#define BTSOLVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace btsolve {

/// Base class for all solver failures.
class SolverError : public std::runtime_error {
  public:
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Leading quartic coefficient is zero.
class ZeroLeadingCoefficientError : public SolverError {
  public:
    explicit ZeroLeadingCoefficientError(const std::string& msg) : SolverError(msg) {}
};

/// Characteristic polynomial does not have the required distinct roots.
class DegenerateRootsError : public SolverError {
  public:
    explicit DegenerateRootsError(const std::string& msg) : SolverError(msg) {}
};

/// omega^2 + r_k^4 vanished for some root (sinusoidal weights undefined).
class ResonantDenominatorError : public SolverError {
  public:
    explicit ResonantDenominatorError(const std::string& msg) : SolverError(msg) {}
};

/// Adaptive quadrature could not reach the requested tolerance.
class QuadratureError : public SolverError {
  public:
    QuadratureError(const std::string& msg, double achieved)
        : SolverError(msg + " (achieved error " + std::to_string(achieved) + ")"),
          achieved_error(achieved) {}
    double achieved_error;
};

/// A series (or its acceleration) failed its internal error estimate.
class NonConvergenceError : public SolverError {
  public:
    NonConvergenceError(const std::string& msg, double largest_term, int terms_used)
        : SolverError(msg + " (largest term " + std::to_string(largest_term) +
                      ", terms used " + std::to_string(terms_used)),
          largest_term(largest_term),
          terms_used(terms_used) {}
    double largest_term;
    int terms_used;
};

/// True result exceeds the representable floating-point range.
class OverflowRangeError : public SolverError {
  public:
    explicit OverflowRangeError(const std::string& msg) : SolverError(msg) {}
};

/// No evaluation strategy can certify the requested accuracy here.
class UnsupportedParameterError : public SolverError {
  public:
    explicit UnsupportedParameterError(const std::string& msg) : SolverError(msg) {}
};

}  // namespace btsolve

#endif  // BTSOLVE_ERRORS_HPP
