#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace robinwall {

/// Argument outside the mathematical domain of an operation (non-positive
/// field, Dirichlet input to a Robin-only expansion, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive quadrature or iteration ran out of budget. Carries the best
/// estimate reached so callers can decide whether it is usable.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double estimate, double error)
      : std::runtime_error(what), estimate_(estimate), error_(error) {}

  double estimate() const noexcept { return estimate_; }
  double error() const noexcept { return error_; }

 private:
  double estimate_;
  double error_;
};

/// Root isolation failed. `trace` holds the scanned (E, F(E)) samples.
class BracketError : public std::runtime_error {
 public:
  BracketError(const std::string& what,
               std::vector<std::pair<double, double>> trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}

  const std::vector<std::pair<double, double>>& trace() const noexcept {
    return trace_;
  }

 private:
  std::vector<std::pair<double, double>> trace_;
};

/// Two independent routes to the same quantity disagree beyond tolerance.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace robinwall
