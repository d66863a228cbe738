#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cppgen {

/// A precondition on the numeric domain of an operation was violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested closed form does not exist for this origin condition.
class UnsupportedRegime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A statistical test was given fewer observations than it can handle.
class InsufficientSamples : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fewer atoms than requested for removal.
class InsufficientAtoms : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature did not reach the requested tolerance.
class ConvergenceFailure : public std::runtime_error {
 public:
  ConvergenceFailure(const std::string& what, double achieved_rel_error)
      : std::runtime_error(what), achieved_(achieved_rel_error) {}
  double achieved_relative_error() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// Rejection sampling gave up after the configured number of attempts.
class AttemptsExhausted : public std::runtime_error {
 public:
  AttemptsExhausted(const std::string& what, std::uint64_t attempts,
                    double acceptance_rate)
      : std::runtime_error(what),
        attempts_(attempts),
        acceptance_rate_(acceptance_rate) {}
  std::uint64_t attempts() const noexcept { return attempts_; }
  double acceptance_rate() const noexcept { return acceptance_rate_; }

 private:
  std::uint64_t attempts_;
  double acceptance_rate_;
};

}  // namespace cppgen
