#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace frak {

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configuration value (rule size, grid size, tolerance) is out of range.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed expression text. `position` is a zero-based byte offset.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownIdentifier : public std::runtime_error {
 public:
  UnknownIdentifier(const std::string& name, std::size_t position)
      : std::runtime_error("unknown identifier '" + name + "' at offset " +
                           std::to_string(position)),
        name_(name),
        position_(position) {}

  const std::string& name() const noexcept { return name_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string name_;
  std::size_t position_;
};

/// Raised when an expression leaves the domain of one of its operations.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The forcing took a negative value, so T would leave the cone of
/// non-negative functions.
class ConeViolation : public std::runtime_error {
 public:
  ConeViolation(const std::string& what, double t, double u, double g)
      : std::runtime_error(what), t(t), u(u), g(g) {}
  double t, u, g;
};

class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, std::vector<double> trace)
      : std::runtime_error(what), trace(std::move(trace)) {}
  std::vector<double> trace;
};

class MetricAxiomError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace frak
