#pragma once

#include <stdexcept>
#include <string>

namespace species {

// An argument lies outside the domain of an operation (label not in a set,
// term living on the wrong ground set, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition does not hold (non-positive substitution
// argument, r >= s for port maps, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A construction was refused because an input lacks a required certificate.
// hypothesis() names the missing property, e.g. "cocommutative".
class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(std::string hypothesis, const std::string& what)
      : std::runtime_error(what), hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

}  // namespace species
