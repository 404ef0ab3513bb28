#pragma once

#include <stdexcept>
#include <string>

namespace ecp {

/// Malformed input text (DIMACS files, certificate row files).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An argument violates a documented precondition.
struct ParameterError : std::invalid_argument {
  explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Instance exceeds an enumeration cap; the exact oracle refuses to run.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal contract was broken by the caller (e.g. branching on an
/// integral point).
struct ContractViolation : std::logic_error {
  explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace ecp
