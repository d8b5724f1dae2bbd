#pragma once

#include <stdexcept>
#include <string>

namespace cvml {

/// Malformed or non-finite input (bad parameters, NaN components, empty sets).
struct InvalidInput : std::invalid_argument {
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A distance value escaped the cone of admissible values.
struct RangeViolation : std::runtime_error {
  explicit RangeViolation(const std::string& what) : std::runtime_error(what) {}
};

/// A point label was requested that the space does not contain.
struct UnknownLabel : std::runtime_error {
  explicit UnknownLabel(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cvml
