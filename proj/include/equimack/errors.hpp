#pragma once

#include <stdexcept>
#include <string>

namespace equimack {

/// Bad arguments from a caller (mismatched dimensions, unknown subgroup, ...).
struct InvalidInputError : std::runtime_error {
  explicit InvalidInputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured cap (group order, search size) was exceeded.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The mathematically correct result cannot be stored in the data model,
/// e.g. a quotient level with torsion where a free level is required.
struct UnrepresentableError : std::runtime_error {
  explicit UnrepresentableError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An identity the library relies on failed to hold; signals a bug, not bad input.
struct InternalConsistencyError : std::runtime_error {
  explicit InternalConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace equimack
