#pragma once

#include <stdexcept>
#include <string>

namespace charvar {

/// Bad user-supplied input (dimensions, parses, preconditions). CLI exit code 2.
struct ValidationError : std::invalid_argument {
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

struct DimensionError : ValidationError {
  explicit DimensionError(const std::string& what) : ValidationError(what) {}
};

/// Matrix is not an automorphism of Z^r (|det| != 1).
struct NotAutomorphismError : ValidationError {
  explicit NotAutomorphismError(const std::string& what) : ValidationError(what) {}
};

/// Enumeration size cap exceeded. CLI exit code 3.
struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace charvar
