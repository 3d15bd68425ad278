#pragma once

#include <stdexcept>
#include <string>

namespace bmcoc {

/// Invalid configuration text or parameter value.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Numeric failure during a run (non-finite state, mismatched grids, ...).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Bad argument to a pure function (negative concentration, empty window).
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace bmcoc
