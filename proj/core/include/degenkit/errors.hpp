#pragma once

#include <stdexcept>
#include <string>

namespace degenkit {

/// Raised when an enumeration would exceed the documented size limit.
class ResourceLimitError : public std::runtime_error {
public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a cone has the wrong dimension for the requested operation.
class DimensionError : public std::invalid_argument {
public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace degenkit
