#pragma once

#include <stdexcept>
#include <string>

namespace bbk {

/// Thrown when a kernel order other than the supported one is requested.
class unsupported_order : public std::invalid_argument {
  public:
    explicit unsupported_order(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown on numerical breakdown (singular or ill-conditioned solve).
class numerical_error : public std::runtime_error {
  public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bbk
