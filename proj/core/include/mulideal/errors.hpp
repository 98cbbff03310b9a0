#pragma once

#include <stdexcept>
#include <string>

namespace mulideal {

// Raised when an input is well formed but outside the domain of an operation:
// the zero ideal, a point on the zero scheme, a curve inside the zero scheme.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Raised for malformed text/JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mulideal
