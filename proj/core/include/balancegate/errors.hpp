#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace balancegate {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ANF expression. `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Inputs that violate a precondition (layout, polynomial, seed, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured size/time guard was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Self-diagnostic failure: a result left its mathematically possible range.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace balancegate
