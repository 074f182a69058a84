#pragma once

#include <stdexcept>
#include <string>

namespace frobcat {

/// Structure constants or shapes that do not fit together.
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Objects or morphisms drawn from different ambient categories.
class CategoryMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on input that violates its stated precondition.
class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact symbolic work refused because the input exceeds the configured size.
class CapacityExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A filtered algebra whose degree-zero step is not the unit object.
class NotConnected : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

/// A computed result contradicts a guaranteed property; indicates a bug.
class InternalFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Document parse failure with the offending field path.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace frobcat
