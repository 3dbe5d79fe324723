#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fdl {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed arguments that violate an operation's precondition
/// (arity mismatch, dimension mismatch, empty sup, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input text/document.
class InputError : public Error {
 public:
  InputError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what : what + " at position " + std::to_string(position)),
        message_(what), position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix, for re-wrapping with context.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// A construct is not allowed by the active feature set.
class FeatureError : public InputError {
 public:
  using InputError::InputError;
};

/// A name (concept, role, individual, element) does not resolve.
class UnknownNameError : public InputError {
 public:
  using InputError::InputError;
};

/// A combinatorial search exceeded its configured cap.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Operation is not defined for the requested feature set.
class UnsupportedFeatureError : public Error {
 public:
  using Error::Error;
};

}  // namespace fdl
