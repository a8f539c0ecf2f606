#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

/// Every failure raised by the library carries a stable kind tag (used in
/// CLI diagnostics) and, where meaningful, the indices of the offending data.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message, std::vector<long> indices = {})
      : std::runtime_error(message), kind_(std::move(kind)), indices_(std::move(indices)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::vector<long>& indices() const noexcept { return indices_; }

 private:
  std::string kind_;
  std::vector<long> indices_;
};

/// The input is wrong: malformed file, invalid fan, bad argument.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A structural identity that must hold for every valid fan was violated.
/// Indicates a bug, never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace toric
