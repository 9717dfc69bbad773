#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vpotts {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown ids, malformed subsets, incomplete parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Attempt to contract a loop.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Semigroup addition between incompatible weight realizations.
class WeightTypeError : public Error {
 public:
  using Error::Error;
};

/// Polynomial evaluation hit a variable with no binding.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// v = e^{beta J} - 1 vanished where the formula divides by it.
class SingularInputError : public Error {
 public:
  using Error::Error;
};

/// A guarded enumeration would exceed its configured bound.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t bound)
      : Error(what + " (bound " + std::to_string(bound) + ")"), bound_(bound) {}

  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t bound_;
};

/// Graph document failed schema validation. `path` is a JSON pointer.
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace vpotts
