#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace seifert {

enum class ErrorCode {
  kNotSquare,
  kNotSymmetric,
  kDimensionMismatch,
  kSingularForm,
  kNonUnimodular,
  kNotCharacteristic,
  kInternalCongruenceViolation,
  kParityViolation,
  kOddSmaleInvariant,
  kSearchSpaceTooLarge,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when an Euler vector fails the mod-2 condition against a Gram row.
class NotCharacteristicError : public Error {
 public:
  NotCharacteristicError(std::size_t index, const std::string& what)
      : Error(ErrorCode::kNotCharacteristic, what), index_(index) {}

  std::size_t failing_index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace seifert
