#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lucaspf {

enum class ErrorCode {
  not_coprime,
  zero_discriminant,
  degenerate,
  domain,
  not_prime,
  zero_input,
  non_integer_result,
  undecidable,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure in the library is reported through this type; the code
// names the violated rule and what() carries the explanation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::not_coprime: return "NotCoprime";
    case ErrorCode::zero_discriminant: return "ZeroDiscriminant";
    case ErrorCode::degenerate: return "Degenerate";
    case ErrorCode::domain: return "DomainError";
    case ErrorCode::not_prime: return "NotPrime";
    case ErrorCode::zero_input: return "ZeroInput";
    case ErrorCode::non_integer_result: return "NonIntegerResult";
    case ErrorCode::undecidable: return "Undecidable";
  }
  return "Unknown";
}

}  // namespace lucaspf
