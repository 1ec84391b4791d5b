#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ssred {

enum class ErrorCode {
  invalid_prime,
  invalid_window,
  unsupported_digit,
  invalid_range,
  invalid_degree,
  vl_bound,
  not_polynomial,
  not_good_candidate,
  invalid_argument,
  elimination_incomplete,
  prediction_unavailable,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Raised for every violated precondition and for failed certifications.
/// The code is stable and is what the CLI maps onto its exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for errors caused by bad input rather than a failed check.
  bool is_input_error() const noexcept {
    return code_ != ErrorCode::elimination_incomplete;
  }

 private:
  ErrorCode code_;
};

}  // namespace ssred
