#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gauge_atlas {

/// Stable machine-readable error codes. The CLI prints `to_string(code)` and
/// maps each code to its own exit status, so never reorder existing entries.
enum class ErrorCode {
  invalid_argument = 1,
  invalid_element,
  rank_mismatch,
  parse_error,
  schema_error,
  invariant_violation,
  degree_mismatch,
  ring_mismatch,
  missing_lift,
  missing_window,
  woodward_violation,
  fiber_mismatch,
  claim1_violation,
  inadmissible,
  degree_one_not_guaranteed,
  not_in_g_sigma,
  consistency_failure,
  unsupported,
  grid_mismatch,
  io_error,
  unknown_subcommand,
  enumeration_too_large,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::invalid_element: return "invalid_element";
    case ErrorCode::rank_mismatch: return "rank_mismatch";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::schema_error: return "schema_error";
    case ErrorCode::invariant_violation: return "invariant_violation";
    case ErrorCode::degree_mismatch: return "degree_mismatch";
    case ErrorCode::ring_mismatch: return "ring_mismatch";
    case ErrorCode::missing_lift: return "missing_lift";
    case ErrorCode::missing_window: return "missing_window";
    case ErrorCode::woodward_violation: return "woodward_violation";
    case ErrorCode::fiber_mismatch: return "fiber_mismatch";
    case ErrorCode::claim1_violation: return "claim1_violation";
    case ErrorCode::inadmissible: return "inadmissible";
    case ErrorCode::degree_one_not_guaranteed: return "degree_one_not_guaranteed";
    case ErrorCode::not_in_g_sigma: return "not_in_g_sigma";
    case ErrorCode::consistency_failure: return "consistency_failure";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::grid_mismatch: return "grid_mismatch";
    case ErrorCode::io_error: return "io_error";
    case ErrorCode::unknown_subcommand: return "unknown_subcommand";
    case ErrorCode::enumeration_too_large: return "enumeration_too_large";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gauge_atlas
