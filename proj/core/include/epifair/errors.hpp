#pragma once

#include <stdexcept>
#include <string>

namespace epifair {

enum class errc {
  all_zero,
  zero_with_log_branch,
  empty_group,
  not_two_groups,
  too_few_agents,
  zero_denominator,
  negative_input,
  non_finite,
  length_mismatch,
  invalid_probability,
  negative_entry,
  dimension_mismatch,
  invalid_target,
  horizon_too_short,
  heterogeneous_input,
  parse_error,
  invalid_value,
  io_error,
};

const char* to_string(errc code) noexcept;

/// Error type shared by all modules; carries a machine-readable code
/// alongside the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace epifair
