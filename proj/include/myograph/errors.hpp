#pragma once

#include <stdexcept>
#include <string>

namespace myo {

enum class ErrorCode {
  // input / configuration problems
  malformed_file,
  non_finite_sample,
  metadata_mismatch,
  unsupported_rate,
  band_invalid,
  spec_invalid,
  io_failure,
  duplicate_trial_level,
  invalid_config,
  // analysis problems (valid input, no usable result)
  region_too_short,
  column_out_of_range,
  too_few_channels,
  not_enough_clean_channels,
  empty_signal,
  signal_too_short,
  zero_power,
  window_too_short,
  search_did_not_converge,
  duration_too_short,
  too_few_points,
  // internal invariant violations
  wrong_montage_kind,
  invariant_violation,
};

enum class ErrorCategory { input, analysis, internal };

const char* error_code_name(ErrorCode code);
ErrorCategory error_category(ErrorCode code);

/// Exit code used by the CLI: 2 input error, 3 analysis error, 4 internal.
int error_exit_code(ErrorCategory cat);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }
  ErrorCategory category() const { return error_category(code_); }
  const std::string& stage() const { return stage_; }

  /// Tags the pipeline stage an error surfaced from (ingest, filter, ...).
  void set_stage(std::string stage) { stage_ = std::move(stage); }

 private:
  ErrorCode code_;
  std::string stage_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace myo
