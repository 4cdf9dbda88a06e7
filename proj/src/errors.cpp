#include "myograph/errors.hpp"

namespace myo {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_file: return "MalformedFile";
    case ErrorCode::non_finite_sample: return "NonFiniteSample";
    case ErrorCode::metadata_mismatch: return "MetadataMismatch";
    case ErrorCode::unsupported_rate: return "UnsupportedRate";
    case ErrorCode::band_invalid: return "BandInvalid";
    case ErrorCode::spec_invalid: return "SpecInvalid";
    case ErrorCode::io_failure: return "IoFailure";
    case ErrorCode::duplicate_trial_level: return "DuplicateTrialLevel";
    case ErrorCode::invalid_config: return "InvalidConfig";
    case ErrorCode::region_too_short: return "RegionTooShort";
    case ErrorCode::column_out_of_range: return "ColumnOutOfRange";
    case ErrorCode::too_few_channels: return "TooFewChannels";
    case ErrorCode::not_enough_clean_channels: return "NotEnoughCleanChannels";
    case ErrorCode::empty_signal: return "EmptySignal";
    case ErrorCode::signal_too_short: return "SignalTooShort";
    case ErrorCode::zero_power: return "ZeroPower";
    case ErrorCode::window_too_short: return "WindowTooShort";
    case ErrorCode::search_did_not_converge: return "SearchDidNotConverge";
    case ErrorCode::duration_too_short: return "DurationTooShort";
    case ErrorCode::too_few_points: return "TooFewPoints";
    case ErrorCode::wrong_montage_kind: return "WrongMontageKind";
    case ErrorCode::invariant_violation: return "InvariantViolation";
  }
  return "UnknownError";
}

ErrorCategory error_category(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_file:
    case ErrorCode::non_finite_sample:
    case ErrorCode::metadata_mismatch:
    case ErrorCode::unsupported_rate:
    case ErrorCode::band_invalid:
    case ErrorCode::spec_invalid:
    case ErrorCode::io_failure:
    case ErrorCode::duplicate_trial_level:
    case ErrorCode::invalid_config:
      return ErrorCategory::input;
    case ErrorCode::region_too_short:
    case ErrorCode::column_out_of_range:
    case ErrorCode::too_few_channels:
    case ErrorCode::not_enough_clean_channels:
    case ErrorCode::empty_signal:
    case ErrorCode::signal_too_short:
    case ErrorCode::zero_power:
    case ErrorCode::window_too_short:
    case ErrorCode::search_did_not_converge:
    case ErrorCode::duration_too_short:
    case ErrorCode::too_few_points:
      return ErrorCategory::analysis;
    case ErrorCode::wrong_montage_kind:
    case ErrorCode::invariant_violation:
      return ErrorCategory::internal;
  }
  return ErrorCategory::internal;
}

int error_exit_code(ErrorCategory cat) {
  switch (cat) {
    case ErrorCategory::input: return 2;
    case ErrorCategory::analysis: return 3;
    case ErrorCategory::internal: return 4;
  }
  return 4;
}

void raise(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(error_code_name(code)) + ": " + message);
}

}  // namespace myo
