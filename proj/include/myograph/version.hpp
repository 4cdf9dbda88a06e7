#pragma once

namespace myo {

inline constexpr const char* kToolName = "myograph";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace myo
