#pragma once

#include <filesystem>

#include "myograph/types.hpp"

namespace myo {

/// Reads a trial CSV plus its JSON metadata sidecar and validates the pair.
/// CSV layout: header `t,e_<row>_<col>,...[,force]`, channels column major
/// along the fiber axis, decimal point, comma separator, LF line endings.
GridRecording load_trial(const std::filesystem::path& signal_csv,
                         const std::filesystem::path& meta_json);

/// Writes the CSV + sidecar pair read back by load_trial. Values are written
/// with 12 significant digits so a round trip stays within 1e-9 relative.
void save_trial(const GridRecording& rec, const std::filesystem::path& signal_csv,
                const std::filesystem::path& meta_json);

/// Cuts the recording to its active region according to rec.meta.trim.
/// fixed: drops fixed_trim_s from each end. force_threshold: keeps the longest
/// contiguous run where force >= force_fraction * plateau force, the plateau
/// being the median of the force's upper quartile.
GridRecording trim_active_region(const GridRecording& rec);

}  // namespace myo
