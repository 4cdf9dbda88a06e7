#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "myograph/errors.hpp"

namespace myo {

/// Electrode grid of an HD-sEMG sensor. The muscle fiber axis runs along the
/// columns, so each column is a chain of `rows` electrodes spaced `ied_m` apart.
/// A 13x5 grid with one pad left unconnected gives the usual 64-channel sensor.
struct GridGeometry {
  int rows = 13;
  int cols = 5;
  double ied_m = 0.008;
  std::vector<std::pair<int, int>> missing_pads;  // (row, col), absent from data files

  bool pad_missing(int row, int col) const;
  int n_active_pads() const;
  void validate() const;
};

/// Default 64-pad layout: full 13x5 grid minus the (0,0) corner pad.
GridGeometry default_geometry();

enum class Condition { before_fatigue, fatigue, after_fatigue };

const char* condition_name(Condition c);
Condition condition_from_name(const std::string& name);

enum class TrimMode { fixed, force_threshold };

struct TrimPolicy {
  TrimMode mode = TrimMode::fixed;
  double fixed_trim_s = 0.5;
  double force_fraction = 0.5;
  void validate() const;
};

struct TrialMetadata {
  std::string subject_id;
  int mvc_percent = 10;
  Condition condition = Condition::before_fatigue;
  double sampling_rate_hz = 2048.0;
  std::optional<double> target_force_n;
  TrimPolicy trim;

  void validate(double band_high_hz = 400.0) const;
};

/// One trial: monopolar samples in millivolts, one column per channel, channel
/// index = grid_col * rows + grid_row (column major along the fiber axis).
/// Missing pads keep their slot, zero filled; consumers check geometry.
struct GridRecording {
  GridGeometry geometry;
  TrialMetadata meta;
  Eigen::MatrixXd samples;                 // n_samples x (rows*cols)
  std::optional<Eigen::VectorXd> force_n;  // n_samples

  int channel_index(int row, int col) const { return col * geometry.rows + row; }
  Eigen::Index n_samples() const { return samples.rows(); }
  double duration_s() const {
    return static_cast<double>(samples.rows()) / meta.sampling_rate_hz;
  }

  /// Ingestion-level invariants: shape, finiteness, >= 2 s of data.
  void validate() const;
};

struct TimeWindow {
  double start_s = 0.0;
  double length_s = 0.0;
  double end_s() const { return start_s + length_s; }
  double center_s() const { return start_s + 0.5 * length_s; }
};

}  // namespace myo
