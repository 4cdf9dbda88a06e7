#include "myograph/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace myo {

using nlohmann::json;

// ---------------------------------------------------------------------------
// type validation

bool GridGeometry::pad_missing(int row, int col) const {
  for (const auto& [r, c] : missing_pads)
    if (r == row && c == col) return true;
  return false;
}

int GridGeometry::n_active_pads() const {
  return rows * cols - static_cast<int>(missing_pads.size());
}

void GridGeometry::validate() const {
  if (rows < 4)
    raise(ErrorCode::spec_invalid, "grid needs >= 4 rows for DD-based CV estimation");
  if (cols < 1) raise(ErrorCode::spec_invalid, "grid needs >= 1 column");
  if (!(ied_m > 0.0))
    raise(ErrorCode::spec_invalid, "inter-electrode distance must be positive");
  for (const auto& [r, c] : missing_pads)
    if (r < 0 || r >= rows || c < 0 || c >= cols)
      raise(ErrorCode::spec_invalid, "missing pad outside the grid");
}

GridGeometry default_geometry() {
  GridGeometry g;
  g.missing_pads = {{0, 0}};
  return g;
}

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::before_fatigue: return "before_fatigue";
    case Condition::fatigue: return "fatigue";
    case Condition::after_fatigue: return "after_fatigue";
  }
  return "before_fatigue";
}

Condition condition_from_name(const std::string& name) {
  if (name == "before_fatigue") return Condition::before_fatigue;
  if (name == "fatigue") return Condition::fatigue;
  if (name == "after_fatigue") return Condition::after_fatigue;
  raise(ErrorCode::malformed_file, "unknown condition '" + name + "'");
}

void TrimPolicy::validate() const {
  if (fixed_trim_s < 0.0) raise(ErrorCode::spec_invalid, "fixed_trim must be >= 0");
  if (!(force_fraction > 0.0 && force_fraction < 1.0))
    raise(ErrorCode::spec_invalid, "force_fraction must lie in (0, 1)");
}

void TrialMetadata::validate(double band_high_hz) const {
  static const int allowed[] = {10, 20, 40, 60, 70, 90};
  if (std::find(std::begin(allowed), std::end(allowed), mvc_percent) == std::end(allowed))
    raise(ErrorCode::metadata_mismatch, "mvc_percent must be one of 10,20,40,60,70,90");
  if (mvc_percent == 70 && condition != Condition::fatigue)
    raise(ErrorCode::metadata_mismatch, "70 %MVC is the exhaustion test (condition=fatigue)");
  if (condition == Condition::after_fatigue && mvc_percent != 10)
    raise(ErrorCode::metadata_mismatch, "after_fatigue is recorded at 10 %MVC");
  if (!(sampling_rate_hz > 2.0 * band_high_hz))
    raise(ErrorCode::unsupported_rate, "sampling rate below Nyquist for the analysis band");
  trim.validate();
}

void GridRecording::validate() const {
  geometry.validate();
  meta.validate();
  if (samples.cols() != static_cast<Eigen::Index>(geometry.rows) * geometry.cols)
    raise(ErrorCode::metadata_mismatch, "sample matrix width does not match geometry");
  if (samples.rows() < static_cast<Eigen::Index>(2.0 * meta.sampling_rate_hz))
    raise(ErrorCode::region_too_short, "trial shorter than 2 s");
  if (!samples.allFinite())
    raise(ErrorCode::non_finite_sample, "non-finite sample in recording");
  if (force_n) {
    if (force_n->size() != samples.rows())
      raise(ErrorCode::metadata_mismatch, "force channel length mismatch");
    if (!force_n->allFinite())
      raise(ErrorCode::non_finite_sample, "non-finite force sample");
  }
}

// ---------------------------------------------------------------------------
// metadata sidecar

namespace {

json trim_to_json(const TrimPolicy& t) {
  json j;
  j["mode"] = t.mode == TrimMode::fixed ? "fixed" : "force_threshold";
  j["fixed_trim_s"] = t.fixed_trim_s;
  j["force_fraction"] = t.force_fraction;
  return j;
}

TrimPolicy trim_from_json(const json& j) {
  TrimPolicy t;
  if (j.contains("mode")) {
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "fixed") {
      t.mode = TrimMode::fixed;
    } else if (mode == "force_threshold") {
      t.mode = TrimMode::force_threshold;
    } else {
      raise(ErrorCode::malformed_file, "unknown trim mode '" + mode + "'");
    }
  }
  if (j.contains("fixed_trim_s")) t.fixed_trim_s = j.at("fixed_trim_s").get<double>();
  if (j.contains("force_fraction")) t.force_fraction = j.at("force_fraction").get<double>();
  return t;
}

json metadata_to_json(const GridRecording& rec) {
  json j;
  j["subject_id"] = rec.meta.subject_id;
  j["mvc_percent"] = rec.meta.mvc_percent;
  j["condition"] = condition_name(rec.meta.condition);
  j["sampling_rate_hz"] = rec.meta.sampling_rate_hz;
  j["rows"] = rec.geometry.rows;
  j["cols"] = rec.geometry.cols;
  j["ied_m"] = rec.geometry.ied_m;
  json pads = json::array();
  for (const auto& [r, c] : rec.geometry.missing_pads) pads.push_back({r, c});
  j["missing_pads"] = pads;
  j["trim"] = trim_to_json(rec.meta.trim);
  if (rec.meta.target_force_n) j["target_force_n"] = *rec.meta.target_force_n;
  j["has_force"] = rec.force_n.has_value();
  return j;
}

void metadata_from_json(const json& j, GridGeometry& geom, TrialMetadata& meta,
                        bool& has_force) {
  try {
    meta.subject_id = j.at("subject_id").get<std::string>();
    meta.mvc_percent = j.at("mvc_percent").get<int>();
    meta.condition = condition_from_name(j.at("condition").get<std::string>());
    meta.sampling_rate_hz = j.at("sampling_rate_hz").get<double>();
    geom.rows = j.at("rows").get<int>();
    geom.cols = j.at("cols").get<int>();
    geom.ied_m = j.at("ied_m").get<double>();
    geom.missing_pads.clear();
    for (const auto& p : j.at("missing_pads"))
      geom.missing_pads.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    if (j.contains("trim")) meta.trim = trim_from_json(j.at("trim"));
    if (j.contains("target_force_n") && !j.at("target_force_n").is_null())
      meta.target_force_n = j.at("target_force_n").get<double>();
    has_force = j.value("has_force", false);
  } catch (const json::exception& e) {
    raise(ErrorCode::malformed_file, std::string("metadata sidecar: ") + e.what());
  }
}

std::string expected_header(const GridGeometry& geom, bool has_force) {
  std::string h = "t";
  for (int c = 0; c < geom.cols; ++c)
    for (int r = 0; r < geom.rows; ++r) {
      if (geom.pad_missing(r, c)) continue;
      h += ",e_" + std::to_string(r) + "_" + std::to_string(c);
    }
  if (has_force) h += ",force";
  return h;
}

double parse_field(std::string_view field, const std::filesystem::path& path,
                   std::size_t line_no) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    raise(ErrorCode::malformed_file, path.string() + ":" + std::to_string(line_no) +
                                         ": bad numeric field '" + std::string(field) + "'");
  if (!std::isfinite(v))
    raise(ErrorCode::non_finite_sample, path.string() + ":" + std::to_string(line_no) +
                                            ": non-finite sample");
  return v;
}

void append_number(std::string& out, double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  out.append(buf, res.ptr);
}

}  // namespace

// ---------------------------------------------------------------------------
// load / save

GridRecording load_trial(const std::filesystem::path& signal_csv,
                         const std::filesystem::path& meta_json) {
  std::ifstream meta_in(meta_json);
  if (!meta_in) raise(ErrorCode::io_failure, "cannot open " + meta_json.string());
  json meta_doc;
  try {
    meta_doc = json::parse(meta_in);
  } catch (const json::exception& e) {
    raise(ErrorCode::malformed_file, meta_json.string() + ": " + e.what());
  }

  GridRecording rec;
  bool has_force = false;
  metadata_from_json(meta_doc, rec.geometry, rec.meta, has_force);
  rec.geometry.validate();
  rec.meta.validate();

  std::ifstream in(signal_csv);
  if (!in) raise(ErrorCode::io_failure, "cannot open " + signal_csv.string());

  std::string line;
  if (!std::getline(in, line))
    raise(ErrorCode::malformed_file, signal_csv.string() + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const int n_emg = rec.geometry.n_active_pads();
  // Header is authoritative for the per-file layout; it must agree with the
  // sidecar's geometry and force declaration.
  const std::string want = expected_header(rec.geometry, has_force);
  if (line != want) {
    // Distinguish a wrong channel count from a malformed header.
    const auto got_cols = static_cast<int>(std::count(line.begin(), line.end(), ',')) + 1;
    const auto want_cols = static_cast<int>(std::count(want.begin(), want.end(), ',')) + 1;
    if (line.rfind("t,e_", 0) == 0 && got_cols != want_cols)
      raise(ErrorCode::metadata_mismatch,
            signal_csv.string() + ": header has " + std::to_string(got_cols - 1) +
                " data columns, sidecar declares " + std::to_string(want_cols - 1));
    raise(ErrorCode::malformed_file, signal_csv.string() + ": unexpected header");
  }

  const int n_fields = 1 + n_emg + (has_force ? 1 : 0);
  std::vector<double> flat;
  std::vector<double> force;
  std::size_t n_rows = 0;
  std::size_t line_no = 1;
  std::vector<double> row(n_fields);
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string_view rest(line);
    for (int f = 0; f < n_fields; ++f) {
      const std::size_t comma = rest.find(',');
      const bool last = f == n_fields - 1;
      if (last != (comma == std::string_view::npos))
        raise(ErrorCode::metadata_mismatch,
              signal_csv.string() + ":" + std::to_string(line_no) +
                  ": row has wrong number of columns");
      const std::string_view field = last ? rest : rest.substr(0, comma);
      row[f] = parse_field(field, signal_csv, line_no);
      if (!last) rest.remove_prefix(comma + 1);
    }
    flat.insert(flat.end(), row.begin() + 1, row.begin() + 1 + n_emg);
    if (has_force) force.push_back(row[n_fields - 1]);
    ++n_rows;
  }
  if (n_rows == 0) raise(ErrorCode::malformed_file, signal_csv.string() + ": no samples");

  // Expand into the full grid-width matrix, zero at missing pads.
  rec.samples = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n_rows),
                                      static_cast<Eigen::Index>(rec.geometry.rows) *
                                          rec.geometry.cols);
  std::size_t src = 0;
  for (std::size_t i = 0; i < n_rows; ++i) {
    int k = 0;
    for (int c = 0; c < rec.geometry.cols; ++c)
      for (int r = 0; r < rec.geometry.rows; ++r) {
        if (rec.geometry.pad_missing(r, c)) continue;
        rec.samples(static_cast<Eigen::Index>(i), rec.channel_index(r, c)) =
            flat[src + static_cast<std::size_t>(k)];
        ++k;
      }
    src += static_cast<std::size_t>(n_emg);
  }
  if (has_force) {
    rec.force_n = Eigen::Map<Eigen::VectorXd>(force.data(),
                                              static_cast<Eigen::Index>(force.size()));
  }
  rec.validate();
  return rec;
}

void save_trial(const GridRecording& rec, const std::filesystem::path& signal_csv,
                const std::filesystem::path& meta_json) {
  {
    std::ofstream meta_out(meta_json);
    if (!meta_out) raise(ErrorCode::io_failure, "cannot write " + meta_json.string());
    meta_out << metadata_to_json(rec).dump(2) << "\n";
    if (!meta_out) raise(ErrorCode::io_failure, "write failed: " + meta_json.string());
  }

  std::ofstream out(signal_csv);
  if (!out) raise(ErrorCode::io_failure, "cannot write " + signal_csv.string());
  out << expected_header(rec.geometry, rec.force_n.has_value()) << "\n";

  const double dt = 1.0 / rec.meta.sampling_rate_hz;
  std::string buf;
  buf.reserve(1024);
  for (Eigen::Index i = 0; i < rec.samples.rows(); ++i) {
    buf.clear();
    append_number(buf, static_cast<double>(i) * dt);
    for (int c = 0; c < rec.geometry.cols; ++c)
      for (int r = 0; r < rec.geometry.rows; ++r) {
        if (rec.geometry.pad_missing(r, c)) continue;
        buf.push_back(',');
        append_number(buf, rec.samples(i, rec.channel_index(r, c)));
      }
    if (rec.force_n) {
      buf.push_back(',');
      append_number(buf, (*rec.force_n)(i));
    }
    buf.push_back('\n');
    out << buf;
  }
  if (!out) raise(ErrorCode::io_failure, "write failed: " + signal_csv.string());
}

// ---------------------------------------------------------------------------
// trimming

namespace {

GridRecording slice(const GridRecording& rec, Eigen::Index start, Eigen::Index len) {
  GridRecording out;
  out.geometry = rec.geometry;
  out.meta = rec.meta;
  out.samples = rec.samples.middleRows(start, len);
  if (rec.force_n) out.force_n = rec.force_n->segment(start, len);
  return out;
}

}  // namespace

GridRecording trim_active_region(const GridRecording& rec) {
  const double fs = rec.meta.sampling_rate_hz;
  const Eigen::Index n = rec.samples.rows();
  const Eigen::Index min_len = static_cast<Eigen::Index>(std::ceil(fs));

  if (rec.meta.trim.mode == TrimMode::fixed) {
    const auto cut = static_cast<Eigen::Index>(std::llround(rec.meta.trim.fixed_trim_s * fs));
    const Eigen::Index len = n - 2 * cut;
    if (len < min_len)
      raise(ErrorCode::region_too_short, "active region shorter than 1 s after fixed trim");
    return slice(rec, cut, len);
  }

  if (!rec.force_n)
    raise(ErrorCode::metadata_mismatch, "force_threshold trim requires a force channel");
  const Eigen::VectorXd& f = *rec.force_n;

  // Plateau force: median of the upper quartile.
  std::vector<double> sorted(f.data(), f.data() + f.size());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t q3 = (sorted.size() * 3) / 4;
  std::vector<double> top(sorted.begin() + static_cast<std::ptrdiff_t>(q3), sorted.end());
  const double plateau = top[top.size() / 2];
  const double threshold = rec.meta.trim.force_fraction * plateau;

  Eigen::Index best_start = 0, best_len = 0, run_start = -1;
  for (Eigen::Index i = 0; i <= n; ++i) {
    const bool on = i < n && f(i) >= threshold;
    if (on && run_start < 0) run_start = i;
    if (!on && run_start >= 0) {
      if (i - run_start > best_len) {
        best_start = run_start;
        best_len = i - run_start;
      }
      run_start = -1;
    }
  }
  if (best_len < min_len)
    raise(ErrorCode::region_too_short, "active region above force threshold shorter than 1 s");
  return slice(rec, best_start, best_len);
}

}  // namespace myo
