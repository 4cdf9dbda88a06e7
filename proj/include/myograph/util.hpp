#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>

namespace myo {

/// Deterministic random stream. Gaussian draws use an explicit Box-Muller on
/// the raw 64-bit stream so output is identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

double mean(std::span<const double> x);
double variance(std::span<const double> x);  // population variance
double pearson(std::span<const double> a, std::span<const double> b);

/// Runs fn(i) for i in [0, n). Thread count comes from `threads` capped by
/// MYOGRAPH_THREADS when that is set; <=1 runs inline.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

int env_thread_cap();  // MYOGRAPH_THREADS or hardware_concurrency

/// FNV-1a 64-bit fingerprint of a file's bytes, as fixed-width hex.
std::string file_fingerprint(const std::string& path);

}  // namespace myo
