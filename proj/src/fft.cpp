#include "myograph/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace myo::fft {

namespace {

// Plan creation is not thread safe in FFTW; executing a cached plan on
// caller-owned buffers via the new-array interface is.
std::mutex g_plan_mutex;

struct PlanCache {
  std::map<std::size_t, fftw_plan> forward;
  std::map<std::size_t, fftw_plan> inverse;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

fftw_plan forward_plan(std::size_t n) {
  std::lock_guard lock(g_plan_mutex);
  auto& fwd = cache().forward;
  auto it = fwd.find(n);
  if (it != fwd.end()) return it->second;
  double* in = fftw_alloc_real(n);
  fftw_complex* out = fftw_alloc_complex(n / 2 + 1);
  fftw_plan p = fftw_plan_dft_r2c_1d(static_cast<int>(n), in, out,
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(in);
  fftw_free(out);
  fwd.emplace(n, p);
  return p;
}

fftw_plan inverse_plan(std::size_t n) {
  std::lock_guard lock(g_plan_mutex);
  auto& inv = cache().inverse;
  auto it = inv.find(n);
  if (it != inv.end()) return it->second;
  fftw_complex* in = fftw_alloc_complex(n / 2 + 1);
  double* out = fftw_alloc_real(n);
  fftw_plan p = fftw_plan_dft_c2r_1d(static_cast<int>(n), in, out,
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(in);
  fftw_free(out);
  inv.emplace(n, p);
  return p;
}

}  // namespace

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<std::complex<double>> rfft(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n == 0) throw std::invalid_argument("rfft: empty input");
  std::vector<double> in(x.begin(), x.end());
  std::vector<std::complex<double>> out(n / 2 + 1);
  fftw_plan p = forward_plan(n);
  fftw_execute_dft_r2c(p, in.data(), reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

std::vector<double> irfft(std::span<const std::complex<double>> spectrum, std::size_t n) {
  if (n == 0 || spectrum.size() != n / 2 + 1)
    throw std::invalid_argument("irfft: spectrum size does not match n");
  // c2r destroys its input, so copy.
  std::vector<std::complex<double>> in(spectrum.begin(), spectrum.end());
  std::vector<double> out(n);
  fftw_plan p = inverse_plan(n);
  fftw_execute_dft_c2r(p, reinterpret_cast<fftw_complex*>(in.data()), out.data());
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& v : out) v *= scale;
  return out;
}

std::vector<double> fractional_delay(std::span<const double> x, double delay_s,
                                     double rate_hz) {
  const std::size_t n = x.size();
  auto spec = rfft(x);
  const double df = rate_hz / static_cast<double>(n);
  for (std::size_t k = 0; k < spec.size(); ++k) {
    const double phase = -2.0 * std::numbers::pi * df * static_cast<double>(k) * delay_s;
    spec[k] *= std::complex<double>(std::cos(phase), std::sin(phase));
  }
  if (n % 2 == 0) spec.back() = std::complex<double>(spec.back().real(), 0.0);
  return irfft(spec, n);
}

}  // namespace myo::fft
