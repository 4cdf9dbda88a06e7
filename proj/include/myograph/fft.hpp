#pragma once

#include <complex>
#include <span>
#include <vector>

namespace myo::fft {

std::size_t next_pow2(std::size_t n);

/// Real-to-complex FFT. Input size must be a power of two; output has n/2+1 bins.
std::vector<std::complex<double>> rfft(std::span<const double> x);

/// Inverse of rfft, scaled so irfft(rfft(x), n) == x. n must match the forward size.
std::vector<double> irfft(std::span<const std::complex<double>> spectrum, std::size_t n);

/// Circularly shifts x by `delay_s` seconds (positive delays the signal) using a
/// frequency-domain phase ramp. Sub-sample delays are exact for band-limited content.
std::vector<double> fractional_delay(std::span<const double> x, double delay_s, double rate_hz);

}  // namespace myo::fft
