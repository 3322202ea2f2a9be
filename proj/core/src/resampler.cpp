// Copyright 2026 The ovaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ovaug/resampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "ovaug/error.hpp"

namespace ovaug {
namespace {

constexpr double kStopbandDb = 100.0;
constexpr double kPassEdge = 0.45;  // fraction of the lower sample rate
constexpr double kStopEdge = 0.50;

double bessel_i0(double x) {
  double sum = 1.0;
  double term = 1.0;
  const double q = x * x / 4.0;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k));
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum;
}

}  // namespace

double kaiser_beta(double a) {
  if (a > 50.0) return 0.1102 * (a - 8.7);
  if (a >= 21.0) return 0.5842 * std::pow(a - 21.0, 0.4) + 0.07886 * (a - 21.0);
  return 0.0;
}

Resampler::Resampler(int in_rate, int out_rate) : in_rate_(in_rate), out_rate_(out_rate) {
  if (in_rate <= 0 || out_rate <= 0) throw InvalidArgument("sample rates must be positive");
  const int g = std::gcd(in_rate, out_rate);
  up_ = out_rate / g;
  down_ = in_rate / g;

  // Design at the intermediate rate in_rate * L.
  const double fs_mid = static_cast<double>(in_rate) * up_;
  const double f_low = static_cast<double>(std::min(in_rate, out_rate));
  const double transition = (kStopEdge - kPassEdge) * f_low;
  const double cutoff = 0.5 * (kPassEdge + kStopEdge) * f_low;  // -6 dB point
  const double delta_omega = 2.0 * std::numbers::pi * transition / fs_mid;
  auto n_taps = static_cast<std::size_t>(std::ceil((kStopbandDb - 8.0) / (2.285 * delta_omega))) + 1;
  if (n_taps % 2 == 0) ++n_taps;
  delay_ = (n_taps - 1) / 2;

  const double beta = kaiser_beta(kStopbandDb);
  const double i0_beta = bessel_i0(beta);
  const double fc = cutoff / fs_mid;  // cycles per intermediate sample
  taps_.resize(n_taps);
  for (std::size_t i = 0; i < n_taps; ++i) {
    const double t = static_cast<double>(i) - static_cast<double>(delay_);
    const double sinc = t == 0.0 ? 2.0 * fc : std::sin(2.0 * std::numbers::pi * fc * t) / (std::numbers::pi * t);
    const double r = t / static_cast<double>(delay_);
    const double win = bessel_i0(beta * std::sqrt(std::max(0.0, 1.0 - r * r))) / i0_beta;
    taps_[i] = sinc * win * up_;
  }

  // Each polyphase branch sums to exactly one so that DC passes unchanged
  // regardless of the output phase.
  for (int phase = 0; phase < up_; ++phase) {
    double sum = 0.0;
    for (std::size_t i = static_cast<std::size_t>(phase); i < n_taps; i += static_cast<std::size_t>(up_)) sum += taps_[i];
    for (std::size_t i = static_cast<std::size_t>(phase); i < n_taps; i += static_cast<std::size_t>(up_)) taps_[i] /= sum;
  }
}

std::size_t Resampler::output_length(std::size_t n) const {
  const auto L = static_cast<std::size_t>(up_);
  const auto M = static_cast<std::size_t>(down_);
  return (n * L + M - 1) / M;
}

Waveform Resampler::process(const Waveform& x) const {
  if (x.sample_rate != in_rate_) {
    throw InvalidArgument("resampler expects " + std::to_string(in_rate_) + " Hz input, got " +
                          std::to_string(x.sample_rate) + " Hz");
  }
  const std::size_t out_len = output_length(x.size());
  std::vector<double> out(out_len, 0.0);
  const auto L = static_cast<long long>(up_);
  const auto M = static_cast<long long>(down_);
  const auto n_taps = static_cast<long long>(taps_.size());
  const auto n_in = static_cast<long long>(x.size());
  const auto D = static_cast<long long>(delay_);

  // y[m] = sum_i x[i] * h[m*M + D - i*L], restricted to 0 <= index < n_taps.
  for (std::size_t m = 0; m < out_len; ++m) {
    const long long pos = static_cast<long long>(m) * M + D;
    long long i_hi = pos / L;
    long long i_lo = pos - (n_taps - 1) <= 0 ? 0 : (pos - (n_taps - 1) + L - 1) / L;
    i_hi = std::min(i_hi, n_in - 1);
    double acc = 0.0;
    for (long long i = i_lo; i <= i_hi; ++i) acc += x.samples[static_cast<std::size_t>(i)] * taps_[static_cast<std::size_t>(pos - i * L)];
    out[m] = acc;
  }
  return Waveform(std::move(out), out_rate_);
}

Waveform resample(const Waveform& x, int target_rate) {
  if (target_rate <= 0) throw InvalidArgument("target rate must be positive");
  if (x.sample_rate <= 0) throw InvalidArgument("input sample rate must be positive");
  if (target_rate == x.sample_rate) return x;
  return Resampler(x.sample_rate, target_rate).process(x);
}

}  // namespace ovaug
