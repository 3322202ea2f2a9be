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

#pragma once

#include <cstddef>
#include <vector>

#include "ovaug/signal.hpp"

namespace ovaug {

/// Rational-ratio sample-rate converter: upsample by L, low-pass with a
/// Kaiser-windowed sinc, downsample by M, evaluated in polyphase form.
///
/// The pass band extends to 0.45 * min(in, out) and the stop band starts at
/// the lower Nyquist frequency with at least 100 dB design attenuation. The
/// filter is linear-phase and its delay is removed, so output sample m is
/// aligned with time m / out_rate of the input.
class Resampler {
 public:
  Resampler(int in_rate, int out_rate);

  int in_rate() const { return in_rate_; }
  int out_rate() const { return out_rate_; }
  int up() const { return up_; }
  int down() const { return down_; }
  std::size_t num_taps() const { return taps_.size(); }

  /// Output length for an input of n samples: ceil(n * L / M).
  std::size_t output_length(std::size_t n) const;

  Waveform process(const Waveform& x) const;

 private:
  int in_rate_;
  int out_rate_;
  int up_;
  int down_;
  std::size_t delay_;  // (num_taps - 1) / 2, in upsampled samples
  std::vector<double> taps_;
};

/// Convenience wrapper; returns x unchanged when the rates already match.
Waveform resample(const Waveform& x, int target_rate);

/// Kaiser window shape parameter for a given stop-band attenuation in dB.
double kaiser_beta(double attenuation_db);

}  // namespace ovaug
