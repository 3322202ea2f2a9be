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

#include <array>
#include <cstdint>

#include "ovaug/random.hpp"
#include "ovaug/signal.hpp"
#include "ovaug/spatializer.hpp"

namespace ovaug {

/// Own voice as captured by both microphones.
struct OwnVoicePair {
  Waveform outer;
  Waveform inear;
};

/// A noisy two-microphone training example and the quantities that made it.
struct MixResult {
  Waveform noisy_outer;
  Waveform noisy_inear;
  /// Clean outer own voice, scaled like the own-voice component of noisy_outer.
  Waveform target_outer;

  // Components after noise scaling, before normalization.
  OwnVoicePair own;
  NoisePair noise;

  double noise_gain = 1.0;
  double requested_snr_db = 0.0;
  double achieved_snr_db = 0.0;

  bool normalized = false;
  std::array<double, 2> means{0.0, 0.0};  // outer, in-ear
  std::array<double, 2> stds{1.0, 1.0};
  double target_gain = 1.0;
};

/// Scales both noise channels by the one gain that puts the outer-microphone
/// own-voice-to-noise power ratio at `snr_db`, then sums per channel. Powers
/// are measured over the whole signal.
MixResult mix_at_snr(const OwnVoicePair& own, const NoisePair& noise, double snr_db);

/// Mean-variance normalization of each noisy channel; the target is scaled by
/// 1/std of the noisy outer channel only (no mean shift).
MixResult normalize(const MixResult& mix);

/// Uniform SNR draw on [low_db, high_db].
double draw_snr(double low_db, double high_db, Rng& rng);
double draw_snr(double low_db, double high_db, std::uint64_t seed);

inline constexpr double kTrainSnrLowDb = -10.0;
inline constexpr double kTrainSnrHighDb = 25.0;
inline constexpr std::array<double, 5> kTestSnrsDb{-10.0, -5.0, 0.0, 5.0, 10.0};

/// 10 log10(P_signal / P_noise) over whole signals.
double snr_db(std::span<const double> signal, std::span<const double> noise);

}  // namespace ovaug
