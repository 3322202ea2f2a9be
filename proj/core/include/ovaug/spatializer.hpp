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
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ovaug/random.hpp"
#include "ovaug/signal.hpp"

namespace ovaug {

/// Impulse responses from one source direction to both device microphones.
struct HrirDirection {
  double azimuth_deg = 0.0;
  std::vector<double> outer;
  std::vector<double> inear;
};

/// Measured responses from D directions for one talker/device.
struct HrirSet {
  std::string id;
  int sample_rate = 0;
  std::vector<HrirDirection> directions;

  std::size_t size() const { return directions.size(); }
  /// Throws InvalidArgument on an empty set, bad rate or non-finite taps.
  void validate() const;
};

/// Noise as captured by the outer and in-ear microphones.
struct NoisePair {
  Waveform outer;
  Waveform inear;
};

enum class SpatialMode { kPoint, kDiffuse };

const char* to_string(SpatialMode mode);

/// Renders the noise from one direction: each channel is the noise convolved
/// with that direction's response, truncated to the input length.
NoisePair spatialize_point(const Waveform& noise, const HrirSet& hrirs, std::size_t direction);

/// Circular delays, one per direction, each uniform on [0, len).
std::vector<std::size_t> diffuse_shifts(std::size_t len, std::size_t directions, std::uint64_t seed);

/// Pseudo-diffuse rendering: every direction gets a circularly delayed copy
/// of the noise, the D renderings are summed per channel and scaled by
/// 1/sqrt(D).
NoisePair spatialize_diffuse(const Waveform& noise, const HrirSet& hrirs, std::uint64_t seed);
NoisePair spatialize_diffuse(const Waveform& noise, const HrirSet& hrirs, const std::vector<std::size_t>& shifts);

/// Settings for the incoherent white-noise floor added to the in-ear channel.
/// Levels are in dB relative to the in-ear noise RMS and drawn uniformly on
/// [low_db, -60]; an empty low_db disables the floor.
struct FloorConfig {
  std::optional<double> low_db = -120.0;

  static constexpr double kHighDb = -60.0;
  void validate() const;
};

/// Draws a floor level in dB from the configured range.
double draw_floor_level(const FloorConfig& cfg, Rng& rng);

/// Adds Gaussian white noise at exactly `level_db` relative to the RMS of
/// `inear` (measured before adding).
Waveform add_white_noise(const Waveform& inear, double level_db, Rng& rng);

/// Draws a level and adds the floor; returns the input unchanged when the
/// floor is off. `level_db_out` receives the drawn level when given.
Waveform add_incoherent_floor(const Waveform& inear, const FloorConfig& cfg, std::uint64_t seed,
                              std::optional<double>* level_db_out = nullptr);

struct SpatializeConfig {
  /// Probability of the diffuse mode when the mode is drawn.
  double diffuse_probability = 0.5;
  std::optional<SpatialMode> force_mode;
  std::optional<std::size_t> force_direction;
  FloorConfig floor;
};

struct SpatializeResult {
  NoisePair noise;
  SpatialMode mode = SpatialMode::kPoint;
  std::optional<std::size_t> direction;  // point mode only
  std::optional<double> floor_db;        // empty when the floor is off
};

/// Full noise rendering step: choose point or diffuse, render, add the
/// in-ear floor. Every random choice derives from `seed`.
SpatializeResult spatialize(const Waveform& noise, const HrirSet& hrirs, const SpatializeConfig& cfg,
                            std::uint64_t seed);

}  // namespace ovaug
