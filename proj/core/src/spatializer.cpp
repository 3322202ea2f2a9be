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

#include "ovaug/spatializer.hpp"

#include <cmath>
#include <string>

#include "ovaug/convolution.hpp"
#include "ovaug/error.hpp"

namespace ovaug {
namespace {

void check_input(const Waveform& noise, const HrirSet& hrirs) {
  hrirs.validate();
  if (noise.sample_rate != hrirs.sample_rate) {
    throw InvalidArgument("noise rate " + std::to_string(noise.sample_rate) + " Hz does not match HRIR rate " +
                          std::to_string(hrirs.sample_rate) + " Hz");
  }
}

void accumulate_into(std::vector<double>& dst, const std::vector<double>& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
}

}  // namespace

void HrirSet::validate() const {
  if (sample_rate <= 0) throw InvalidArgument("HRIR set sample rate must be positive");
  if (directions.empty()) throw InvalidArgument("HRIR set has no directions");
  for (const auto& d : directions) {
    for (const auto* ir : {&d.outer, &d.inear}) {
      for (double v : *ir) {
        if (!std::isfinite(v)) throw InvalidArgument("HRIR set contains non-finite taps");
      }
    }
  }
}

const char* to_string(SpatialMode mode) { return mode == SpatialMode::kPoint ? "point" : "diffuse"; }

NoisePair spatialize_point(const Waveform& noise, const HrirSet& hrirs, std::size_t direction) {
  check_input(noise, hrirs);
  if (direction >= hrirs.size()) {
    throw InvalidArgument("direction index " + std::to_string(direction) + " out of range for " +
                          std::to_string(hrirs.size()) + " directions");
  }
  const HrirDirection& d = hrirs.directions[direction];
  return {Waveform(convolve_truncated(noise.samples, d.outer), noise.sample_rate),
          Waveform(convolve_truncated(noise.samples, d.inear), noise.sample_rate)};
}

std::vector<std::size_t> diffuse_shifts(std::size_t len, std::size_t directions, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::size_t> shifts(directions, 0);
  if (len == 0) return shifts;
  for (auto& s : shifts) s = static_cast<std::size_t>(uniform_index(rng, len));
  return shifts;
}

NoisePair spatialize_diffuse(const Waveform& noise, const HrirSet& hrirs, const std::vector<std::size_t>& shifts) {
  check_input(noise, hrirs);
  if (shifts.size() != hrirs.size()) throw InvalidArgument("need one shift per HRIR direction");
  const std::size_t len = noise.size();
  NoisePair out{Waveform(std::vector<double>(len, 0.0), noise.sample_rate),
                Waveform(std::vector<double>(len, 0.0), noise.sample_rate)};
  std::vector<double> shifted(len);
  for (std::size_t d = 0; d < hrirs.size(); ++d) {
    // Delay by shifts[d] samples, wrapping the tail around to the front.
    const std::size_t s = len == 0 ? 0 : shifts[d] % len;
    for (std::size_t n = 0; n < len; ++n) shifted[n] = noise.samples[(n + len - s) % len];
    accumulate_into(out.outer.samples, convolve_truncated(shifted, hrirs.directions[d].outer));
    accumulate_into(out.inear.samples, convolve_truncated(shifted, hrirs.directions[d].inear));
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(hrirs.size()));
  for (auto& v : out.outer.samples) v *= scale;
  for (auto& v : out.inear.samples) v *= scale;
  return out;
}

NoisePair spatialize_diffuse(const Waveform& noise, const HrirSet& hrirs, std::uint64_t seed) {
  return spatialize_diffuse(noise, hrirs, diffuse_shifts(noise.size(), hrirs.size(), seed));
}

void FloorConfig::validate() const {
  if (low_db && !(*low_db <= kHighDb && std::isfinite(*low_db))) {
    throw InvalidArgument("white-noise floor lower bound must be finite and <= -60 dB");
  }
}

double draw_floor_level(const FloorConfig& cfg, Rng& rng) {
  cfg.validate();
  if (!cfg.low_db) throw InvalidArgument("white-noise floor is off");
  return uniform_real(rng, *cfg.low_db, FloorConfig::kHighDb);
}

Waveform add_white_noise(const Waveform& inear, double level_db, Rng& rng) {
  const double gain = rms(inear.samples) * std::pow(10.0, level_db / 20.0);
  Waveform out = inear;
  for (auto& v : out.samples) v += gain * standard_normal(rng);
  return out;
}

Waveform add_incoherent_floor(const Waveform& inear, const FloorConfig& cfg, std::uint64_t seed,
                              std::optional<double>* level_db_out) {
  cfg.validate();
  if (level_db_out) level_db_out->reset();
  if (!cfg.low_db) return inear;
  Rng rng(seed);
  const double level = draw_floor_level(cfg, rng);
  if (level_db_out) *level_db_out = level;
  return add_white_noise(inear, level, rng);
}

SpatializeResult spatialize(const Waveform& noise, const HrirSet& hrirs, const SpatializeConfig& cfg,
                            std::uint64_t seed) {
  if (!(cfg.diffuse_probability >= 0.0 && cfg.diffuse_probability <= 1.0)) {
    throw InvalidArgument("diffuse probability must lie in [0, 1]");
  }
  cfg.floor.validate();
  Rng rng(seed);
  // Draw order is fixed so forcing one choice leaves the others unchanged.
  const bool diffuse_draw = bernoulli(rng, cfg.diffuse_probability);
  const std::size_t direction_draw = static_cast<std::size_t>(uniform_index(rng, hrirs.size() == 0 ? 1 : hrirs.size()));
  const std::uint64_t shift_seed = rng();
  const std::uint64_t floor_seed = rng();

  SpatializeResult r;
  r.mode = cfg.force_mode.value_or(diffuse_draw ? SpatialMode::kDiffuse : SpatialMode::kPoint);
  if (r.mode == SpatialMode::kPoint) {
    r.direction = cfg.force_direction.value_or(direction_draw);
    r.noise = spatialize_point(noise, hrirs, *r.direction);
  } else {
    r.noise = spatialize_diffuse(noise, hrirs, shift_seed);
  }
  r.noise.inear = add_incoherent_floor(r.noise.inear, cfg.floor, floor_seed, &r.floor_db);
  return r;
}

}  // namespace ovaug
