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

#include "ovaug/mixer.hpp"

#include <cmath>

#include "ovaug/error.hpp"

namespace ovaug {
namespace {

void require_same(const Waveform& a, const Waveform& b, const char* what) {
  if (a.size() != b.size() || a.sample_rate != b.sample_rate) {
    throw ShapeMismatch(std::string("mix_at_snr: ") + what + " differ in length or rate");
  }
}

double mean_of(std::span<const double> x) {
  double acc = 0.0;
  for (double v : x) acc += v;
  return x.empty() ? 0.0 : acc / static_cast<double>(x.size());
}

}  // namespace

double snr_db(std::span<const double> signal, std::span<const double> noise) {
  return 10.0 * std::log10(mean_power(signal) / mean_power(noise));
}

MixResult mix_at_snr(const OwnVoicePair& own, const NoisePair& noise, double snr) {
  require_same(own.outer, own.inear, "own-voice channels");
  require_same(own.outer, noise.outer, "own voice and noise");
  require_same(noise.outer, noise.inear, "noise channels");
  if (!std::isfinite(snr)) throw InvalidArgument("mix_at_snr: SNR must be finite");
  const double p_own = mean_power(own.outer.samples);
  const double p_noise = mean_power(noise.outer.samples);
  if (!(p_own > 0.0)) throw InvalidArgument("mix_at_snr: own voice at the outer microphone is silent");
  if (!(p_noise > 0.0)) throw InvalidArgument("mix_at_snr: noise at the outer microphone is silent");

  MixResult r;
  r.requested_snr_db = snr;
  r.noise_gain = std::sqrt(p_own / (p_noise * std::pow(10.0, snr / 10.0)));
  r.own = own;
  r.noise = noise;
  for (auto& v : r.noise.outer.samples) v *= r.noise_gain;
  for (auto& v : r.noise.inear.samples) v *= r.noise_gain;

  r.noisy_outer = own.outer;
  r.noisy_inear = own.inear;
  for (std::size_t n = 0; n < r.noisy_outer.size(); ++n) {
    r.noisy_outer.samples[n] += r.noise.outer.samples[n];
    r.noisy_inear.samples[n] += r.noise.inear.samples[n];
  }
  r.target_outer = own.outer;
  r.achieved_snr_db = snr_db(r.own.outer.samples, r.noise.outer.samples);
  return r;
}

MixResult normalize(const MixResult& mix) {
  MixResult r = mix;
  Waveform* channels[2] = {&r.noisy_outer, &r.noisy_inear};
  for (int c = 0; c < 2; ++c) {
    auto& x = channels[c]->samples;
    const double mu = mean_of(x);
    double var = 0.0;
    for (double v : x) var += (v - mu) * (v - mu);
    var = x.empty() ? 0.0 : var / static_cast<double>(x.size());
    if (!(var > 0.0)) throw InvalidArgument("normalize: channel has zero variance");
    const double sigma = std::sqrt(var);
    for (auto& v : x) v = (v - mu) / sigma;
    r.means[c] = mu;
    r.stds[c] = sigma;
  }
  r.target_gain = 1.0 / r.stds[0];
  for (auto& v : r.target_outer.samples) v *= r.target_gain;
  r.normalized = true;
  return r;
}

double draw_snr(double low_db, double high_db, Rng& rng) {
  if (!(low_db <= high_db) || !std::isfinite(low_db) || !std::isfinite(high_db)) {
    throw InvalidArgument("draw_snr: need finite low <= high");
  }
  if (low_db == high_db) return low_db;
  return uniform_real(rng, low_db, high_db);
}

double draw_snr(double low_db, double high_db, std::uint64_t seed) {
  Rng rng(seed);
  return draw_snr(low_db, high_db, rng);
}

}  // namespace ovaug
