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

// Synthetic own-voice recordings with known transfer functions.

#include <cstdint>
#include <vector>

#include "oracles.hpp"
#include "ovaug/phoneme.hpp"
#include "ovaug/random.hpp"
#include "ovaug/wola.hpp"

namespace ovaug::testing {

struct SpectralPair {
  Spectrogram outer;
  Spectrogram inear;
};

/// In-ear channel produced by filtering white noise in the time domain.
inline SpectralPair fir_filtered_pair(double seconds, std::span<const double> h, std::uint64_t seed,
                                      const FrameSpec& spec = model_frame_spec()) {
  const auto n = static_cast<std::size_t>(seconds * spec.sample_rate);
  const auto x = white_noise(n, seed);
  const auto y = direct_convolution(x, h);
  return {analyze(Waveform(x, spec.sample_rate), spec), analyze(Waveform(y, spec.sample_rate), spec)};
}

/// Bank of distinct short FIRs, one per phoneme.
inline std::vector<std::vector<double>> fir_bank(std::size_t count) {
  std::vector<std::vector<double>> bank;
  for (std::size_t p = 0; p < count; ++p) {
    bank.push_back(test_fir(16 + 4 * p, 0.6 + 0.08 * static_cast<double>(p), 0.2 + 0.3 * static_cast<double>(p)));
  }
  return bank;
}

/// Phoneme runs of random length (3 to 20 frames) over ids 1..count.
inline PhonemeSequence run_sequence(std::size_t frames, std::size_t count, std::uint64_t seed,
                                    const FrameSpec& spec = model_frame_spec()) {
  Rng rng(seed);
  PhonemeSequence seq{std::vector<PhonemeId>(frames), spec, count};
  std::size_t l = 0;
  while (l < frames) {
    const auto id = static_cast<PhonemeId>(uniform_index(rng, count) + 1);
    const std::size_t len = 3 + uniform_index(rng, 18);
    for (std::size_t j = 0; j < len && l < frames; ++j) seq.ids[l++] = id;
  }
  return seq;
}

/// In-ear spectrogram obtained by switching the filter per frame in the STFT
/// domain: Y_i(k, l) = H_{p(l)}(k) Y_o(k, l).
/// The sequence must cover num_frames_for(spec, samples) frames.
inline SpectralPair frame_switched_pair(std::size_t samples, const std::vector<std::vector<double>>& bank,
                                        const PhonemeSequence& phonemes, std::uint64_t seed) {
  const FrameSpec spec = phonemes.spec;
  const std::size_t n = samples;
  SpectralPair pair;
  pair.outer = analyze(Waveform(white_noise(n, seed), spec.sample_rate), spec);
  pair.inear = pair.outer;
  std::vector<std::vector<cplx>> responses;
  for (const auto& h : bank) responses.push_back(fir_response(h, spec.frame_len));
  for (std::size_t l = 0; l < pair.outer.frames(); ++l) {
    const PhonemeId id = phonemes.ids[l];
    for (std::size_t k = 0; k < pair.outer.bins(); ++k) {
      pair.inear.data(k, l) = id == kUnknownPhoneme ? cplx{} : responses[id - 1][k] * pair.outer.data(k, l);
    }
  }
  return pair;
}

inline Spectrogram concat_frames(const Spectrogram& a, const Spectrogram& b) {
  Spectrogram out{ComplexMatrix(a.bins(), a.frames() + b.frames()), a.spec, 0};
  for (std::size_t l = 0; l < a.frames(); ++l)
    for (std::size_t k = 0; k < a.bins(); ++k) out.data(k, l) = a.data(k, l);
  for (std::size_t l = 0; l < b.frames(); ++l)
    for (std::size_t k = 0; k < a.bins(); ++k) out.data(k, a.frames() + l) = b.data(k, l);
  return out;
}

}  // namespace ovaug::testing
