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

#include <cstdint>
#include <optional>

#include "ovaug/phoneme.hpp"
#include "ovaug/rtf_model.hpp"
#include "ovaug/signal.hpp"

namespace ovaug {

enum class Technique { kSpeechIndependent, kSpeechDependent, kRandomPhoneme };

const char* to_string(Technique t);
/// Accepts "speech-independent", "speech-dependent" and "random-phoneme".
Technique parse_technique(std::string_view name);

struct AugmentConfig {
  Technique technique = Technique::kSpeechIndependent;
  /// Recursive smoothing constant for frame-wise RTF sequences, in [0, 1).
  double alpha = 0.5;
  /// Seeds the random phoneme sequence (random-phoneme technique only).
  std::uint64_t seed = 0;

  /// Throws InvalidArgument on an out-of-range alpha or a technique the
  /// model cannot serve.
  void validate(const RtfModel& model) const;
};

/// Per-frame RTF columns picked from the model: the phoneme's RTF when it is
/// available, the fallback for unknown or unavailable phonemes.
ComplexMatrix select_rtf_sequence(const RtfModel& model, const PhonemeSequence& phonemes);

/// Speech-independent sequence: the single model RTF repeated for every frame.
ComplexMatrix constant_rtf_sequence(const RtfModel& model, std::size_t num_frames);

/// First-order recursive smoothing across frames,
///   out(l) = alpha * out(l-1) + (1 - alpha) * in(l),  out(0) = in(0).
ComplexMatrix smooth_rtf_sequence(const ComplexMatrix& sequence, double alpha);

/// Simulates the in-ear own voice of a single-channel 16 kHz utterance. The
/// signal is downsampled to the model rate, filtered frame-wise with the RTF
/// sequence for the configured technique, and upsampled back to the input
/// rate with the input's length. `phonemes` must annotate the model-rate
/// frames for the speech-dependent technique and is ignored otherwise.
Waveform augment(const Waveform& speech, const RtfModel& model, const AugmentConfig& cfg,
                 const PhonemeSequence* phonemes = nullptr);

/// Number of model-grid frames augment() will produce for a speech signal,
/// i.e. the length a phoneme sequence must have.
std::size_t model_frames_for(const Waveform& speech, const RtfModel& model);

}  // namespace ovaug
