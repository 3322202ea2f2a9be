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

enum class WindowKind { kSqrtHann };

/// STFT framing: power-of-two frame length, 50 % overlap, square-root Hann.
struct FrameSpec {
  std::size_t frame_len = 0;
  std::size_t hop = 0;
  int sample_rate = 0;
  WindowKind window = WindowKind::kSqrtHann;

  /// Builds a 50 %-overlap spec; throws InvalidArgument on a bad length or rate.
  static FrameSpec make(std::size_t frame_len, int sample_rate);

  std::size_t num_bins() const { return frame_len / 2 + 1; }

  /// Samples of zero padding placed before the signal during analysis.
  std::size_t front_padding() const { return frame_len - hop; }

  /// Throws InvalidArgument if any invariant is violated.
  void validate() const;

  friend bool operator==(const FrameSpec&, const FrameSpec&) = default;
};

/// 32 ms frames at 16 kHz, used for mixing and mask reconstruction.
FrameSpec pipeline_frame_spec();
/// 25.6 ms frames at 5 kHz, the grid on which transfer models live.
FrameSpec model_frame_spec();

/// Periodic square-root Hann window, w[n] = sin(pi n / N). Satisfies
/// w[n]^2 + w[n + N/2]^2 == 1.
std::vector<double> sqrt_hann(std::size_t frame_len);

/// Number of analysis frames for a signal of `signal_len` samples.
std::size_t num_frames_for(const FrameSpec& spec, std::size_t signal_len);

/// Time of the centre of frame `frame` relative to the start of the
/// unpadded signal, in seconds.
double frame_center_seconds(const FrameSpec& spec, std::size_t frame);

/// One-sided complex STFT tied to its framing.
struct Spectrogram {
  ComplexMatrix data;
  FrameSpec spec;
  /// Length of the analyzed signal in samples, or 0 when unknown (e.g. a
  /// spectrogram built from scratch). Synthesis trims to it when set.
  std::size_t signal_length = 0;

  std::size_t bins() const { return data.bins(); }
  std::size_t frames() const { return data.frames(); }

  /// Throws ShapeMismatch if data does not fit spec.
  void validate() const;
};

/// Windowed forward STFT. The signal is padded with frame_len - hop zeros in
/// front and enough zeros at the back that every input sample is covered by
/// two full frames.
Spectrogram analyze(const Waveform& x, const FrameSpec& spec);

/// Weighted overlap-add inverse of analyze(). The output is time-aligned with
/// the analyzed signal and has signal_length samples, or (frames - 1) * hop
/// when signal_length is unknown.
Waveform synthesize(const Spectrogram& s);

}  // namespace ovaug
