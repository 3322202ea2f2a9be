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

#include "ovaug/wola.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ovaug/error.hpp"
#include "ovaug/fft.hpp"

namespace ovaug {

FrameSpec FrameSpec::make(std::size_t frame_len, int sample_rate) {
  FrameSpec spec{frame_len, frame_len / 2, sample_rate, WindowKind::kSqrtHann};
  spec.validate();
  return spec;
}

void FrameSpec::validate() const {
  if (frame_len < 2 || !is_power_of_two(frame_len)) {
    throw InvalidArgument("frame length must be a power of two >= 2, got " + std::to_string(frame_len));
  }
  if (hop * 2 != frame_len) throw InvalidArgument("hop must be half the frame length");
  if (sample_rate <= 0) throw InvalidArgument("frame spec sample rate must be positive");
}

FrameSpec pipeline_frame_spec() { return FrameSpec::make(512, 16000); }

FrameSpec model_frame_spec() { return FrameSpec::make(128, 5000); }

std::vector<double> sqrt_hann(std::size_t frame_len) {
  std::vector<double> w(frame_len);
  for (std::size_t n = 0; n < frame_len; ++n) {
    w[n] = std::sin(std::numbers::pi * static_cast<double>(n) / static_cast<double>(frame_len));
  }
  return w;
}

std::size_t num_frames_for(const FrameSpec& spec, std::size_t signal_len) {
  // Shorter-than-one-frame and even single-sample inputs still produce frames.
  const std::size_t len = signal_len == 0 ? 1 : signal_len;
  return (len - 1) / spec.hop + 2;
}

double frame_center_seconds(const FrameSpec& spec, std::size_t frame) {
  const double center = static_cast<double>(frame * spec.hop) + static_cast<double>(spec.frame_len) / 2.0 -
                        static_cast<double>(spec.front_padding());
  return center / static_cast<double>(spec.sample_rate);
}

void Spectrogram::validate() const {
  spec.validate();
  if (data.bins() != spec.num_bins()) {
    throw ShapeMismatch("spectrogram has " + std::to_string(data.bins()) + " bins, spec expects " +
                        std::to_string(spec.num_bins()));
  }
  if (signal_length != 0 && num_frames_for(spec, signal_length) != data.frames()) {
    throw ShapeMismatch("spectrogram frame count does not match its signal length");
  }
}

Spectrogram analyze(const Waveform& x, const FrameSpec& spec) {
  spec.validate();
  if (x.sample_rate != spec.sample_rate) {
    throw InvalidArgument("analyze: signal rate " + std::to_string(x.sample_rate) + " Hz does not match frame spec rate " +
                          std::to_string(spec.sample_rate) + " Hz");
  }
  if (x.empty()) throw InvalidArgument("analyze: empty input");

  const std::size_t n_frames = num_frames_for(spec, x.size());
  const std::size_t pad = spec.front_padding();
  const std::vector<double> window = sqrt_hann(spec.frame_len);
  const Fft fft(spec.frame_len);

  Spectrogram out{ComplexMatrix(spec.num_bins(), n_frames), spec, x.size()};
  std::vector<double> frame(spec.frame_len);
  for (std::size_t l = 0; l < n_frames; ++l) {
    // Frame l covers padded samples [l*hop, l*hop + frame_len); the signal
    // starts at padded index `pad`.
    const std::size_t start = l * spec.hop;
    for (std::size_t n = 0; n < spec.frame_len; ++n) {
      const std::size_t padded = start + n;
      double v = 0.0;
      if (padded >= pad && padded - pad < x.size()) v = x.samples[padded - pad];
      frame[n] = v * window[n];
    }
    fft.forward_real(frame, out.data.column(l));
  }
  return out;
}

Waveform synthesize(const Spectrogram& s) {
  s.validate();
  const FrameSpec& spec = s.spec;
  const std::size_t n_frames = s.frames();
  if (n_frames == 0) return Waveform({}, spec.sample_rate);

  const std::vector<double> window = sqrt_hann(spec.frame_len);
  const Fft fft(spec.frame_len);
  const std::size_t padded_len = (n_frames - 1) * spec.hop + spec.frame_len;
  std::vector<double> acc(padded_len, 0.0);
  std::vector<double> frame(spec.frame_len);
  for (std::size_t l = 0; l < n_frames; ++l) {
    fft.inverse_real(s.data.column(l), frame);
    const std::size_t start = l * spec.hop;
    for (std::size_t n = 0; n < spec.frame_len; ++n) acc[start + n] += frame[n] * window[n];
  }

  const std::size_t pad = spec.front_padding();
  const std::size_t full = (n_frames - 1) * spec.hop;
  const std::size_t out_len = s.signal_length != 0 ? s.signal_length : full;
  if (out_len > full) throw ShapeMismatch("synthesize: signal length exceeds frame coverage");
  std::vector<double> out(acc.begin() + static_cast<std::ptrdiff_t>(pad),
                          acc.begin() + static_cast<std::ptrdiff_t>(pad + out_len));
  return Waveform(std::move(out), spec.sample_rate);
}

}  // namespace ovaug
