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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ovaug {

using Complex = std::complex<double>;

/// Sampled real audio. Amplitudes are nominally in [-1, 1].
struct Waveform {
  std::vector<double> samples;
  int sample_rate = 0;

  Waveform() = default;
  Waveform(std::vector<double> s, int rate) : samples(std::move(s)), sample_rate(rate) {}

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double duration_seconds() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
  }

  /// Throws InvalidArgument unless sample_rate > 0 and every sample is finite.
  void validate() const;

  friend bool operator==(const Waveform&, const Waveform&) = default;
};

/// Dense complex matrix indexed (bin, frame), stored frame-major so that each
/// frame's spectrum is contiguous.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t bins, std::size_t frames, Complex fill = {})
      : bins_(bins), frames_(frames), data_(bins * frames, fill) {}

  std::size_t bins() const { return bins_; }
  std::size_t frames() const { return frames_; }
  bool same_shape(const ComplexMatrix& o) const { return bins_ == o.bins_ && frames_ == o.frames_; }

  Complex& operator()(std::size_t bin, std::size_t frame) { return data_[frame * bins_ + bin]; }
  const Complex& operator()(std::size_t bin, std::size_t frame) const { return data_[frame * bins_ + bin]; }

  std::span<Complex> column(std::size_t frame) { return {data_.data() + frame * bins_, bins_}; }
  std::span<const Complex> column(std::size_t frame) const { return {data_.data() + frame * bins_, bins_}; }

  std::span<Complex> data() { return data_; }
  std::span<const Complex> data() const { return data_; }

  bool all_finite() const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t bins_ = 0;
  std::size_t frames_ = 0;
  std::vector<Complex> data_;
};

double rms(std::span<const double> x);
double mean_power(std::span<const double> x);

}  // namespace ovaug
