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

#include "ovaug/fft.hpp"

#include <cmath>
#include <numbers>

#include "ovaug/error.hpp"

namespace ovaug {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

Fft::Fft(std::size_t size) : size_(size) {
  if (!is_power_of_two(size)) {
    throw InvalidArgument("FFT size must be a power of two, got " + std::to_string(size));
  }
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < size) ++bits;
  bitrev_.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < bits; ++b) {
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
    }
    bitrev_[i] = r;
  }
  twiddles_.resize(size / 2);
  for (std::size_t i = 0; i < size / 2; ++i) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(size);
    twiddles_[i] = {std::cos(angle), std::sin(angle)};
  }
}

void Fft::transform(std::span<std::complex<double>> data, bool inverse) const {
  if (data.size() != size_) throw ShapeMismatch("FFT buffer size does not match plan size");
  for (std::size_t i = 0; i < size_; ++i) {
    if (i < bitrev_[i]) std::swap(data[i], data[bitrev_[i]]);
  }
  for (std::size_t len = 2; len <= size_; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = size_ / len;
    for (std::size_t start = 0; start < size_; start += len) {
      for (std::size_t j = 0; j < half; ++j) {
        std::complex<double> w = twiddles_[j * stride];
        if (inverse) w = std::conj(w);
        const std::complex<double> u = data[start + j];
        const std::complex<double> v = data[start + j + half] * w;
        data[start + j] = u + v;
        data[start + j + half] = u - v;
      }
    }
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(size_);
    for (auto& x : data) x *= scale;
  }
}

void Fft::forward(std::span<std::complex<double>> data) const { transform(data, false); }

void Fft::inverse(std::span<std::complex<double>> data) const { transform(data, true); }

void Fft::forward_real(std::span<const double> in, std::span<std::complex<double>> out) const {
  if (in.size() != size_ || out.size() != size_ / 2 + 1) {
    throw ShapeMismatch("forward_real: buffer sizes do not match plan");
  }
  std::vector<std::complex<double>> buf(in.begin(), in.end());
  transform(buf, false);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = buf[k];
  // Real input: DC and Nyquist are exactly real.
  out.front().imag(0.0);
  out.back().imag(0.0);
}

void Fft::inverse_real(std::span<const std::complex<double>> in, std::span<double> out) const {
  if (out.size() != size_ || in.size() != size_ / 2 + 1) {
    throw ShapeMismatch("inverse_real: buffer sizes do not match plan");
  }
  std::vector<std::complex<double>> buf(size_);
  const std::size_t bins = in.size();
  buf[0] = {in[0].real(), 0.0};
  if (size_ > 1) buf[size_ / 2] = {in[bins - 1].real(), 0.0};
  for (std::size_t k = 1; k + 1 < bins; ++k) {
    buf[k] = in[k];
    buf[size_ - k] = std::conj(in[k]);
  }
  transform(buf, true);
  for (std::size_t n = 0; n < size_; ++n) out[n] = buf[n].real();
}

}  // namespace ovaug
