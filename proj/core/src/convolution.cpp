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

#include "ovaug/convolution.hpp"

#include <algorithm>

#include "ovaug/fft.hpp"
#include "ovaug/signal.hpp"

namespace ovaug {
namespace {

constexpr std::size_t kDirectMaxTaps = 32;

std::vector<double> direct(std::span<const double> x, std::span<const double> h) {
  std::vector<double> y(x.size(), 0.0);
  for (std::size_t n = 0; n < x.size(); ++n) {
    const std::size_t kmax = std::min(h.size() - 1, n);
    double acc = 0.0;
    for (std::size_t k = 0; k <= kmax; ++k) acc += h[k] * x[n - k];
    y[n] = acc;
  }
  return y;
}

std::vector<double> overlap_add(std::span<const double> x, std::span<const double> h) {
  std::size_t fft_len = 1;
  while (fft_len < 2 * h.size()) fft_len <<= 1;
  fft_len = std::max<std::size_t>(fft_len, 256);
  const std::size_t block = fft_len - h.size() + 1;
  const Fft fft(fft_len);
  const std::size_t bins = fft_len / 2 + 1;

  std::vector<double> buf(fft_len, 0.0);
  std::copy(h.begin(), h.end(), buf.begin());
  std::vector<Complex> filter(bins);
  fft.forward_real(buf, filter);

  std::vector<double> y(x.size(), 0.0);
  std::vector<Complex> spec(bins);
  for (std::size_t start = 0; start < x.size(); start += block) {
    const std::size_t n = std::min(block, x.size() - start);
    std::fill(buf.begin(), buf.end(), 0.0);
    std::copy_n(x.begin() + static_cast<std::ptrdiff_t>(start), n, buf.begin());
    fft.forward_real(buf, spec);
    for (std::size_t k = 0; k < bins; ++k) spec[k] *= filter[k];
    fft.inverse_real(spec, buf);
    const std::size_t take = std::min(fft_len, x.size() - start);
    for (std::size_t i = 0; i < take; ++i) y[start + i] += buf[i];
  }
  return y;
}

}  // namespace

std::vector<double> convolve_truncated(std::span<const double> x, std::span<const double> h) {
  if (x.empty()) return {};
  if (h.empty()) return std::vector<double>(x.size(), 0.0);
  return h.size() <= kDirectMaxTaps ? direct(x, h) : overlap_add(x, h);
}

}  // namespace ovaug
