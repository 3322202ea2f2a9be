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

/// Radix-2 FFT of a fixed power-of-two size with precomputed twiddles.
///
/// Forward transforms are unnormalized; the inverse applies 1/size so that
/// inverse(forward(x)) == x. Instances are immutable after construction and
/// may be shared between threads.
class Fft {
 public:
  explicit Fft(std::size_t size);

  std::size_t size() const { return size_; }

  /// In-place complex transform.
  void forward(std::span<std::complex<double>> data) const;
  void inverse(std::span<std::complex<double>> data) const;

  /// Real input of length size() to size()/2+1 one-sided bins.
  void forward_real(std::span<const double> in, std::span<std::complex<double>> out) const;

  /// One-sided spectrum of size()/2+1 bins back to size() real samples.
  /// The imaginary parts of DC and Nyquist are ignored.
  void inverse_real(std::span<const std::complex<double>> in, std::span<double> out) const;

 private:
  void transform(std::span<std::complex<double>> data, bool inverse) const;

  std::size_t size_;
  std::vector<std::size_t> bitrev_;
  std::vector<std::complex<double>> twiddles_;
};

bool is_power_of_two(std::size_t n);

}  // namespace ovaug
