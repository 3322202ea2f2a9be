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

#include "ovaug/signal.hpp"

#include <cmath>

#include "ovaug/error.hpp"

namespace ovaug {

void Waveform::validate() const {
  if (sample_rate <= 0) throw InvalidArgument("waveform sample rate must be positive");
  for (double v : samples) {
    if (!std::isfinite(v)) throw InvalidArgument("waveform contains non-finite samples");
  }
}

bool ComplexMatrix::all_finite() const {
  for (const auto& c : data_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

double mean_power(std::span<const double> x) {
  if (x.empty()) return 0.0;
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return acc / static_cast<double>(x.size());
}

double rms(std::span<const double> x) { return std::sqrt(mean_power(x)); }

}  // namespace ovaug
