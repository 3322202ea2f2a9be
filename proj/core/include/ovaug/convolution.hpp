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

#include <span>
#include <vector>

namespace ovaug {

/// Linear convolution of x with h, truncated to x.size() samples.
/// Short filters use the direct form; longer ones FFT overlap-add.
std::vector<double> convolve_truncated(std::span<const double> x, std::span<const double> h);

}  // namespace ovaug
