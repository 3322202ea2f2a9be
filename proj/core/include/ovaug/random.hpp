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
#include <random>
#include <string_view>

namespace ovaug {

/// Engine used for every stochastic stage. std::mt19937_64 is fully specified
/// by the standard, and the helpers below avoid the implementation-defined
/// standard distributions so draws are identical across toolchains.
using Rng = std::mt19937_64;

/// Stable 64-bit seed for one (global seed, item id, stage) triple.
std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view item_id, std::string_view stage);

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Uniform double on [0, 1).
double uniform_unit(Rng& rng);

/// Uniform double on [low, high).
double uniform_real(Rng& rng, double low, double high);

/// Uniform integer on [0, n) without modulo bias. n must be > 0.
std::uint64_t uniform_index(Rng& rng, std::uint64_t n);

/// Standard normal draw (Box-Muller, one value per call).
double standard_normal(Rng& rng);

bool bernoulli(Rng& rng, double p);

}  // namespace ovaug
