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

#include <benchmark/benchmark.h>

#include <vector>

#include "ovaug/augmentor.hpp"
#include "ovaug/convolution.hpp"
#include "ovaug/random.hpp"
#include "ovaug/resampler.hpp"
#include "ovaug/rtf_model.hpp"
#include "ovaug/wola.hpp"

namespace {

using namespace ovaug;

std::vector<double> noise(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> x(n);
  for (auto& v : x) v = standard_normal(rng);
  return x;
}

void BM_AnalyzeSynthesize(benchmark::State& state) {
  const FrameSpec spec = pipeline_frame_spec();
  const Waveform x(noise(static_cast<std::size_t>(state.range(0)) * 16000, 1), 16000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(synthesize(analyze(x, spec)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size()));
}
BENCHMARK(BM_AnalyzeSynthesize)->Arg(1)->Arg(10);

void BM_Resample(benchmark::State& state) {
  const Waveform x(noise(160000, 2), 16000);
  const int target = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(resample(x, target));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size()));
}
BENCHMARK(BM_Resample)->Arg(5000)->Arg(8000);

void BM_Accumulate(benchmark::State& state) {
  const FrameSpec spec = model_frame_spec();
  const Spectrogram a = analyze(Waveform(noise(50000, 3), 5000), spec);
  const Spectrogram b = analyze(Waveform(noise(50000, 4), 5000), spec);
  for (auto _ : state) {
    auto acc = RtfAccumulator::speech_independent(spec);
    acc.accumulate(a, b);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_Accumulate);

void BM_Augment(benchmark::State& state) {
  const RtfModel m = RtfModel::constant(ModelMode::kSpeechDependent, 62, Complex(0.5, 0.1));
  const Waveform x(noise(48000, 5), 16000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(augment(x, m, {Technique::kRandomPhoneme, 0.5, 7}));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size()));
}
BENCHMARK(BM_Augment);

void BM_Convolve(benchmark::State& state) {
  const auto x = noise(48000, 6);
  const auto h = noise(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolve_truncated(x, h));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size()));
}
BENCHMARK(BM_Convolve)->Arg(32)->Arg(512)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
