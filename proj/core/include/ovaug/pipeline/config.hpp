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
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ovaug/augmentor.hpp"
#include "ovaug/rtf_model.hpp"
#include "ovaug/spatializer.hpp"
#include "ovaug/wola.hpp"

namespace ovaug::pipeline {

/// Which estimate outputs to write.
enum class EstimateScope { kIndividual, kTalkerAveraged, kBoth };

/// Everything a pipeline run needs besides its input manifests. Loaded from
/// a JSON config file; command-line flags override individual fields.
struct PipelineConfig {
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::filesystem::path output_dir = "out";

  FrameSpec pipeline_spec = pipeline_frame_spec();
  FrameSpec model_spec = model_frame_spec();

  // estimate
  ModelMode model_mode = ModelMode::kSpeechDependent;
  EstimateScope estimate_scope = EstimateScope::kBoth;
  std::filesystem::path inventory;
  std::uint64_t min_frames = 1;
  std::optional<std::size_t> subset_talkers;
  std::optional<std::size_t> subset_utterances;

  // augment
  Technique technique = Technique::kSpeechDependent;
  double alpha = 0.5;

  // mix
  double snr_low_db = -10.0;
  double snr_high_db = 25.0;
  std::optional<double> force_snr_db;
  SpatializeConfig spatial;
  double segment_seconds = 3.0;

  /// Parses a JSON config; relative paths resolve against its directory.
  static PipelineConfig load(const std::filesystem::path& path);

  /// Throws InvalidArgument on any out-of-range field.
  void validate() const;
  std::vector<std::string> check() const;
};

/// Talker counts and utterance-per-talker counts of the recording-effort sweeps.
inline const std::vector<std::size_t> kTalkerSubsetSizes{1, 2, 3, 4, 6, 8, 10, 12};
inline const std::vector<std::size_t> kUtteranceSubsetSizes{1, 3, 6, 12, 25, 75, 150, 306};

}  // namespace ovaug::pipeline
