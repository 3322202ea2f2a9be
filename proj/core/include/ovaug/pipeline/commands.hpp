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
#include <filesystem>
#include <string>
#include <vector>

#include "ovaug/pipeline/config.hpp"
#include "ovaug/pipeline/manifest.hpp"

namespace ovaug::pipeline {

/// Seeded uniform sampling without replacement; returns the chosen items in
/// sorted order. Returns everything when count >= items.size().
std::vector<std::string> sample_subset(std::vector<std::string> items, std::size_t count, std::uint64_t seed);

struct EstimateSummary {
  std::vector<std::filesystem::path> models;  // written model files
  std::vector<std::string> talkers;           // talkers that contributed
  std::size_t utterances = 0;
};

/// Estimates transfer models from a recorded-pairs manifest. Writes
/// `<talker>.ovrtf` per talker and/or `averaged.ovrtf`, plus `models.jsonl`,
/// into cfg.output_dir.
EstimateSummary cmd_estimate(const PipelineConfig& cfg, const std::filesystem::path& pairs_manifest);

/// Simulates in-ear own voice for every entry of a speech-corpus manifest.
/// Writes `inear/<id>.wav` and `augmented.jsonl` (role own-voice-pairs).
/// Returns the output manifest path.
std::filesystem::path cmd_augment(const PipelineConfig& cfg, const std::filesystem::path& speech_manifest,
                                  const std::filesystem::path& model_path);

/// Renders every noise entry for the HRIR set of its talker (or a seeded
/// choice). Writes `noise/<id>_outer.wav`, `noise/<id>_inear.wav` and
/// `spatialized.jsonl`.
std::filesystem::path cmd_spatialize(const PipelineConfig& cfg, const std::filesystem::path& noise_manifest,
                                     const std::filesystem::path& hrir_manifest);

/// Builds one training example per own-voice entry: pick a noise segment,
/// spatialize it, add the in-ear floor, cut the own voice to the segment
/// length, mix at a drawn SNR and normalize. Writes
/// `examples/<id>_outer.wav`, `examples/<id>_inear.wav` (noisy, normalized),
/// `examples/<id>_target.wav` and `examples.jsonl` with per-example metadata.
std::filesystem::path cmd_mix(const PipelineConfig& cfg, const std::filesystem::path& own_manifest,
                              const std::filesystem::path& noise_manifest, const std::filesystem::path& hrir_manifest);

/// Applies a mask file to a noisy pair and writes the estimated outer own
/// voice. `noisy_inear` may be empty when `noisy_outer` is a stereo file.
void cmd_reconstruct(const std::filesystem::path& noisy_outer, const std::filesystem::path& noisy_inear,
                     const std::filesystem::path& masks, const std::filesystem::path& output);

struct ValidationReport {
  std::string file;
  std::string kind;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  /// Single-line JSON: {"file":..., "kind":..., "status":"ok"|"invalid", "violations":[...]}
  std::string to_json() const;
};

/// Checks a model, mask, manifest or config file. Throws IoError only when
/// the file cannot be read at all.
ValidationReport cmd_validate(const std::filesystem::path& path);

}  // namespace ovaug::pipeline
