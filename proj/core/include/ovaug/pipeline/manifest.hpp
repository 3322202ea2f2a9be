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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ovaug::pipeline {

/// What the entries of a manifest describe.
enum class ManifestRole {
  kSpeechCorpus,     // single-channel speech: audio, optional alignment
  kRecordedPairs,    // recorded own voice: outer, inear, optional alignment
  kOwnVoicePairs,    // augmented or recorded own voice ready for mixing: outer, inear
  kNoise,            // single-channel noise: audio
  kHrir,             // HRIR sets: path to a directory with its own manifest
  kSpatializedNoise, // two-channel noise renderings: outer, inear
  kMixedExamples,    // training examples written by mix: outer, inear (noisy), target
  kModels,           // model files written by estimate
};

const char* to_string(ManifestRole role);
ManifestRole parse_role(const std::string& name);

/// One manifest record. Paths are stored as written; resolve() makes them
/// absolute against the manifest's directory.
struct ManifestEntry {
  std::string id;
  std::string talker;
  std::string audio;
  std::string outer;
  std::string inear;
  std::string alignment;
  std::string path;
  std::string target;
  std::optional<double> duration;
  /// Extra string/number fields written by pipeline stages, kept verbatim as
  /// JSON text so record metadata survives a read/write cycle.
  std::map<std::string, std::string> extra;
};

/// Line-delimited JSON: a header line {"role": ..., "version": 1} followed
/// by one object per entry. Keys are written in sorted order.
struct Manifest {
  ManifestRole role = ManifestRole::kSpeechCorpus;
  std::vector<ManifestEntry> entries;
  std::filesystem::path base_dir;

  /// Absolute path for a (possibly relative) path field.
  std::filesystem::path resolve(const std::string& p) const;

  /// Throws InvalidArgument on a parse error or duplicate id.
  static Manifest load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  /// Structural and existence checks; one message per violation.
  std::vector<std::string> check() const;
};

/// Raw JSON text for a value placed in ManifestEntry::extra.
std::string json_string(const std::string& s);
std::string json_number(double v);
std::string json_integer(long long v);

}  // namespace ovaug::pipeline
