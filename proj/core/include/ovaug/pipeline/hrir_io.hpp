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

#include "ovaug/spatializer.hpp"

namespace ovaug::pipeline {

/// Loads one HRIR set directory: `manifest.jsonl` (role "hrir-directions")
/// lists {"azimuth": deg, "file": "az045.wav"} per direction, and each file
/// is a stereo WAV with the outer response on channel 0 and the in-ear
/// response on channel 1.
HrirSet load_hrir_set(const std::filesystem::path& dir, const std::string& id);

/// Writes a set in the same layout, naming files azNNN.wav.
void save_hrir_set(const HrirSet& set, const std::filesystem::path& dir);

}  // namespace ovaug::pipeline
