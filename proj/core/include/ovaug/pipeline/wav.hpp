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
#include <vector>

#include "ovaug/signal.hpp"

namespace ovaug::pipeline {

enum class SampleFormat { kPcm16, kFloat32 };

struct WavInfo {
  int sample_rate = 0;
  int channels = 0;
  std::uint64_t frames = 0;
  SampleFormat format = SampleFormat::kPcm16;
};

/// Reads the RIFF header only.
WavInfo read_wav_info(const std::filesystem::path& path);

/// All channels of a 16-bit PCM or 32-bit float RIFF/WAVE file, one Waveform
/// per channel. PCM is scaled to [-1, 1). Throws IoError or CorruptFile.
std::vector<Waveform> read_wav(const std::filesystem::path& path);

/// Reads a file that must have exactly one channel.
Waveform read_wav_mono(const std::filesystem::path& path);

/// Writes equal-length, equal-rate channels interleaved. Float32 output is
/// the default so pipeline stages do not requantize.
void write_wav(const std::filesystem::path& path, const std::vector<Waveform>& channels,
               SampleFormat format = SampleFormat::kFloat32);

}  // namespace ovaug::pipeline
