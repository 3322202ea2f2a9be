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
#include "ovaug/wola.hpp"

namespace ovaug {

/// Complex masks for the outer and in-ear spectrograms on one STFT grid.
struct MaskPair {
  FrameSpec spec;
  ComplexMatrix outer;
  ComplexMatrix inear;

  friend bool operator==(const MaskPair&, const MaskPair&) = default;
};

/// Estimated own voice: synthesize(M_o * Y_o + M_i * Y_i), elementwise.
/// Throws ShapeMismatch when shapes or grids differ and InvalidArgument on
/// non-finite masks.
Waveform apply_masks(const Spectrogram& noisy_outer, const Spectrogram& noisy_inear, const ComplexMatrix& mask_outer,
                     const ComplexMatrix& mask_inear);

inline constexpr std::uint16_t kMaskFormatVersion = 1;

/// "OVMSK", u16 version, u32 frame_len, u32 hop, u32 sample_rate, u32 bins,
/// u32 frames, outer then in-ear mask as interleaved (re, im) float64, then a
/// length-prefixed UTF-8 metadata block.
std::vector<char> encode_masks(const MaskPair& masks);
MaskPair decode_masks(std::vector<char> bytes);
void save_masks(const MaskPair& masks, const std::filesystem::path& path);
MaskPair load_masks(const std::filesystem::path& path);

}  // namespace ovaug
