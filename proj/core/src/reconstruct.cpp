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

#include "ovaug/reconstruct.hpp"

#include "ovaug/container.hpp"
#include "ovaug/error.hpp"

namespace ovaug {

Waveform apply_masks(const Spectrogram& noisy_outer, const Spectrogram& noisy_inear, const ComplexMatrix& mask_outer,
                     const ComplexMatrix& mask_inear) {
  noisy_outer.validate();
  if (!(noisy_outer.spec == noisy_inear.spec) || noisy_outer.signal_length != noisy_inear.signal_length) {
    throw ShapeMismatch("apply_masks: noisy spectrograms are on different grids");
  }
  if (!noisy_outer.data.same_shape(noisy_inear.data) || !noisy_outer.data.same_shape(mask_outer) ||
      !noisy_outer.data.same_shape(mask_inear)) {
    throw ShapeMismatch("apply_masks: mask and spectrogram shapes differ");
  }
  if (!mask_outer.all_finite() || !mask_inear.all_finite()) throw InvalidArgument("apply_masks: non-finite mask values");

  Spectrogram est = noisy_outer;
  auto out = est.data.data();
  const auto yo = noisy_outer.data.data();
  const auto yi = noisy_inear.data.data();
  const auto mo = mask_outer.data();
  const auto mi = mask_inear.data();
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = mo[j] * yo[j] + mi[j] * yi[j];
  return synthesize(est);
}

std::vector<char> encode_masks(const MaskPair& masks) {
  if (!masks.outer.same_shape(masks.inear)) throw ShapeMismatch("encode_masks: mask shapes differ");
  ByteWriter w;
  w.bytes("OVMSK");
  w.u16(kMaskFormatVersion);
  w.u32(static_cast<std::uint32_t>(masks.spec.frame_len));
  w.u32(static_cast<std::uint32_t>(masks.spec.hop));
  w.u32(static_cast<std::uint32_t>(masks.spec.sample_rate));
  w.u32(static_cast<std::uint32_t>(masks.outer.bins()));
  w.u32(static_cast<std::uint32_t>(masks.outer.frames()));
  w.complex_values(masks.outer.data());
  w.complex_values(masks.inear.data());
  w.text_block("{}");
  return w.buffer();
}

MaskPair decode_masks(std::vector<char> bytes) {
  ByteReader r(std::move(bytes));
  read_header(r, "OVMSK", kMaskFormatVersion);
  MaskPair m;
  m.spec.frame_len = r.u32();
  m.spec.hop = r.u32();
  m.spec.sample_rate = static_cast<int>(r.u32());
  try {
    m.spec.validate();
  } catch (const InvalidArgument& e) {
    throw CorruptFile(std::string("masks: ") + e.what());
  }
  const std::uint32_t bins = r.u32();
  const std::uint32_t frames = r.u32();
  if (bins != m.spec.num_bins()) throw CorruptFile("masks: bin count does not match frame spec");
  if (static_cast<std::uint64_t>(bins) * frames * 32 > r.remaining()) throw CorruptFile("unexpected end of file");
  m.outer = ComplexMatrix(bins, frames);
  m.inear = ComplexMatrix(bins, frames);
  r.complex_values(m.outer.data());
  r.complex_values(m.inear.data());
  r.text_block();
  r.expect_end();
  return m;
}

void save_masks(const MaskPair& masks, const std::filesystem::path& path) {
  write_file_bytes(path, encode_masks(masks));
}

MaskPair load_masks(const std::filesystem::path& path) { return decode_masks(read_file_bytes(path)); }

}  // namespace ovaug
