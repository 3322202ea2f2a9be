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
#include <map>
#include <string>
#include <vector>

#include "ovaug/wola.hpp"

namespace ovaug {

using PhonemeId = std::uint32_t;

/// Label for frames not covered by any alignment interval.
inline constexpr PhonemeId kUnknownPhoneme = 0;

/// Ordered list of P phoneme labels; label i (0-based) has id i + 1.
class PhonemeInventory {
 public:
  PhonemeInventory() = default;
  explicit PhonemeInventory(std::vector<std::string> labels);

  /// Inventory of P anonymous labels "p1".."pP".
  static PhonemeInventory numbered(std::size_t count);

  /// One label per line, '\n' terminated, in id order.
  static PhonemeInventory load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(PhonemeId id) const;

  /// Throws InvalidArgument when the label is not part of the inventory.
  PhonemeId id(const std::string& label) const;
  bool contains(const std::string& label) const { return ids_.contains(label); }

  friend bool operator==(const PhonemeInventory& a, const PhonemeInventory& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, PhonemeId> ids_;
};

/// Frame-wise phoneme labels on a given STFT grid.
struct PhonemeSequence {
  std::vector<PhonemeId> ids;
  FrameSpec spec;
  std::size_t inventory_size = 0;

  std::size_t size() const { return ids.size(); }

  /// Throws ShapeMismatch when the sequence does not annotate exactly
  /// `num_frames` frames, InvalidArgument on an out-of-range id.
  void check(std::size_t num_frames) const;
};

struct AlignmentInterval {
  double start = 0.0;
  double end = 0.0;
  std::string label;
};

/// Parses `start<TAB>end<TAB>label` lines. Blank lines are ignored.
std::vector<AlignmentInterval> parse_alignment(const std::string& text);
std::vector<AlignmentInterval> read_alignment_file(const std::filesystem::path& path);

/// Labels each frame of a `signal_len`-sample signal by the interval that
/// contains its centre time. When two intervals share a boundary, the later
/// one wins.
PhonemeSequence label_frames(const std::vector<AlignmentInterval>& intervals, const PhonemeInventory& inventory,
                             const FrameSpec& spec, std::size_t signal_len);

PhonemeSequence load_alignment(const std::filesystem::path& path, const PhonemeInventory& inventory,
                               const FrameSpec& spec, std::size_t signal_len);

/// Independent uniform draws over 1..P, reproducible for a given seed.
PhonemeSequence random_sequence(std::size_t num_frames, const PhonemeInventory& inventory, std::uint64_t seed,
                                const FrameSpec& spec = model_frame_spec());

}  // namespace ovaug
