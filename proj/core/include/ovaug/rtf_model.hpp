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
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ovaug/phoneme.hpp"
#include "ovaug/signal.hpp"
#include "ovaug/wola.hpp"

namespace ovaug {

enum class ModelMode : std::uint8_t { kSpeechIndependent = 0, kSpeechDependent = 1 };
enum class ModelScope : std::uint8_t { kIndividual = 0, kTalkerAveraged = 1 };

const char* to_string(ModelMode mode);
const char* to_string(ModelScope scope);

/// Running least-squares sums for relative transfer function estimation:
/// per slot and bin, the cross spectrum sum(Y_in * conj(Y_out)) and the outer
/// power sum(|Y_out|^2). A speech-independent accumulator has one slot; a
/// speech-dependent one has one slot per phoneme class.
///
/// Accumulators are single-writer. Build one per utterance or talker in
/// parallel and combine them with merge().
class RtfAccumulator {
 public:
  RtfAccumulator() = default;

  static RtfAccumulator speech_independent(const FrameSpec& spec);
  static RtfAccumulator speech_dependent(const FrameSpec& spec, const PhonemeInventory& inventory);

  /// Adds every frame of one recorded pair. `phonemes` is required in
  /// speech-dependent mode and must not be given otherwise; frames labelled
  /// unknown are skipped.
  void accumulate(const Spectrogram& outer, const Spectrogram& inear, const PhonemeSequence* phonemes = nullptr);

  /// Records which talker and how many utterances contributed.
  void note_utterance(const std::string& talker_id);

  ModelMode mode() const { return mode_; }
  const FrameSpec& spec() const { return spec_; }
  std::size_t num_slots() const { return frame_counts_.size(); }
  std::size_t num_bins() const { return spec_.num_bins(); }
  const std::vector<std::string>& inventory_labels() const { return labels_; }

  /// Cross-spectrum sum for (bin, slot); slot is 0-based.
  const Complex& cross(std::size_t bin, std::size_t slot) const { return cross_(bin, slot); }
  double power(std::size_t bin, std::size_t slot) const { return power_[slot * num_bins() + bin]; }
  std::uint64_t frame_count(std::size_t slot) const { return frame_counts_[slot]; }
  const std::vector<std::uint64_t>& frame_counts() const { return frame_counts_; }
  const std::set<std::string>& talkers() const { return talkers_; }
  std::uint64_t utterance_count() const { return utterances_; }

  friend RtfAccumulator merge(std::span<const RtfAccumulator> accs);

 private:
  RtfAccumulator(const FrameSpec& spec, ModelMode mode, std::size_t slots, std::vector<std::string> labels);

  FrameSpec spec_;
  ModelMode mode_ = ModelMode::kSpeechIndependent;
  std::vector<std::string> labels_;
  ComplexMatrix cross_;          // bins x slots
  std::vector<double> power_;    // slot-major, bins per slot
  std::vector<std::uint64_t> frame_counts_;
  std::set<std::string> talkers_;
  std::uint64_t utterances_ = 0;
};

/// Elementwise sum of compatible accumulators. Throws InvalidArgument on an
/// empty list, ShapeMismatch when spec, mode or slot layout differ.
RtfAccumulator merge(std::span<const RtfAccumulator> accs);

struct FinalizeOptions {
  /// A slot is available when it accumulated at least this many frames.
  std::uint64_t min_frames = 1;
  /// Regularization is relative_eps * mean of all power sums.
  double relative_eps = 1e-10;
  ModelScope scope = ModelScope::kIndividual;
};

/// Finalized own-voice transfer model on the 5 kHz grid.
struct RtfModel {
  ModelMode mode = ModelMode::kSpeechIndependent;
  ModelScope scope = ModelScope::kIndividual;
  FrameSpec spec;
  ComplexMatrix rtfs;                 // bins x slots; unavailable slots are zero
  std::vector<Complex> fallback;      // mean of available slots
  std::vector<bool> available;
  std::vector<std::string> inventory; // phoneme labels, speech-dependent only
  std::vector<std::string> talkers;
  std::uint64_t utterance_count = 0;
  std::vector<std::uint64_t> frame_counts;
  double eps = 0.0;
  std::uint64_t min_frames = 1;
  /// Per slot, bins whose power sum fell below 1e3 * eps.
  std::vector<std::vector<std::uint32_t>> low_confidence;

  std::size_t num_bins() const { return rtfs.bins(); }
  std::size_t num_slots() const { return rtfs.frames(); }
  std::span<const Complex> slot(std::size_t s) const { return rtfs.column(s); }

  /// Model whose every slot and fallback is `value`, all slots available.
  static RtfModel constant(ModelMode mode, std::size_t slots, Complex value, const FrameSpec& spec = model_frame_spec());

  /// Empty when consistent; otherwise one message per violated invariant.
  std::vector<std::string> check() const;

  friend bool operator==(const RtfModel&, const RtfModel&) = default;
};

/// Least-squares estimate per available slot: cross / (power + eps).
/// Throws InvalidArgument when no slot reaches min_frames.
RtfModel finalize(const RtfAccumulator& acc, const FinalizeOptions& options = {});

inline constexpr std::uint16_t kModelFormatVersion = 1;

/// Binary model file: "OVRTF", u16 version, mode and scope bytes, u32 slots,
/// u32 bins, u32 frame_len, u32 hop, u32 sample_rate, slots*bins interleaved
/// (re, im) float64, bins fallback pairs, availability bitmap (LSB first),
/// then a length-prefixed UTF-8 JSON metadata block.
std::vector<char> encode_model(const RtfModel& model);
RtfModel decode_model(std::vector<char> bytes);

void save_model(const RtfModel& model, const std::filesystem::path& path);
RtfModel load_model(const std::filesystem::path& path);

}  // namespace ovaug
