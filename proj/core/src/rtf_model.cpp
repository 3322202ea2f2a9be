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

#include "ovaug/rtf_model.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>

#include "ovaug/container.hpp"
#include "ovaug/error.hpp"

namespace ovaug {

using nlohmann::json;

const char* to_string(ModelMode mode) {
  return mode == ModelMode::kSpeechIndependent ? "speech-independent" : "speech-dependent";
}

const char* to_string(ModelScope scope) {
  return scope == ModelScope::kIndividual ? "individual" : "talker-averaged";
}

RtfAccumulator::RtfAccumulator(const FrameSpec& spec, ModelMode mode, std::size_t slots,
                               std::vector<std::string> labels)
    : spec_(spec),
      mode_(mode),
      labels_(std::move(labels)),
      cross_(spec.num_bins(), slots),
      power_(spec.num_bins() * slots, 0.0),
      frame_counts_(slots, 0) {}

RtfAccumulator RtfAccumulator::speech_independent(const FrameSpec& spec) {
  spec.validate();
  return RtfAccumulator(spec, ModelMode::kSpeechIndependent, 1, {});
}

RtfAccumulator RtfAccumulator::speech_dependent(const FrameSpec& spec, const PhonemeInventory& inventory) {
  spec.validate();
  if (inventory.size() == 0) throw InvalidArgument("speech-dependent accumulator needs a non-empty inventory");
  return RtfAccumulator(spec, ModelMode::kSpeechDependent, inventory.size(), inventory.labels());
}

void RtfAccumulator::accumulate(const Spectrogram& outer, const Spectrogram& inear, const PhonemeSequence* phonemes) {
  if (!(outer.spec == spec_) || !(inear.spec == spec_)) {
    throw ShapeMismatch("accumulate: spectrogram frame spec differs from accumulator spec");
  }
  outer.validate();
  inear.validate();
  if (!outer.data.same_shape(inear.data)) throw ShapeMismatch("accumulate: outer and in-ear shapes differ");

  const std::size_t n_frames = outer.frames();
  if (mode_ == ModelMode::kSpeechDependent) {
    if (phonemes == nullptr) throw InvalidArgument("accumulate: speech-dependent mode requires a phoneme sequence");
    if (phonemes->inventory_size != num_slots()) {
      throw ShapeMismatch("accumulate: phoneme inventory size differs from accumulator slots");
    }
    phonemes->check(n_frames);
  } else if (phonemes != nullptr) {
    throw InvalidArgument("accumulate: speech-independent mode takes no phoneme sequence");
  }

  const std::size_t bins = num_bins();
  for (std::size_t l = 0; l < n_frames; ++l) {
    std::size_t slot = 0;
    if (phonemes != nullptr) {
      const PhonemeId id = phonemes->ids[l];
      if (id == kUnknownPhoneme) continue;
      slot = id - 1;
    }
    const auto yo = outer.data.column(l);
    const auto yi = inear.data.column(l);
    auto num = cross_.column(slot);
    double* den = power_.data() + slot * bins;
    for (std::size_t k = 0; k < bins; ++k) {
      num[k] += yi[k] * std::conj(yo[k]);
      den[k] += std::norm(yo[k]);
    }
    ++frame_counts_[slot];
  }
}

void RtfAccumulator::note_utterance(const std::string& talker_id) {
  talkers_.insert(talker_id);
  ++utterances_;
}

RtfAccumulator merge(std::span<const RtfAccumulator> accs) {
  if (accs.empty()) throw InvalidArgument("merge: no accumulators");
  RtfAccumulator out = accs.front();
  for (std::size_t i = 1; i < accs.size(); ++i) {
    const RtfAccumulator& a = accs[i];
    if (!(a.spec_ == out.spec_) || a.mode_ != out.mode_ || a.num_slots() != out.num_slots() ||
        a.labels_ != out.labels_) {
      throw ShapeMismatch("merge: incompatible accumulators");
    }
    auto dst = out.cross_.data();
    auto src = a.cross_.data();
    for (std::size_t j = 0; j < dst.size(); ++j) dst[j] += src[j];
    for (std::size_t j = 0; j < out.power_.size(); ++j) out.power_[j] += a.power_[j];
    for (std::size_t j = 0; j < out.frame_counts_.size(); ++j) out.frame_counts_[j] += a.frame_counts_[j];
    out.talkers_.insert(a.talkers_.begin(), a.talkers_.end());
    out.utterances_ += a.utterances_;
  }
  return out;
}

RtfModel finalize(const RtfAccumulator& acc, const FinalizeOptions& options) {
  if (acc.num_slots() == 0) throw InvalidArgument("finalize: accumulator is empty");
  const std::size_t bins = acc.num_bins();
  const std::size_t slots = acc.num_slots();

  double power_sum = 0.0;
  for (std::size_t s = 0; s < slots; ++s) {
    for (std::size_t k = 0; k < bins; ++k) power_sum += acc.power(k, s);
  }
  const double eps = options.relative_eps * power_sum / static_cast<double>(bins * slots);
  const double weak = 1e3 * eps;

  RtfModel m;
  m.mode = acc.mode();
  m.scope = options.scope;
  m.spec = acc.spec();
  m.rtfs = ComplexMatrix(bins, slots);
  m.available.assign(slots, false);
  m.inventory = acc.inventory_labels();
  m.talkers.assign(acc.talkers().begin(), acc.talkers().end());
  m.utterance_count = acc.utterance_count();
  m.frame_counts = acc.frame_counts();
  m.eps = eps;
  m.min_frames = options.min_frames;
  m.low_confidence.assign(slots, {});

  std::size_t n_available = 0;
  for (std::size_t s = 0; s < slots; ++s) {
    if (acc.frame_count(s) == 0 || acc.frame_count(s) < options.min_frames) continue;
    m.available[s] = true;
    ++n_available;
    auto col = m.rtfs.column(s);
    for (std::size_t k = 0; k < bins; ++k) {
      const double den = acc.power(k, s) + eps;
      // A zero denominator only happens for an all-silent accumulation.
      col[k] = den > 0.0 ? acc.cross(k, s) / den : Complex{};
      if (acc.power(k, s) < weak || den <= 0.0) m.low_confidence[s].push_back(static_cast<std::uint32_t>(k));
    }
  }
  if (n_available == 0) throw InvalidArgument("finalize: no slot has enough frames for an estimate");

  m.fallback.assign(bins, Complex{});
  for (std::size_t s = 0; s < slots; ++s) {
    if (!m.available[s]) continue;
    auto col = m.rtfs.column(s);
    for (std::size_t k = 0; k < bins; ++k) m.fallback[k] += col[k];
  }
  for (auto& f : m.fallback) f /= static_cast<double>(n_available);
  return m;
}

RtfModel RtfModel::constant(ModelMode mode, std::size_t slots, Complex value, const FrameSpec& spec) {
  if (slots == 0 || (mode == ModelMode::kSpeechIndependent && slots != 1)) {
    throw InvalidArgument("constant model: invalid slot count");
  }
  RtfModel m;
  m.mode = mode;
  m.spec = spec;
  m.rtfs = ComplexMatrix(spec.num_bins(), slots, value);
  m.fallback.assign(spec.num_bins(), value);
  m.available.assign(slots, true);
  if (mode == ModelMode::kSpeechDependent) m.inventory = PhonemeInventory::numbered(slots).labels();
  m.frame_counts.assign(slots, 1);
  m.low_confidence.assign(slots, {});
  return m;
}

std::vector<std::string> RtfModel::check() const {
  std::vector<std::string> v;
  try {
    spec.validate();
  } catch (const Error& e) {
    v.emplace_back(std::string("frame spec: ") + e.what());
    return v;
  }
  if (spec.sample_rate != 5000 || spec.frame_len != 128) v.emplace_back("model grid must be 128 samples at 5000 Hz");
  const std::size_t slots = num_slots();
  if (rtfs.bins() != spec.num_bins()) v.emplace_back("rtf bin count does not match frame spec");
  if (fallback.size() != rtfs.bins()) v.emplace_back("fallback length does not match bin count");
  if (available.size() != slots) v.emplace_back("availability length does not match slot count");
  if (frame_counts.size() != slots) v.emplace_back("frame count length does not match slot count");
  if (low_confidence.size() != slots) v.emplace_back("low-confidence list length does not match slot count");
  if (mode == ModelMode::kSpeechIndependent && slots != 1) v.emplace_back("speech-independent model must have one slot");
  if (mode == ModelMode::kSpeechDependent && inventory.size() != slots) {
    v.emplace_back("inventory size does not match slot count");
  }
  if (!v.empty()) return v;

  std::size_t n_available = 0;
  std::vector<Complex> mean(rtfs.bins());
  for (std::size_t s = 0; s < slots; ++s) {
    const bool enough = frame_counts[s] > 0 && frame_counts[s] >= min_frames;
    if (available[s] != enough) {
      v.emplace_back("slot " + std::to_string(s + 1) + " availability disagrees with its frame count");
    }
    auto col = slot(s);
    if (available[s]) {
      ++n_available;
      for (std::size_t k = 0; k < col.size(); ++k) {
        if (!std::isfinite(col[k].real()) || !std::isfinite(col[k].imag())) {
          v.emplace_back("slot " + std::to_string(s + 1) + " contains non-finite values");
          break;
        }
        mean[k] += col[k];
      }
    } else if (std::any_of(col.begin(), col.end(), [](const Complex& c) { return c != Complex{}; })) {
      v.emplace_back("unavailable slot " + std::to_string(s + 1) + " holds non-zero values");
    }
  }
  if (n_available == 0) {
    v.emplace_back("no slot is available");
    return v;
  }
  double max_dev = 0.0;
  double scale = 0.0;
  for (std::size_t k = 0; k < mean.size(); ++k) {
    mean[k] /= static_cast<double>(n_available);
    max_dev = std::max(max_dev, std::abs(mean[k] - fallback[k]));
    scale = std::max(scale, std::abs(mean[k]));
  }
  if (max_dev > 1e-9 * std::max(1.0, scale)) v.emplace_back("fallback is not the mean of the available slots");
  return v;
}

std::vector<char> encode_model(const RtfModel& m) {
  ByteWriter w;
  w.bytes("OVRTF");
  w.u16(kModelFormatVersion);
  w.u8(static_cast<std::uint8_t>(m.mode));
  w.u8(static_cast<std::uint8_t>(m.scope));
  w.u32(static_cast<std::uint32_t>(m.num_slots()));
  w.u32(static_cast<std::uint32_t>(m.num_bins()));
  w.u32(static_cast<std::uint32_t>(m.spec.frame_len));
  w.u32(static_cast<std::uint32_t>(m.spec.hop));
  w.u32(static_cast<std::uint32_t>(m.spec.sample_rate));
  w.complex_values(m.rtfs.data());
  w.complex_values(m.fallback);
  std::vector<std::uint8_t> bitmap((m.available.size() + 7) / 8, 0);
  for (std::size_t s = 0; s < m.available.size(); ++s) {
    if (m.available[s]) bitmap[s / 8] |= static_cast<std::uint8_t>(1u << (s % 8));
  }
  for (auto b : bitmap) w.u8(b);

  json meta;
  meta["eps"] = m.eps;
  meta["frame_counts"] = m.frame_counts;
  meta["inventory"] = m.inventory;
  meta["low_confidence"] = m.low_confidence;
  meta["min_frames"] = m.min_frames;
  meta["talkers"] = m.talkers;
  meta["utterances"] = m.utterance_count;
  w.text_block(meta.dump());
  return w.buffer();
}

RtfModel decode_model(std::vector<char> bytes) {
  ByteReader r(std::move(bytes));
  read_header(r, "OVRTF", kModelFormatVersion);
  RtfModel m;
  const std::uint8_t mode = r.u8();
  const std::uint8_t scope = r.u8();
  if (mode > 1 || scope > 1) throw CorruptFile("model: bad mode or scope byte");
  m.mode = static_cast<ModelMode>(mode);
  m.scope = static_cast<ModelScope>(scope);
  const std::uint32_t slots = r.u32();
  const std::uint32_t bins = r.u32();
  m.spec.frame_len = r.u32();
  m.spec.hop = r.u32();
  m.spec.sample_rate = static_cast<int>(r.u32());
  try {
    m.spec.validate();
  } catch (const InvalidArgument& e) {
    throw CorruptFile(std::string("model: ") + e.what());
  }
  if (bins != m.spec.num_bins() || slots == 0) throw CorruptFile("model: inconsistent slot or bin count");
  if (static_cast<std::uint64_t>(slots) * bins * 16 > r.remaining()) throw CorruptFile("unexpected end of file");

  m.rtfs = ComplexMatrix(bins, slots);
  r.complex_values(m.rtfs.data());
  m.fallback.resize(bins);
  r.complex_values(m.fallback);
  m.available.assign(slots, false);
  const std::size_t bitmap_len = (slots + 7) / 8;
  for (std::size_t i = 0; i < bitmap_len; ++i) {
    const std::uint8_t b = r.u8();
    for (std::size_t bit = 0; bit < 8; ++bit) {
      const std::size_t s = i * 8 + bit;
      const bool set = (b >> bit) & 1u;
      if (s < slots) {
        m.available[s] = set;
      } else if (set) {
        throw CorruptFile("model: availability bitmap has bits set past the last slot");
      }
    }
  }

  const std::string text = r.text_block();
  r.expect_end();
  try {
    const json meta = json::parse(text);
    m.eps = meta.at("eps").get<double>();
    m.frame_counts = meta.at("frame_counts").get<std::vector<std::uint64_t>>();
    m.inventory = meta.at("inventory").get<std::vector<std::string>>();
    m.low_confidence = meta.at("low_confidence").get<std::vector<std::vector<std::uint32_t>>>();
    m.min_frames = meta.at("min_frames").get<std::uint64_t>();
    m.talkers = meta.at("talkers").get<std::vector<std::string>>();
    m.utterance_count = meta.at("utterances").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw CorruptFile(std::string("model: bad metadata block: ") + e.what());
  }
  if (m.frame_counts.size() != slots || m.low_confidence.size() != slots) {
    throw CorruptFile("model: metadata slot count disagrees with header");
  }
  return m;
}

void save_model(const RtfModel& model, const std::filesystem::path& path) {
  write_file_bytes(path, encode_model(model));
}

RtfModel load_model(const std::filesystem::path& path) { return decode_model(read_file_bytes(path)); }

}  // namespace ovaug
