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

#include "ovaug/phoneme.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ovaug/error.hpp"
#include "ovaug/random.hpp"

namespace ovaug {
namespace {

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double parse_seconds(std::string_view field, std::size_t line_no) {
  double v = 0.0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw InvalidArgument("alignment line " + std::to_string(line_no) + ": bad time '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

PhonemeInventory::PhonemeInventory(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InvalidArgument("phoneme inventory must not be empty");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InvalidArgument("phoneme inventory contains an empty label");
    if (!ids_.emplace(labels_[i], static_cast<PhonemeId>(i + 1)).second) {
      throw InvalidArgument("duplicate phoneme label '" + labels_[i] + "'");
    }
  }
}

PhonemeInventory PhonemeInventory::numbered(std::size_t count) {
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) labels.push_back("p" + std::to_string(i));
  return PhonemeInventory(std::move(labels));
}

PhonemeInventory PhonemeInventory::load(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  std::vector<std::string> labels;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    std::string line = text.substr(pos, nl - pos);
    if (!line.empty()) labels.push_back(std::move(line));
    pos = nl + 1;
  }
  return PhonemeInventory(std::move(labels));
}

void PhonemeInventory::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& l : labels_) out << l << '\n';
}

const std::string& PhonemeInventory::label(PhonemeId id) const {
  if (id == kUnknownPhoneme || id > labels_.size()) throw InvalidArgument("phoneme id out of range");
  return labels_[id - 1];
}

PhonemeId PhonemeInventory::id(const std::string& label) const {
  auto it = ids_.find(label);
  if (it == ids_.end()) throw InvalidArgument("unknown phoneme label '" + label + "'");
  return it->second;
}

void PhonemeSequence::check(std::size_t num_frames) const {
  if (ids.size() != num_frames) {
    throw ShapeMismatch("phoneme sequence has " + std::to_string(ids.size()) + " frames, expected " +
                        std::to_string(num_frames));
  }
  for (PhonemeId id : ids) {
    if (id > inventory_size) throw InvalidArgument("phoneme id " + std::to_string(id) + " exceeds inventory size");
  }
}

std::vector<AlignmentInterval> parse_alignment(const std::string& text) {
  std::vector<AlignmentInterval> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    const std::string_view line(text.data() + pos, nl - pos);
    pos = nl + 1;
    if (line.empty()) continue;

    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos || line.find('\t', t2 + 1) != std::string_view::npos) {
      throw InvalidArgument("alignment line " + std::to_string(line_no) + ": expected start<TAB>end<TAB>label");
    }
    AlignmentInterval iv;
    iv.start = parse_seconds(line.substr(0, t1), line_no);
    iv.end = parse_seconds(line.substr(t1 + 1, t2 - t1 - 1), line_no);
    iv.label = std::string(line.substr(t2 + 1));
    if (iv.start < 0.0 || iv.end < 0.0) {
      throw InvalidArgument("alignment line " + std::to_string(line_no) + ": negative time");
    }
    if (iv.end < iv.start) throw InvalidArgument("alignment line " + std::to_string(line_no) + ": end before start");
    if (iv.label.empty()) throw InvalidArgument("alignment line " + std::to_string(line_no) + ": empty label");
    if (!out.empty() && iv.start < out.back().end) {
      throw InvalidArgument("alignment line " + std::to_string(line_no) + ": intervals overlap or are out of order");
    }
    out.push_back(std::move(iv));
  }
  return out;
}

std::vector<AlignmentInterval> read_alignment_file(const std::filesystem::path& path) {
  return parse_alignment(read_text(path));
}

PhonemeSequence label_frames(const std::vector<AlignmentInterval>& intervals, const PhonemeInventory& inventory,
                             const FrameSpec& spec, std::size_t signal_len) {
  spec.validate();
  std::vector<PhonemeId> interval_ids;
  interval_ids.reserve(intervals.size());
  for (const auto& iv : intervals) interval_ids.push_back(inventory.id(iv.label));

  const std::size_t n_frames = num_frames_for(spec, signal_len);
  // Padding frames whose centre lies past the final sample are labelled as
  // the final sample.
  const double last_sample_time =
      signal_len == 0 ? 0.0 : static_cast<double>(signal_len - 1) / static_cast<double>(spec.sample_rate);

  PhonemeSequence seq{std::vector<PhonemeId>(n_frames, kUnknownPhoneme), spec, inventory.size()};
  std::size_t cursor = 0;
  for (std::size_t l = 0; l < n_frames; ++l) {
    const double t = std::clamp(frame_center_seconds(spec, l), 0.0, last_sample_time);
    // Centres are non-decreasing, so the matching interval never moves back.
    while (cursor < intervals.size() && intervals[cursor].end <= t) ++cursor;
    if (cursor < intervals.size() && intervals[cursor].start <= t) seq.ids[l] = interval_ids[cursor];
  }
  return seq;
}

PhonemeSequence load_alignment(const std::filesystem::path& path, const PhonemeInventory& inventory,
                               const FrameSpec& spec, std::size_t signal_len) {
  return label_frames(read_alignment_file(path), inventory, spec, signal_len);
}

PhonemeSequence random_sequence(std::size_t num_frames, const PhonemeInventory& inventory, std::uint64_t seed,
                                const FrameSpec& spec) {
  if (inventory.size() == 0) throw InvalidArgument("random_sequence: empty inventory");
  Rng rng(seed);
  PhonemeSequence seq{std::vector<PhonemeId>(num_frames), spec, inventory.size()};
  for (auto& id : seq.ids) id = static_cast<PhonemeId>(uniform_index(rng, inventory.size()) + 1);
  return seq;
}

}  // namespace ovaug
