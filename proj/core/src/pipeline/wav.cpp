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

#include "ovaug/pipeline/wav.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

#include "ovaug/container.hpp"
#include "ovaug/error.hpp"

namespace ovaug::pipeline {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

struct Parsed {
  WavInfo info;
  std::size_t data_offset = 0;
  std::size_t data_size = 0;
};

std::uint16_t le16(const char* p) {
  return static_cast<std::uint16_t>(static_cast<unsigned char>(p[0]) | (static_cast<unsigned char>(p[1]) << 8));
}

std::uint32_t le32(const char* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(p[i])) << (8 * i);
  return v;
}

Parsed parse(const std::vector<char>& bytes, const std::filesystem::path& path) {
  auto bad = [&](const std::string& why) { return CorruptFile(path.string() + ": " + why); };
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 || std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw bad("not a RIFF/WAVE file");
  }
  Parsed out;
  bool have_fmt = false;
  bool have_data = false;
  std::uint16_t bits = 0;
  std::uint16_t tag = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const char* id = bytes.data() + pos;
    const std::size_t size = le32(bytes.data() + pos + 4);
    const std::size_t body = pos + 8;
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (size < 16 || body + size > bytes.size()) throw bad("short fmt chunk");
      const char* f = bytes.data() + body;
      tag = le16(f);
      out.info.channels = le16(f + 2);
      out.info.sample_rate = static_cast<int>(le32(f + 4));
      bits = le16(f + 14);
      if (tag == kFormatExtensible) {
        if (size < 40) throw bad("short extensible fmt chunk");
        tag = le16(f + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      out.data_offset = body;
      out.data_size = std::min(size, bytes.size() - body);
      have_data = true;
      break;
    }
    pos = body + size + (size & 1);
  }
  if (!have_fmt || !have_data) throw bad("missing fmt or data chunk");
  if (out.info.channels <= 0 || out.info.sample_rate <= 0) throw bad("bad channel count or rate");
  if (tag == kFormatPcm && bits == 16) {
    out.info.format = SampleFormat::kPcm16;
  } else if (tag == kFormatFloat && bits == 32) {
    out.info.format = SampleFormat::kFloat32;
  } else {
    throw bad("unsupported sample format (need 16-bit PCM or 32-bit float)");
  }
  const std::size_t frame_bytes = static_cast<std::size_t>(out.info.channels) * (bits / 8);
  out.info.frames = out.data_size / frame_bytes;
  return out;
}

std::vector<char> read_prefix(const std::filesystem::path& path, std::size_t limit) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<char> buf(limit);
  in.read(buf.data(), static_cast<std::streamsize>(limit));
  buf.resize(static_cast<std::size_t>(in.gcount()));
  return buf;
}

}  // namespace

WavInfo read_wav_info(const std::filesystem::path& path) {
  // Headers of files we read sit well inside the first few KiB; fall back to
  // the whole file if the data chunk is further in.
  std::vector<char> head = read_prefix(path, 1 << 16);
  try {
    auto p = parse(head, path);
    std::error_code ec;
    const auto file_size = std::filesystem::file_size(path, ec);
    if (!ec) {
      const std::size_t avail = std::min<std::size_t>(le32(head.data() + p.data_offset - 4), file_size - p.data_offset);
      const std::size_t frame_bytes =
          static_cast<std::size_t>(p.info.channels) * (p.info.format == SampleFormat::kPcm16 ? 2 : 4);
      p.info.frames = avail / frame_bytes;
    }
    return p.info;
  } catch (const CorruptFile&) {
    return parse(read_file_bytes(path), path).info;
  }
}

std::vector<Waveform> read_wav(const std::filesystem::path& path) {
  const std::vector<char> bytes = read_file_bytes(path);
  const Parsed p = parse(bytes, path);
  const auto ch = static_cast<std::size_t>(p.info.channels);
  const auto frames = static_cast<std::size_t>(p.info.frames);
  std::vector<Waveform> out(ch, Waveform(std::vector<double>(frames), p.info.sample_rate));
  const char* data = bytes.data() + p.data_offset;
  for (std::size_t n = 0; n < frames; ++n) {
    for (std::size_t c = 0; c < ch; ++c) {
      const std::size_t idx = n * ch + c;
      double v;
      if (p.info.format == SampleFormat::kPcm16) {
        v = static_cast<std::int16_t>(le16(data + 2 * idx)) / 32768.0;
      } else {
        v = static_cast<double>(std::bit_cast<float>(le32(data + 4 * idx)));
        if (!std::isfinite(v)) throw CorruptFile(path.string() + ": non-finite sample");
      }
      out[c].samples[n] = v;
    }
  }
  return out;
}

Waveform read_wav_mono(const std::filesystem::path& path) {
  auto channels = read_wav(path);
  if (channels.size() != 1) {
    throw InvalidArgument(path.string() + ": expected a mono file, found " + std::to_string(channels.size()) +
                          " channels");
  }
  return std::move(channels.front());
}

void write_wav(const std::filesystem::path& path, const std::vector<Waveform>& channels, SampleFormat format) {
  if (channels.empty()) throw InvalidArgument("write_wav: no channels");
  const std::size_t frames = channels.front().size();
  const int rate = channels.front().sample_rate;
  for (const auto& c : channels) {
    if (c.size() != frames || c.sample_rate != rate) throw ShapeMismatch("write_wav: channels differ in length or rate");
  }
  const std::uint16_t bits = format == SampleFormat::kPcm16 ? 16 : 32;
  const auto n_ch = static_cast<std::uint16_t>(channels.size());
  const std::uint32_t block = n_ch * (bits / 8);
  const auto data_bytes = static_cast<std::uint32_t>(frames * block);

  ByteWriter w;
  w.bytes("RIFF");
  w.u32(36 + data_bytes);
  w.bytes("WAVE");
  w.bytes("fmt ");
  w.u32(16);
  w.u16(format == SampleFormat::kPcm16 ? kFormatPcm : kFormatFloat);
  w.u16(n_ch);
  w.u32(static_cast<std::uint32_t>(rate));
  w.u32(static_cast<std::uint32_t>(rate) * block);
  w.u16(static_cast<std::uint16_t>(block));
  w.u16(bits);
  w.bytes("data");
  w.u32(data_bytes);
  for (std::size_t n = 0; n < frames; ++n) {
    for (const auto& c : channels) {
      const double v = c.samples[n];
      if (format == SampleFormat::kPcm16) {
        const double scaled = std::clamp(std::round(v * 32768.0), -32768.0, 32767.0);
        w.u16(static_cast<std::uint16_t>(static_cast<std::int16_t>(scaled)));
      } else {
        w.u32(std::bit_cast<std::uint32_t>(static_cast<float>(v)));
      }
    }
  }
  write_file_bytes(path, w.buffer());
}

}  // namespace ovaug::pipeline
