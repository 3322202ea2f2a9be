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
#include <string>
#include <string_view>
#include <vector>

#include "ovaug/signal.hpp"

namespace ovaug {

/// Little-endian byte writer shared by the model and mask file formats.
class ByteWriter {
 public:
  void bytes(std::string_view s) { buf_.insert(buf_.end(), s.begin(), s.end()); }
  void u8(std::uint8_t v) { buf_.push_back(static_cast<char>(v)); }
  void u16(std::uint16_t v);
  void u32(std::uint32_t v);
  void f64(double v);
  void complex_values(std::span<const Complex> values);
  /// u32 byte length followed by the raw UTF-8 text.
  void text_block(std::string_view text);

  const std::vector<char>& buffer() const { return buf_; }

 private:
  std::vector<char> buf_;
};

/// Bounds-checked reader; every read past the end throws CorruptFile.
class ByteReader {
 public:
  explicit ByteReader(std::vector<char> data) : data_(std::move(data)) {}

  std::string bytes(std::size_t n);
  std::uint8_t u8();
  std::uint16_t u16();
  std::uint32_t u32();
  double f64();
  void complex_values(std::span<Complex> out);
  std::string text_block();

  std::size_t remaining() const { return data_.size() - pos_; }
  /// Throws CorruptFile if unread bytes remain.
  void expect_end() const;

 private:
  const char* take(std::size_t n);

  std::vector<char> data_;
  std::size_t pos_ = 0;
};

std::vector<char> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, const std::vector<char>& data);

/// Reads the magic and version of a container file. Throws CorruptFile when
/// the magic differs and VersionMismatch when the version is not `expected`.
void read_header(ByteReader& r, std::string_view magic, std::uint16_t expected_version);

}  // namespace ovaug
