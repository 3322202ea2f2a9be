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

#include "ovaug/container.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "ovaug/error.hpp"

namespace ovaug {

static_assert(std::endian::native == std::endian::little, "container I/O assumes a little-endian host");

void ByteWriter::u16(std::uint16_t v) {
  u8(static_cast<std::uint8_t>(v & 0xff));
  u8(static_cast<std::uint8_t>(v >> 8));
}

void ByteWriter::u32(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

void ByteWriter::f64(double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>((bits >> (8 * i)) & 0xff));
}

void ByteWriter::complex_values(std::span<const Complex> values) {
  for (const auto& c : values) {
    f64(c.real());
    f64(c.imag());
  }
}

void ByteWriter::text_block(std::string_view text) {
  u32(static_cast<std::uint32_t>(text.size()));
  bytes(text);
}

const char* ByteReader::take(std::size_t n) {
  if (n > remaining()) throw CorruptFile("unexpected end of file");
  const char* p = data_.data() + pos_;
  pos_ += n;
  return p;
}

std::string ByteReader::bytes(std::size_t n) {
  const char* p = take(n);
  return std::string(p, n);
}

std::uint8_t ByteReader::u8() { return static_cast<std::uint8_t>(*take(1)); }

std::uint16_t ByteReader::u16() {
  const auto* p = reinterpret_cast<const unsigned char*>(take(2));
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t ByteReader::u32() {
  const auto* p = reinterpret_cast<const unsigned char*>(take(4));
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
  return v;
}

double ByteReader::f64() {
  const auto* p = reinterpret_cast<const unsigned char*>(take(8));
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return std::bit_cast<double>(bits);
}

void ByteReader::complex_values(std::span<Complex> out) {
  if (out.size() > remaining() / 16) throw CorruptFile("unexpected end of file");
  for (auto& c : out) {
    const double re = f64();
    const double im = f64();
    c = {re, im};
  }
}

std::string ByteReader::text_block() {
  const std::uint32_t n = u32();
  return bytes(n);
}

void ByteReader::expect_end() const {
  if (remaining() != 0) throw CorruptFile("trailing bytes after end of record");
}

std::vector<char> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return std::vector<char>(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file_bytes(const std::filesystem::path& path, const std::vector<char>& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("short write to " + path.string());
}

void read_header(ByteReader& r, std::string_view magic, std::uint16_t expected_version) {
  if (r.remaining() < magic.size()) throw CorruptFile("file too short for header");
  if (r.bytes(magic.size()) != magic) throw CorruptFile("bad magic, expected " + std::string(magic));
  const std::uint16_t version = r.u16();
  if (version != expected_version) {
    throw VersionMismatch("unsupported " + std::string(magic) + " version " + std::to_string(version) +
                          " (expected " + std::to_string(expected_version) + ")");
  }
}

}  // namespace ovaug
