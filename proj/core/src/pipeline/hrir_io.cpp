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

#include "ovaug/pipeline/hrir_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>

#include "ovaug/error.hpp"
#include "ovaug/pipeline/wav.hpp"

namespace ovaug::pipeline {

using nlohmann::json;

HrirSet load_hrir_set(const std::filesystem::path& dir, const std::string& id) {
  const auto manifest = dir / "manifest.jsonl";
  std::ifstream in(manifest, std::ios::binary);
  if (!in) throw IoError("cannot open HRIR manifest " + manifest.string());
  HrirSet set;
  set.id = id;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
      if (!header) {
        if (j.at("role").get<std::string>() != "hrir-directions") throw InvalidArgument("wrong manifest role");
        header = true;
        continue;
      }
      HrirDirection d;
      d.azimuth_deg = j.at("azimuth").get<double>();
      const auto channels = read_wav(dir / j.at("file").get<std::string>());
      if (channels.size() != 2) throw InvalidArgument("HRIR file must be stereo (outer, in-ear)");
      if (set.sample_rate == 0) set.sample_rate = channels[0].sample_rate;
      if (channels[0].sample_rate != set.sample_rate) throw InvalidArgument("HRIR files differ in sample rate");
      d.outer = channels[0].samples;
      d.inear = channels[1].samples;
      set.directions.push_back(std::move(d));
    } catch (const json::exception& e) {
      throw InvalidArgument(manifest.string() + ": " + e.what());
    }
  }
  if (!header) throw InvalidArgument(manifest.string() + ": missing header line");
  set.validate();
  return set;
}

void save_hrir_set(const HrirSet& set, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / "manifest.jsonl", std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write HRIR manifest in " + dir.string());
  out << json{{"role", "hrir-directions"}, {"version", 1}}.dump() << '\n';
  for (const auto& d : set.directions) {
    char name[32];
    std::snprintf(name, sizeof(name), "az%03d.wav", static_cast<int>(std::lround(d.azimuth_deg)));
    std::vector<double> outer = d.outer;
    std::vector<double> inear = d.inear;
    const std::size_t len = std::max(outer.size(), inear.size());
    outer.resize(len, 0.0);
    inear.resize(len, 0.0);
    write_wav(dir / name, {Waveform(std::move(outer), set.sample_rate), Waveform(std::move(inear), set.sample_rate)});
    out << json{{"azimuth", d.azimuth_deg}, {"file", name}}.dump() << '\n';
  }
}

}  // namespace ovaug::pipeline
