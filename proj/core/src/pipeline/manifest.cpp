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

#include "ovaug/pipeline/manifest.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "ovaug/error.hpp"

namespace ovaug::pipeline {

using nlohmann::json;

namespace {

constexpr int kManifestVersion = 1;

const std::pair<ManifestRole, const char*> kRoles[] = {
    {ManifestRole::kSpeechCorpus, "speech-corpus"},
    {ManifestRole::kRecordedPairs, "recorded-pairs"},
    {ManifestRole::kOwnVoicePairs, "own-voice-pairs"},
    {ManifestRole::kNoise, "noise"},
    {ManifestRole::kHrir, "hrir"},
    {ManifestRole::kSpatializedNoise, "spatialized-noise"},
    {ManifestRole::kMixedExamples, "mixed-examples"},
    {ManifestRole::kModels, "models"},
};

const char* const kPathKeys[] = {"alignment", "audio", "inear", "outer", "path", "target"};

std::string* path_field(ManifestEntry& e, const std::string& key) {
  if (key == "alignment") return &e.alignment;
  if (key == "audio") return &e.audio;
  if (key == "inear") return &e.inear;
  if (key == "outer") return &e.outer;
  if (key == "path") return &e.path;
  if (key == "target") return &e.target;
  return nullptr;
}

const std::string& path_field(const ManifestEntry& e, const std::string& key) {
  return *path_field(const_cast<ManifestEntry&>(e), key);
}

}  // namespace

const char* to_string(ManifestRole role) {
  for (const auto& [r, name] : kRoles) {
    if (r == role) return name;
  }
  return "?";
}

ManifestRole parse_role(const std::string& name) {
  for (const auto& [r, n] : kRoles) {
    if (name == n) return r;
  }
  throw InvalidArgument("unknown manifest role '" + name + "'");
}

std::filesystem::path Manifest::resolve(const std::string& p) const {
  const std::filesystem::path path(p);
  return path.is_absolute() ? path : (base_dir / path).lexically_normal();
}

Manifest Manifest::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open manifest " + path.string());
  Manifest m;
  m.base_dir = std::filesystem::absolute(path).parent_path();
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::set<std::string> ids;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw InvalidArgument(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (!j.is_object()) throw InvalidArgument(path.string() + ":" + std::to_string(line_no) + ": expected an object");
    try {
      if (!have_header) {
        m.role = parse_role(j.at("role").get<std::string>());
        if (j.value("version", 0) != kManifestVersion) throw InvalidArgument("unsupported manifest version");
        have_header = true;
        continue;
      }
      ManifestEntry e;
      for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key == "id") {
          e.id = it->get<std::string>();
        } else if (key == "talker") {
          e.talker = it->get<std::string>();
        } else if (key == "duration") {
          e.duration = it->get<double>();
        } else if (std::string* f = path_field(e, key)) {
          *f = it->get<std::string>();
        } else {
          e.extra[key] = it->dump();
        }
      }
      if (e.id.empty()) throw InvalidArgument("entry without id");
      if (!ids.insert(e.id).second) throw InvalidArgument("duplicate id '" + e.id + "'");
      m.entries.push_back(std::move(e));
    } catch (const json::exception& e) {
      throw InvalidArgument(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    } catch (const InvalidArgument& e) {
      throw InvalidArgument(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_header) throw InvalidArgument(path.string() + ": missing manifest header line");
  return m;
}

void Manifest::save(const std::filesystem::path& path) const {
  std::ostringstream out;
  out << json{{"role", to_string(role)}, {"version", kManifestVersion}}.dump() << '\n';
  for (const auto& e : entries) {
    json j = json::object();
    j["id"] = e.id;
    if (!e.talker.empty()) j["talker"] = e.talker;
    if (e.duration) j["duration"] = *e.duration;
    for (const char* key : kPathKeys) {
      const std::string& v = path_field(e, key);
      if (!v.empty()) j[key] = v;
    }
    for (const auto& [k, v] : e.extra) j[k] = json::parse(v);
    out << j.dump() << '\n';
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write manifest " + path.string());
  f << out.str();
  if (!f) throw IoError("short write to " + path.string());
}

std::vector<std::string> Manifest::check() const {
  std::vector<std::string> v;
  std::set<std::string> ids;
  auto need = [&](const ManifestEntry& e, const char* key) {
    if (path_field(e, key).empty()) v.push_back("entry '" + e.id + "' lacks required field '" + key + "'");
  };
  for (const auto& e : entries) {
    if (!ids.insert(e.id).second) v.push_back("duplicate id '" + e.id + "'");
    switch (role) {
      case ManifestRole::kSpeechCorpus:
      case ManifestRole::kNoise:
        need(e, "audio");
        break;
      case ManifestRole::kRecordedPairs:
      case ManifestRole::kOwnVoicePairs:
      case ManifestRole::kSpatializedNoise:
        need(e, "outer");
        need(e, "inear");
        break;
      case ManifestRole::kHrir:
      case ManifestRole::kModels:
        need(e, "path");
        break;
      case ManifestRole::kMixedExamples:
        need(e, "outer");
        need(e, "inear");
        need(e, "target");
        break;
    }
    for (const char* key : kPathKeys) {
      const std::string& p = path_field(e, key);
      if (!p.empty() && !std::filesystem::exists(resolve(p))) {
        v.push_back("entry '" + e.id + "': " + key + " file not found: " + resolve(p).string());
      }
    }
  }
  return v;
}

std::string json_string(const std::string& s) { return json(s).dump(); }
std::string json_number(double v) { return json(v).dump(); }
std::string json_integer(long long v) { return json(v).dump(); }

}  // namespace ovaug::pipeline
