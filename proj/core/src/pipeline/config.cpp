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

#include "ovaug/pipeline/config.hpp"

#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>

#include "ovaug/error.hpp"

namespace ovaug::pipeline {

using nlohmann::json;

namespace {

FrameSpec read_spec(const json& j, const FrameSpec& fallback) {
  return FrameSpec::make(j.value("frame_len", fallback.frame_len), j.value("sample_rate", fallback.sample_rate));
}

template <typename T>
std::optional<T> read_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

PipelineConfig PipelineConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config " + path.string());
  const auto base = std::filesystem::absolute(path).parent_path();
  auto resolve = [&](const std::string& p) {
    const std::filesystem::path fp(p);
    return fp.is_absolute() ? fp : (base / fp).lexically_normal();
  };

  PipelineConfig c;
  try {
    const json j = json::parse(in);
    c.seed = j.value("seed", c.seed);
    c.jobs = j.value("jobs", c.jobs);
    if (j.contains("output_dir")) c.output_dir = resolve(j.at("output_dir").get<std::string>());

    if (j.contains("frames")) {
      const json& f = j.at("frames");
      if (f.contains("pipeline")) c.pipeline_spec = read_spec(f.at("pipeline"), c.pipeline_spec);
      if (f.contains("model")) c.model_spec = read_spec(f.at("model"), c.model_spec);
    }
    if (j.contains("estimate")) {
      const json& e = j.at("estimate");
      const std::string mode = e.value("mode", std::string(to_string(c.model_mode)));
      if (mode == "speech-independent") {
        c.model_mode = ModelMode::kSpeechIndependent;
      } else if (mode == "speech-dependent") {
        c.model_mode = ModelMode::kSpeechDependent;
      } else {
        throw InvalidArgument("estimate.mode must be speech-independent or speech-dependent");
      }
      const std::string scope = e.value("scope", std::string("both"));
      if (scope == "individual") {
        c.estimate_scope = EstimateScope::kIndividual;
      } else if (scope == "talker-averaged") {
        c.estimate_scope = EstimateScope::kTalkerAveraged;
      } else if (scope == "both") {
        c.estimate_scope = EstimateScope::kBoth;
      } else {
        throw InvalidArgument("estimate.scope must be individual, talker-averaged or both");
      }
      if (e.contains("inventory")) c.inventory = resolve(e.at("inventory").get<std::string>());
      c.min_frames = e.value("min_frames", c.min_frames);
    }
    if (j.contains("subset")) {
      c.subset_talkers = read_optional<std::size_t>(j.at("subset"), "talkers");
      c.subset_utterances = read_optional<std::size_t>(j.at("subset"), "utterances");
    }
    if (j.contains("augment")) {
      const json& a = j.at("augment");
      if (a.contains("technique")) c.technique = parse_technique(a.at("technique").get<std::string>());
      c.alpha = a.value("alpha", c.alpha);
    }
    if (j.contains("mix")) {
      const json& m = j.at("mix");
      if (m.contains("snr_range_db")) {
        const auto r = m.at("snr_range_db").get<std::vector<double>>();
        if (r.size() != 2) throw InvalidArgument("mix.snr_range_db must have two values");
        c.snr_low_db = r[0];
        c.snr_high_db = r[1];
      }
      c.force_snr_db = read_optional<double>(m, "snr_db");
      c.spatial.diffuse_probability = m.value("diffuse_probability", c.spatial.diffuse_probability);
      if (auto mode = read_optional<std::string>(m, "mode")) {
        if (*mode == "point") {
          c.spatial.force_mode = SpatialMode::kPoint;
        } else if (*mode == "diffuse") {
          c.spatial.force_mode = SpatialMode::kDiffuse;
        } else if (*mode != "random") {
          throw InvalidArgument("mix.mode must be point, diffuse or random");
        }
      }
      c.spatial.force_direction = read_optional<std::size_t>(m, "direction");
      if (m.contains("white_noise_low_db")) {
        const json& w = m.at("white_noise_low_db");
        if (w.is_string() && w.get<std::string>() == "off") {
          c.spatial.floor.low_db.reset();
        } else {
          c.spatial.floor.low_db = w.get<double>();
        }
      }
      c.segment_seconds = m.value("segment_seconds", c.segment_seconds);
    }
  } catch (const json::exception& e) {
    throw InvalidArgument("config " + path.string() + ": " + e.what());
  }
  return c;
}

std::vector<std::string> PipelineConfig::check() const {
  std::vector<std::string> v;
  auto guard = [&v](const char* what, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      v.push_back(std::string(what) + ": " + e.what());
    }
  };
  guard("frames.pipeline", [&] { pipeline_spec.validate(); });
  guard("frames.model", [&] { model_spec.validate(); });
  if (!(model_spec == model_frame_spec())) v.emplace_back("frames.model: models live on the 128-sample / 5 kHz grid");
  if (jobs == 0) v.emplace_back("jobs must be >= 1");
  if (min_frames == 0) v.emplace_back("estimate.min_frames must be >= 1");
  if (subset_talkers && *subset_talkers == 0) v.emplace_back("subset.talkers must be >= 1");
  if (subset_utterances && *subset_utterances == 0) v.emplace_back("subset.utterances must be >= 1");
  if (!(alpha >= 0.0 && alpha < 1.0)) v.emplace_back("augment.alpha must lie in [0, 1)");
  if (!(snr_low_db <= snr_high_db) || !std::isfinite(snr_low_db) || !std::isfinite(snr_high_db)) {
    v.emplace_back("mix.snr_range_db must be finite with low <= high");
  }
  if (force_snr_db && !std::isfinite(*force_snr_db)) v.emplace_back("mix.snr_db must be finite");
  if (!(spatial.diffuse_probability >= 0.0 && spatial.diffuse_probability <= 1.0)) {
    v.emplace_back("mix.diffuse_probability must lie in [0, 1]");
  }
  guard("mix.white_noise_low_db", [&] { spatial.floor.validate(); });
  if (!(segment_seconds > 0.0)) v.emplace_back("mix.segment_seconds must be positive");
  return v;
}

void PipelineConfig::validate() const {
  const auto v = check();
  if (!v.empty()) throw InvalidArgument("invalid config: " + v.front());
}

}  // namespace ovaug::pipeline
