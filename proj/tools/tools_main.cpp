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

// ovaug: batch front-end for own-voice transfer model estimation and
// training-data generation.
//
// Exit codes: 0 success, 1 validation failure, 2 I/O error.

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "ovaug/error.hpp"
#include "ovaug/pipeline/commands.hpp"
#include "ovaug/pipeline/config.hpp"

namespace fs = std::filesystem;
using namespace ovaug;
using namespace ovaug::pipeline;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitIo = 2;

struct GlobalOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> jobs;
  std::optional<std::size_t> subset_talkers;
  std::optional<std::size_t> subset_utterances;
  std::string out;
};

PipelineConfig resolve_config(const GlobalOptions& g) {
  PipelineConfig cfg = g.config.empty() ? PipelineConfig{} : PipelineConfig::load(g.config);
  if (g.seed) cfg.seed = *g.seed;
  if (g.jobs) cfg.jobs = *g.jobs;
  if (g.subset_talkers) cfg.subset_talkers = *g.subset_talkers;
  if (g.subset_utterances) cfg.subset_utterances = *g.subset_utterances;
  if (!g.out.empty()) cfg.output_dir = g.out;
  return cfg;
}

SpatialMode parse_mode(const std::string& s) {
  if (s == "point") return SpatialMode::kPoint;
  if (s == "diffuse") return SpatialMode::kDiffuse;
  throw InvalidArgument("mode must be point, diffuse or random");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Own-voice transfer model estimation and training-data augmentation"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--config", g.config, "JSON pipeline config");
  app.add_option("--seed", g.seed, "Global seed (overrides config)");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--subset-talkers", g.subset_talkers, "Use a seeded random subset of this many talkers");
  app.add_option("--subset-utterances", g.subset_utterances, "Use a seeded random subset of utterances per talker");
  app.add_option("--out", g.out, "Output directory (overrides config)");

  // estimate
  auto* estimate = app.add_subcommand("estimate", "Estimate transfer models from recorded pairs");
  std::string pairs;
  std::string est_mode;
  std::string est_scope;
  std::string inventory;
  estimate->add_option("--pairs", pairs, "Recorded-pairs manifest")->required();
  estimate->add_option("--mode", est_mode, "speech-independent | speech-dependent");
  estimate->add_option("--scope", est_scope, "individual | talker-averaged | both");
  estimate->add_option("--inventory", inventory, "Phoneme inventory file");

  // augment
  auto* augment_cmd = app.add_subcommand("augment", "Simulate in-ear own voice for a speech corpus");
  std::string speech;
  std::string model;
  std::string technique;
  std::optional<double> alpha;
  augment_cmd->add_option("--speech", speech, "Speech-corpus manifest")->required();
  augment_cmd->add_option("--model", model, "Model file")->required();
  augment_cmd->add_option("--technique", technique, "speech-independent | speech-dependent | random-phoneme");
  augment_cmd->add_option("--alpha", alpha, "RTF smoothing constant in [0, 1)");

  // spatialize
  auto* spatialize_cmd = app.add_subcommand("spatialize", "Render single-channel noise to both microphones");
  std::string noise;
  std::string hrir;
  std::string spatial_mode;
  spatialize_cmd->add_option("--noise", noise, "Noise manifest")->required();
  spatialize_cmd->add_option("--hrir", hrir, "HRIR manifest")->required();
  spatialize_cmd->add_option("--mode", spatial_mode, "point | diffuse | random");

  // mix
  auto* mix_cmd = app.add_subcommand("mix", "Create normalized noisy training examples");
  std::string own;
  std::optional<double> snr;
  std::optional<std::size_t> direction;
  mix_cmd->add_option("--own", own, "Own-voice pairs manifest")->required();
  mix_cmd->add_option("--noise", noise, "Noise manifest")->required();
  mix_cmd->add_option("--hrir", hrir, "HRIR manifest")->required();
  mix_cmd->add_option("--snr", snr, "Force this SNR in dB");
  mix_cmd->add_option("--mode", spatial_mode, "point | diffuse | random");
  mix_cmd->add_option("--direction", direction, "Force this HRIR direction index (point mode)");

  // reconstruct
  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Apply complex masks to a noisy pair");
  std::string outer;
  std::string inear;
  std::string masks;
  std::string output;
  reconstruct_cmd->add_option("--outer", outer, "Noisy outer (or stereo outer/in-ear) WAV")->required();
  reconstruct_cmd->add_option("--inear", inear, "Noisy in-ear WAV");
  reconstruct_cmd->add_option("--masks", masks, "Mask file")->required();
  reconstruct_cmd->add_option("--output", output, "Output WAV")->required();

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Check model, mask, manifest, config or WAV files");
  std::vector<std::string> files;
  validate_cmd->add_option("files", files, "Files to check")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate_cmd) {
      bool all_ok = true;
      for (const auto& f : files) {
        const ValidationReport rep = cmd_validate(f);
        std::cout << rep.to_json() << '\n';
        all_ok = all_ok && rep.ok();
      }
      return all_ok ? kExitOk : kExitInvalid;
    }

    PipelineConfig cfg = resolve_config(g);
    if (!spatial_mode.empty() && spatial_mode != "random") cfg.spatial.force_mode = parse_mode(spatial_mode);
    if (spatial_mode == "random") cfg.spatial.force_mode.reset();

    if (*estimate) {
      if (est_mode == "speech-independent") cfg.model_mode = ModelMode::kSpeechIndependent;
      else if (est_mode == "speech-dependent") cfg.model_mode = ModelMode::kSpeechDependent;
      else if (!est_mode.empty()) throw InvalidArgument("--mode must be speech-independent or speech-dependent");
      if (est_scope == "individual") cfg.estimate_scope = EstimateScope::kIndividual;
      else if (est_scope == "talker-averaged") cfg.estimate_scope = EstimateScope::kTalkerAveraged;
      else if (est_scope == "both") cfg.estimate_scope = EstimateScope::kBoth;
      else if (!est_scope.empty()) throw InvalidArgument("--scope must be individual, talker-averaged or both");
      if (!inventory.empty()) cfg.inventory = inventory;
      const EstimateSummary s = cmd_estimate(cfg, pairs);
      for (const auto& m : s.models) std::cout << m.string() << '\n';
    } else if (*augment_cmd) {
      if (!technique.empty()) cfg.technique = parse_technique(technique);
      if (alpha) cfg.alpha = *alpha;
      std::cout << cmd_augment(cfg, speech, model).string() << '\n';
    } else if (*spatialize_cmd) {
      std::cout << cmd_spatialize(cfg, noise, hrir).string() << '\n';
    } else if (*mix_cmd) {
      if (snr) cfg.force_snr_db = *snr;
      if (direction) cfg.spatial.force_direction = *direction;
      std::cout << cmd_mix(cfg, own, noise, hrir).string() << '\n';
    } else if (*reconstruct_cmd) {
      cmd_reconstruct(outer, inear, masks, output);
      std::cout << output << '\n';
    }
  } catch (const IoError& e) {
    std::cerr << "ovaug: I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "ovaug: I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "ovaug: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}
