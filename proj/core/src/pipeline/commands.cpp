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

#include "ovaug/pipeline/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>

#include "ovaug/augmentor.hpp"
#include "ovaug/container.hpp"
#include "ovaug/error.hpp"
#include "ovaug/mixer.hpp"
#include "ovaug/pipeline/hrir_io.hpp"
#include "ovaug/pipeline/parallel.hpp"
#include "ovaug/pipeline/wav.hpp"
#include "ovaug/random.hpp"
#include "ovaug/reconstruct.hpp"
#include "ovaug/resampler.hpp"
#include "ovaug/rtf_model.hpp"

namespace ovaug::pipeline {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string file_stem_for(const std::string& id) {
  std::string s = id;
  for (char& c : s) {
    if (c == '/' || c == '\\' || c == ':' || c == '\0') c = '_';
  }
  return s;
}

void require_role(const Manifest& m, std::initializer_list<ManifestRole> roles, const fs::path& path) {
  for (auto r : roles) {
    if (m.role == r) return;
  }
  throw InvalidArgument(path.string() + ": manifest role '" + to_string(m.role) + "' is not accepted here");
}

std::vector<const ManifestEntry*> sorted_entries(const Manifest& m) {
  std::vector<const ManifestEntry*> out;
  out.reserve(m.entries.size());
  for (const auto& e : m.entries) out.push_back(&e);
  std::sort(out.begin(), out.end(), [](const auto* a, const auto* b) { return a->id < b->id; });
  return out;
}

std::size_t rate_converted_length(std::size_t n, int from, int to) {
  return from == to ? n : Resampler(from, to).output_length(n);
}

Waveform fit_length(Waveform w, std::size_t len) {
  w.samples.resize(len, 0.0);
  return w;
}

struct HrirLibrary {
  std::vector<HrirSet> sets;  // sorted by id

  const HrirSet& for_talker(const std::string& talker, std::uint64_t seed) const {
    for (const auto& s : sets) {
      if (s.id == talker) return s;
    }
    if (sets.size() == 1) return sets.front();
    Rng rng(seed);
    return sets[static_cast<std::size_t>(uniform_index(rng, sets.size()))];
  }
};

HrirLibrary load_hrir_library(const fs::path& manifest_path) {
  const Manifest m = Manifest::load(manifest_path);
  require_role(m, {ManifestRole::kHrir}, manifest_path);
  HrirLibrary lib;
  for (const auto* e : sorted_entries(m)) lib.sets.push_back(load_hrir_set(m.resolve(e->path), e->id));
  if (lib.sets.empty()) throw InvalidArgument(manifest_path.string() + ": no HRIR sets");
  return lib;
}

std::string cola_violation(const FrameSpec& spec) {
  const auto w = sqrt_hann(spec.frame_len);
  double worst = 0.0;
  for (std::size_t n = 0; n < spec.hop; ++n) worst = std::max(worst, std::abs(w[n] * w[n] + w[n + spec.hop] * w[n + spec.hop] - 1.0));
  return worst > 1e-12 ? "analysis/synthesis window is not power-complementary at 50 % overlap" : "";
}

}  // namespace

std::vector<std::string> sample_subset(std::vector<std::string> items, std::size_t count, std::uint64_t seed) {
  std::sort(items.begin(), items.end());
  if (count >= items.size()) return items;
  Rng rng(seed);
  // Partial Fisher-Yates: the first `count` positions hold the sample.
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(uniform_index(rng, items.size() - i));
    std::swap(items[i], items[j]);
  }
  items.resize(count);
  std::sort(items.begin(), items.end());
  return items;
}

EstimateSummary cmd_estimate(const PipelineConfig& cfg, const fs::path& pairs_manifest) {
  cfg.validate();
  const Manifest m = Manifest::load(pairs_manifest);
  require_role(m, {ManifestRole::kRecordedPairs}, pairs_manifest);
  const bool dependent = cfg.model_mode == ModelMode::kSpeechDependent;
  std::optional<PhonemeInventory> inventory;
  if (dependent) {
    if (cfg.inventory.empty()) throw InvalidArgument("speech-dependent estimation needs estimate.inventory");
    inventory = PhonemeInventory::load(cfg.inventory);
  }

  std::map<std::string, std::vector<std::string>> by_talker;
  std::map<std::string, const ManifestEntry*> by_id;
  for (const auto& e : m.entries) {
    if (e.talker.empty()) throw InvalidArgument("entry '" + e.id + "' has no talker id");
    if (e.outer.empty() || e.inear.empty()) throw InvalidArgument("entry '" + e.id + "' needs outer and inear audio");
    if (dependent && e.alignment.empty()) throw InvalidArgument("entry '" + e.id + "' has no alignment");
    by_talker[e.talker].push_back(e.id);
    by_id[e.id] = &e;
  }
  std::vector<std::string> talkers;
  for (const auto& [t, ids] : by_talker) talkers.push_back(t);
  if (cfg.subset_talkers) {
    talkers = sample_subset(talkers, *cfg.subset_talkers, derive_seed(cfg.seed, "", "subset-talkers"));
  }

  std::vector<std::string> selected;  // utterance ids in sorted order
  for (const auto& t : talkers) {
    std::vector<std::string> ids = by_talker[t];
    if (cfg.subset_utterances) ids = sample_subset(ids, *cfg.subset_utterances, derive_seed(cfg.seed, t, "subset-utterances"));
    selected.insert(selected.end(), ids.begin(), ids.end());
  }
  std::sort(selected.begin(), selected.end());
  if (selected.empty()) throw InvalidArgument("estimate: the selected subset is empty");

  const FrameSpec spec = cfg.model_spec;
  std::vector<RtfAccumulator> per_utt(selected.size());
  parallel_for(selected.size(), cfg.jobs, [&](std::size_t i) {
    const ManifestEntry& e = *by_id.at(selected[i]);
    const Waveform outer = resample(read_wav_mono(m.resolve(e.outer)), spec.sample_rate);
    const Waveform inear = resample(read_wav_mono(m.resolve(e.inear)), spec.sample_rate);
    if (outer.size() != inear.size()) throw ShapeMismatch("entry '" + e.id + "': outer and in-ear lengths differ");
    const Spectrogram yo = analyze(outer, spec);
    const Spectrogram yi = analyze(inear, spec);
    RtfAccumulator acc = dependent ? RtfAccumulator::speech_dependent(spec, *inventory)
                                   : RtfAccumulator::speech_independent(spec);
    if (dependent) {
      const PhonemeSequence p = load_alignment(m.resolve(e.alignment), *inventory, spec, outer.size());
      acc.accumulate(yo, yi, &p);
    } else {
      acc.accumulate(yo, yi);
    }
    acc.note_utterance(e.talker);
    per_utt[i] = std::move(acc);
  });

  std::map<std::string, std::vector<RtfAccumulator>> grouped;
  for (std::size_t i = 0; i < selected.size(); ++i) grouped[by_id.at(selected[i])->talker].push_back(per_utt[i]);
  std::vector<RtfAccumulator> per_talker;
  for (auto& [t, accs] : grouped) per_talker.push_back(merge(accs));

  fs::create_directories(cfg.output_dir);
  EstimateSummary summary;
  summary.utterances = selected.size();
  Manifest out;
  out.role = ManifestRole::kModels;
  out.base_dir = cfg.output_dir;
  FinalizeOptions opts;
  opts.min_frames = cfg.min_frames;

  auto write = [&](const RtfModel& model, const std::string& id, const std::string& talker) {
    const fs::path file = cfg.output_dir / (file_stem_for(id) + ".ovrtf");
    save_model(model, file);
    summary.models.push_back(file);
    ManifestEntry me;
    me.id = id;
    me.talker = talker;
    me.path = file.filename().string();
    me.extra["mode"] = json_string(to_string(model.mode));
    me.extra["scope"] = json_string(to_string(model.scope));
    me.extra["utterances"] = json_integer(static_cast<long long>(model.utterance_count));
    me.extra["talkers"] = json(model.talkers).dump();
    out.entries.push_back(std::move(me));
  };

  if (cfg.estimate_scope != EstimateScope::kTalkerAveraged) {
    std::size_t k = 0;
    for (const auto& [t, accs] : grouped) {
      opts.scope = ModelScope::kIndividual;
      write(finalize(per_talker[k++], opts), t, t);
    }
  }
  if (cfg.estimate_scope != EstimateScope::kIndividual) {
    opts.scope = ModelScope::kTalkerAveraged;
    write(finalize(merge(per_talker), opts), "averaged", "");
  }
  for (const auto& [t, accs] : grouped) summary.talkers.push_back(t);
  out.save(cfg.output_dir / "models.jsonl");
  return summary;
}

fs::path cmd_augment(const PipelineConfig& cfg, const fs::path& speech_manifest, const fs::path& model_path) {
  cfg.validate();
  const Manifest m = Manifest::load(speech_manifest);
  require_role(m, {ManifestRole::kSpeechCorpus}, speech_manifest);
  const RtfModel model = load_model(model_path);
  if (auto v = model.check(); !v.empty()) throw InvalidArgument(model_path.string() + ": " + v.front());
  AugmentConfig base{cfg.technique, cfg.alpha, 0};
  base.validate(model);
  std::optional<PhonemeInventory> inventory;
  if (model.mode == ModelMode::kSpeechDependent) inventory = PhonemeInventory(model.inventory);

  const auto entries = sorted_entries(m);
  const fs::path out_dir = cfg.output_dir;
  fs::create_directories(out_dir / "inear");
  const std::string model_abs = fs::absolute(model_path).lexically_normal().string();

  std::vector<ManifestEntry> records(entries.size());
  parallel_for(entries.size(), cfg.jobs, [&](std::size_t i) {
    const ManifestEntry& e = *entries[i];
    if (e.audio.empty()) throw InvalidArgument("entry '" + e.id + "' has no audio");
    const Waveform speech = read_wav_mono(m.resolve(e.audio));
    AugmentConfig c = base;
    c.seed = derive_seed(cfg.seed, e.id, "augment");
    Waveform inear;
    if (c.technique == Technique::kSpeechDependent) {
      if (e.alignment.empty()) throw InvalidArgument("entry '" + e.id + "' has no alignment");
      const std::size_t low_len = rate_converted_length(speech.size(), speech.sample_rate, model.spec.sample_rate);
      const PhonemeSequence p = load_alignment(m.resolve(e.alignment), *inventory, model.spec, low_len);
      inear = augment(speech, model, c, &p);
    } else {
      inear = augment(speech, model, c);
    }
    const std::string rel = "inear/" + file_stem_for(e.id) + ".wav";
    write_wav(out_dir / rel, {inear});

    ManifestEntry r;
    r.id = e.id;
    r.talker = e.talker;
    r.outer = m.resolve(e.audio).string();
    r.inear = rel;
    r.duration = speech.duration_seconds();
    r.extra["model"] = json_string(model_abs);
    r.extra["seed"] = json(c.seed).dump();
    r.extra["technique"] = json_string(to_string(c.technique));
    r.extra["alpha"] = json_number(c.alpha);
    records[i] = std::move(r);
  });

  Manifest out;
  out.role = ManifestRole::kOwnVoicePairs;
  out.entries = std::move(records);
  const fs::path path = out_dir / "augmented.jsonl";
  out.save(path);
  return path;
}

fs::path cmd_spatialize(const PipelineConfig& cfg, const fs::path& noise_manifest, const fs::path& hrir_manifest) {
  cfg.validate();
  const Manifest m = Manifest::load(noise_manifest);
  require_role(m, {ManifestRole::kNoise}, noise_manifest);
  const HrirLibrary lib = load_hrir_library(hrir_manifest);
  const auto entries = sorted_entries(m);
  const fs::path out_dir = cfg.output_dir;
  fs::create_directories(out_dir / "noise");

  std::vector<ManifestEntry> records(entries.size());
  parallel_for(entries.size(), cfg.jobs, [&](std::size_t i) {
    const ManifestEntry& e = *entries[i];
    const Waveform noise = read_wav_mono(m.resolve(e.audio));
    const HrirSet& set = lib.for_talker(e.talker, derive_seed(cfg.seed, e.id, "hrir"));
    const std::uint64_t seed = derive_seed(cfg.seed, e.id, "spatialize");
    const SpatializeResult r = spatialize(noise, set, cfg.spatial, seed);
    const std::string stem = "noise/" + file_stem_for(e.id);
    write_wav(out_dir / (stem + "_outer.wav"), {r.noise.outer});
    write_wav(out_dir / (stem + "_inear.wav"), {r.noise.inear});

    ManifestEntry rec;
    rec.id = e.id;
    rec.talker = e.talker;
    rec.outer = stem + "_outer.wav";
    rec.inear = stem + "_inear.wav";
    rec.extra["source"] = json_string(m.resolve(e.audio).string());
    rec.extra["hrir"] = json_string(set.id);
    rec.extra["mode"] = json_string(to_string(r.mode));
    rec.extra["direction"] = r.direction ? json_integer(static_cast<long long>(*r.direction)) : "null";
    rec.extra["floor_db"] = r.floor_db ? json_number(*r.floor_db) : "null";
    rec.extra["seed"] = json(seed).dump();
    records[i] = std::move(rec);
  });

  Manifest out;
  out.role = ManifestRole::kSpatializedNoise;
  out.entries = std::move(records);
  const fs::path path = out_dir / "spatialized.jsonl";
  out.save(path);
  return path;
}

fs::path cmd_mix(const PipelineConfig& cfg, const fs::path& own_manifest, const fs::path& noise_manifest,
                 const fs::path& hrir_manifest) {
  cfg.validate();
  const Manifest own = Manifest::load(own_manifest);
  require_role(own, {ManifestRole::kOwnVoicePairs, ManifestRole::kRecordedPairs}, own_manifest);
  const Manifest noise = Manifest::load(noise_manifest);
  require_role(noise, {ManifestRole::kNoise}, noise_manifest);
  const HrirLibrary lib = load_hrir_library(hrir_manifest);
  const int rate = lib.sets.front().sample_rate;
  for (const auto& s : lib.sets) {
    if (s.sample_rate != rate) throw InvalidArgument("HRIR sets differ in sample rate");
  }
  const auto seg_len = static_cast<std::size_t>(std::llround(cfg.segment_seconds * rate));

  struct NoiseFile {
    const ManifestEntry* entry;
    std::size_t frames;
  };
  std::vector<NoiseFile> eligible;
  for (const auto* e : sorted_entries(noise)) {
    const WavInfo info = read_wav_info(noise.resolve(e->audio));
    if (info.sample_rate != rate) {
      throw InvalidArgument("noise '" + e->id + "' is at " + std::to_string(info.sample_rate) +
                            " Hz, HRIRs at " + std::to_string(rate) + " Hz");
    }
    if (info.frames >= seg_len) eligible.push_back({e, static_cast<std::size_t>(info.frames)});
  }
  if (eligible.empty()) throw InvalidArgument("mix: no noise file is at least one segment long");

  const auto entries = sorted_entries(own);
  const fs::path out_dir = cfg.output_dir;
  fs::create_directories(out_dir / "examples");

  std::vector<ManifestEntry> records(entries.size());
  parallel_for(entries.size(), cfg.jobs, [&](std::size_t i) {
    const ManifestEntry& e = *entries[i];
    const std::uint64_t seed = derive_seed(cfg.seed, e.id, "mix");
    Rng rng(seed);
    const NoiseFile& nf = eligible[static_cast<std::size_t>(uniform_index(rng, eligible.size()))];
    const std::size_t offset = static_cast<std::size_t>(uniform_index(rng, nf.frames - seg_len + 1));
    const std::uint64_t spatial_seed = rng();
    const double snr = cfg.force_snr_db ? *cfg.force_snr_db : draw_snr(cfg.snr_low_db, cfg.snr_high_db, rng);

    OwnVoicePair ov{read_wav_mono(own.resolve(e.outer)), read_wav_mono(own.resolve(e.inear))};
    if (ov.outer.sample_rate != rate || ov.inear.sample_rate != rate) {
      throw InvalidArgument("own voice '" + e.id + "' is not at the HRIR rate");
    }
    // First segment of the utterance, zero-padded when shorter.
    ov.outer = fit_length(std::move(ov.outer), seg_len);
    ov.inear = fit_length(std::move(ov.inear), seg_len);

    const Waveform full = read_wav_mono(noise.resolve(nf.entry->audio));
    Waveform segment(std::vector<double>(full.samples.begin() + static_cast<std::ptrdiff_t>(offset),
                                         full.samples.begin() + static_cast<std::ptrdiff_t>(offset + seg_len)),
                     rate);
    const HrirSet& set = lib.for_talker(e.talker, derive_seed(cfg.seed, e.id, "hrir"));
    const SpatializeResult sp = spatialize(segment, set, cfg.spatial, spatial_seed);

    MixResult mix;
    try {
      mix = normalize(mix_at_snr(ov, sp.noise, snr));
    } catch (const Error& err) {
      throw InvalidArgument("example '" + e.id + "': " + err.what());
    }

    const std::string stem = "examples/" + file_stem_for(e.id);
    write_wav(out_dir / (stem + "_outer.wav"), {mix.noisy_outer});
    write_wav(out_dir / (stem + "_inear.wav"), {mix.noisy_inear});
    write_wav(out_dir / (stem + "_target.wav"), {mix.target_outer});

    ManifestEntry rec;
    rec.id = e.id;
    rec.talker = e.talker;
    rec.outer = stem + "_outer.wav";
    rec.inear = stem + "_inear.wav";
    rec.target = stem + "_target.wav";
    rec.duration = cfg.segment_seconds;
    rec.extra["source_outer"] = json_string(own.resolve(e.outer).string());
    rec.extra["source_inear"] = json_string(own.resolve(e.inear).string());
    rec.extra["noise"] = json_string(nf.entry->id);
    rec.extra["noise_offset"] = json_integer(static_cast<long long>(offset));
    rec.extra["hrir"] = json_string(set.id);
    rec.extra["mode"] = json_string(to_string(sp.mode));
    rec.extra["direction"] = sp.direction ? json_integer(static_cast<long long>(*sp.direction)) : "null";
    rec.extra["floor_db"] = sp.floor_db ? json_number(*sp.floor_db) : "null";
    rec.extra["snr_db"] = json_number(mix.requested_snr_db);
    rec.extra["achieved_snr_db"] = json_number(mix.achieved_snr_db);
    rec.extra["noise_gain"] = json_number(mix.noise_gain);
    rec.extra["means"] = json(mix.means).dump();
    rec.extra["stds"] = json(mix.stds).dump();
    rec.extra["target_gain"] = json_number(mix.target_gain);
    rec.extra["seed"] = json(seed).dump();
    records[i] = std::move(rec);
  });

  Manifest out;
  out.role = ManifestRole::kMixedExamples;
  out.entries = std::move(records);
  const fs::path path = out_dir / "examples.jsonl";
  out.save(path);
  return path;
}

void cmd_reconstruct(const fs::path& noisy_outer, const fs::path& noisy_inear, const fs::path& masks_path,
                     const fs::path& output) {
  std::vector<Waveform> channels = read_wav(noisy_outer);
  if (!noisy_inear.empty()) {
    if (channels.size() != 1) throw InvalidArgument(noisy_outer.string() + ": expected a mono file");
    channels.push_back(read_wav_mono(noisy_inear));
  }
  if (channels.size() != 2) throw InvalidArgument("reconstruct needs an outer and an in-ear channel");
  if (channels[0].size() != channels[1].size()) throw ShapeMismatch("noisy channels differ in length");
  const MaskPair masks = load_masks(masks_path);
  const Spectrogram yo = analyze(channels[0], masks.spec);
  const Spectrogram yi = analyze(channels[1], masks.spec);
  write_wav(output, {apply_masks(yo, yi, masks.outer, masks.inear)});
}

std::string ValidationReport::to_json() const {
  return json{{"file", file}, {"kind", kind}, {"status", ok() ? "ok" : "invalid"}, {"violations", violations}}.dump();
}

ValidationReport cmd_validate(const fs::path& path) {
  ValidationReport rep;
  rep.file = path.string();
  const std::vector<char> bytes = read_file_bytes(path);
  auto starts_with = [&](std::string_view magic) {
    return bytes.size() >= magic.size() && std::equal(magic.begin(), magic.end(), bytes.begin());
  };
  auto add_cola = [&](const FrameSpec& spec) {
    if (auto v = cola_violation(spec); !v.empty()) rep.violations.push_back(v);
  };

  try {
    if (starts_with("OVRTF")) {
      rep.kind = "model";
      const RtfModel model = decode_model(bytes);
      rep.violations = model.check();
      add_cola(model.spec);
    } else if (starts_with("OVMSK")) {
      rep.kind = "masks";
      const MaskPair masks = decode_masks(bytes);
      if (!masks.outer.all_finite() || !masks.inear.all_finite()) rep.violations.emplace_back("mask contains non-finite values");
      add_cola(masks.spec);
    } else if (starts_with("RIFF")) {
      rep.kind = "wav";
      read_wav(path);
    } else if (path.extension() == ".jsonl") {
      rep.kind = "manifest";
      rep.violations = Manifest::load(path).check();
    } else if (path.extension() == ".json") {
      rep.kind = "config";
      const PipelineConfig cfg = PipelineConfig::load(path);
      rep.violations = cfg.check();
      if (rep.violations.empty()) {
        add_cola(cfg.pipeline_spec);
        add_cola(cfg.model_spec);
      }
      if (!cfg.inventory.empty() && !fs::exists(cfg.inventory)) {
        rep.violations.push_back("inventory file not found: " + cfg.inventory.string());
      }
    } else {
      rep.kind = "unknown";
      rep.violations.emplace_back("unrecognized file type");
    }
  } catch (const VersionMismatch& e) {
    rep.violations.push_back(std::string("version mismatch: ") + e.what());
  } catch (const CorruptFile& e) {
    rep.violations.push_back(std::string("corrupt file: ") + e.what());
  } catch (const IoError&) {
    throw;
  } catch (const Error& e) {
    rep.violations.emplace_back(e.what());
  }
  return rep;
}

}  // namespace ovaug::pipeline
