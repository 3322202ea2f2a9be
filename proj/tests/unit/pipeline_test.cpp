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

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <set>

#include "../support/corpus.hpp"
#include "ovaug/container.hpp"
#include "ovaug/error.hpp"
#include "ovaug/mixer.hpp"
#include "ovaug/pipeline/commands.hpp"
#include "ovaug/pipeline/config.hpp"
#include "ovaug/pipeline/parallel.hpp"
#include "ovaug/reconstruct.hpp"
#include "ovaug/resampler.hpp"
#include "ovaug/rtf_model.hpp"

namespace ovaug::pipeline {
namespace {

using namespace ovaug::testing;
using nlohmann::json;

std::vector<json> records(const fs::path& manifest) {
  std::ifstream in(manifest);
  std::vector<json> out;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) out.push_back(json::parse(line));
  return out;
}

// --- WAV ---------------------------------------------------------------

TEST(Wav, Float32RoundTripIsExactForFloatValues) {
  const fs::path dir = fresh_dir("wav_f32");
  std::vector<double> a{0.0, 0.25, -0.5, 1.5, -3.0};
  std::vector<double> b{1.0, 2.0, 3.0, 4.0, 5.0};
  write_wav(dir / "x.wav", {Waveform(a, 16000), Waveform(b, 16000)});
  const WavInfo info = read_wav_info(dir / "x.wav");
  EXPECT_EQ(info.channels, 2);
  EXPECT_EQ(info.frames, 5u);
  EXPECT_EQ(info.sample_rate, 16000);
  EXPECT_EQ(info.format, SampleFormat::kFloat32);
  const auto ch = read_wav(dir / "x.wav");
  EXPECT_EQ(ch[0].samples, a);
  EXPECT_EQ(ch[1].samples, b);
  EXPECT_THROW(read_wav_mono(dir / "x.wav"), InvalidArgument);
}

TEST(Wav, Pcm16QuantizesAndClips) {
  const fs::path dir = fresh_dir("wav_pcm");
  write_wav(dir / "x.wav", {Waveform({0.5, -1.0, 2.0, 1e-6}, 8000)}, SampleFormat::kPcm16);
  const Waveform w = read_wav_mono(dir / "x.wav");
  EXPECT_EQ(w.sample_rate, 8000);
  EXPECT_EQ(w.samples, (std::vector<double>{0.5, -1.0, 32767.0 / 32768.0, 0.0}));
}

TEST(Wav, HeaderLayout) {
  const fs::path dir = fresh_dir("wav_hdr");
  write_wav(dir / "x.wav", {Waveform({0.5}, 16000)}, SampleFormat::kPcm16);
  const auto b = file_bytes(dir / "x.wav");
  ASSERT_EQ(b.size(), 46u);
  EXPECT_EQ(std::string(b.begin(), b.begin() + 4), "RIFF");
  EXPECT_EQ(std::string(b.begin() + 8, b.begin() + 16), "WAVEfmt ");
  EXPECT_EQ(static_cast<unsigned char>(b[24]) | static_cast<unsigned char>(b[25]) << 8, 16000 & 0xffff);
  EXPECT_EQ(std::string(b.begin() + 36, b.begin() + 40), "data");
}

TEST(Wav, Errors) {
  const fs::path dir = fresh_dir("wav_err");
  EXPECT_THROW(read_wav(dir / "missing.wav"), IoError);
  std::ofstream(dir / "junk.wav", std::ios::binary) << "RIFF1234WAVEjunk";
  EXPECT_THROW(read_wav(dir / "junk.wav"), CorruptFile);
  EXPECT_THROW(write_wav(dir / "x.wav", {Waveform({1.0}, 16000), Waveform({1.0, 2.0}, 16000)}), ShapeMismatch);
}

// --- Manifest ----------------------------------------------------------

TEST(Manifest, RoundTripWithExtraFields) {
  const fs::path dir = fresh_dir("manifest_rt");
  Manifest m{ManifestRole::kSpeechCorpus, {}, dir};
  ManifestEntry e;
  e.id = "b";
  e.talker = "t1";
  e.audio = "b.wav";
  e.duration = 1.25;
  e.extra["note"] = json_string("x");
  m.entries.push_back(e);
  e.id = "a";
  e.extra.clear();
  m.entries.push_back(e);
  m.save(dir / "m.jsonl");
  const Manifest back = Manifest::load(dir / "m.jsonl");
  ASSERT_EQ(back.entries.size(), 2u);
  EXPECT_EQ(back.role, ManifestRole::kSpeechCorpus);
  EXPECT_EQ(back.entries[0].id, "b");
  EXPECT_EQ(back.entries[0].extra.at("note"), "\"x\"");
  EXPECT_EQ(*back.entries[1].duration, 1.25);
  back.save(dir / "m2.jsonl");
  EXPECT_EQ(file_bytes(dir / "m.jsonl"), file_bytes(dir / "m2.jsonl"));
  // Keys come out sorted.
  EXPECT_EQ(records(dir / "m.jsonl")[0].dump(),
            R"({"audio":"b.wav","duration":1.25,"id":"b","note":"x","talker":"t1"})");
}

TEST(Manifest, Rejections) {
  const fs::path dir = fresh_dir("manifest_bad");
  std::ofstream(dir / "nohdr.jsonl") << "{\"id\":\"a\"}\n";
  EXPECT_THROW(Manifest::load(dir / "nohdr.jsonl"), InvalidArgument);
  std::ofstream(dir / "dup.jsonl") << "{\"role\":\"noise\",\"version\":1}\n{\"id\":\"a\"}\n{\"id\":\"a\"}\n";
  EXPECT_THROW(Manifest::load(dir / "dup.jsonl"), InvalidArgument);
  std::ofstream(dir / "ver.jsonl") << "{\"role\":\"noise\",\"version\":7}\n";
  EXPECT_THROW(Manifest::load(dir / "ver.jsonl"), InvalidArgument);
  std::ofstream(dir / "role.jsonl") << "{\"role\":\"bananas\",\"version\":1}\n";
  EXPECT_THROW(Manifest::load(dir / "role.jsonl"), InvalidArgument);
  std::ofstream(dir / "syntax.jsonl") << "{\"role\":\"noise\",\"version\":1}\n{id:}\n";
  EXPECT_THROW(Manifest::load(dir / "syntax.jsonl"), InvalidArgument);
  EXPECT_THROW(Manifest::load(dir / "none.jsonl"), IoError);
}

TEST(Manifest, CheckFindsMissingFilesAndFields) {
  const fs::path dir = fresh_dir("manifest_check");
  std::ofstream(dir / "present.wav") << "x";
  Manifest m{ManifestRole::kRecordedPairs, {}, dir};
  ManifestEntry e;
  e.id = "u1";
  e.outer = "present.wav";
  e.inear = "absent.wav";
  m.entries.push_back(e);
  e.id = "u2";
  e.inear.clear();
  m.entries.push_back(e);
  const auto v = m.check();
  ASSERT_EQ(v.size(), 2u);
  EXPECT_NE(v[0].find("absent.wav"), std::string::npos);
  EXPECT_NE(v[1].find("inear"), std::string::npos);
}

// --- Config ------------------------------------------------------------

TEST(Config, DefaultsAreValid) {
  const PipelineConfig c;
  EXPECT_TRUE(c.check().empty());
  EXPECT_EQ(c.spatial.diffuse_probability, 0.5);
  EXPECT_EQ(c.segment_seconds, 3.0);
  EXPECT_EQ(c.snr_low_db, -10.0);
  EXPECT_EQ(c.snr_high_db, 25.0);
  EXPECT_EQ(*c.spatial.floor.low_db, -120.0);
  EXPECT_EQ(c.pipeline_spec, pipeline_frame_spec());
  EXPECT_EQ(c.model_spec, model_frame_spec());
  EXPECT_EQ(kTalkerSubsetSizes, (std::vector<std::size_t>{1, 2, 3, 4, 6, 8, 10, 12}));
  EXPECT_EQ(kUtteranceSubsetSizes, (std::vector<std::size_t>{1, 3, 6, 12, 25, 75, 150, 306}));
}

TEST(Config, LoadsAllSections) {
  const fs::path dir = fresh_dir("config_load");
  std::ofstream(dir / "c.json") << R"({
    "seed": 99, "jobs": 3, "output_dir": "o",
    "estimate": {"mode": "speech-independent", "scope": "individual", "inventory": "inv.txt", "min_frames": 4},
    "subset": {"talkers": 2, "utterances": 6},
    "augment": {"technique": "random-phoneme", "alpha": 0.7},
    "mix": {"snr_range_db": [-5, 5], "snr_db": 1.5, "diffuse_probability": 0.25, "mode": "diffuse",
            "direction": 2, "white_noise_low_db": "off", "segment_seconds": 2.0}
  })";
  const PipelineConfig c = PipelineConfig::load(dir / "c.json");
  EXPECT_EQ(c.seed, 99u);
  EXPECT_EQ(c.jobs, 3u);
  EXPECT_EQ(c.output_dir, dir / "o");
  EXPECT_EQ(c.model_mode, ModelMode::kSpeechIndependent);
  EXPECT_EQ(c.estimate_scope, EstimateScope::kIndividual);
  EXPECT_EQ(c.inventory, dir / "inv.txt");
  EXPECT_EQ(c.min_frames, 4u);
  EXPECT_EQ(*c.subset_talkers, 2u);
  EXPECT_EQ(*c.subset_utterances, 6u);
  EXPECT_EQ(c.technique, Technique::kRandomPhoneme);
  EXPECT_EQ(c.alpha, 0.7);
  EXPECT_EQ(c.snr_low_db, -5.0);
  EXPECT_EQ(*c.force_snr_db, 1.5);
  EXPECT_EQ(c.spatial.diffuse_probability, 0.25);
  EXPECT_EQ(*c.spatial.force_mode, SpatialMode::kDiffuse);
  EXPECT_EQ(*c.spatial.force_direction, 2u);
  EXPECT_FALSE(c.spatial.floor.low_db.has_value());
  EXPECT_EQ(c.segment_seconds, 2.0);
  EXPECT_TRUE(c.check().empty());
}

TEST(Config, CheckReportsBadRanges) {
  PipelineConfig c;
  c.alpha = 1.0;
  c.snr_low_db = 30.0;
  c.jobs = 0;
  c.spatial.floor.low_db = -10.0;
  c.model_spec = pipeline_frame_spec();
  EXPECT_EQ(c.check().size(), 5u);
  EXPECT_THROW(c.validate(), InvalidArgument);
}

TEST(Config, ParseErrors) {
  const fs::path dir = fresh_dir("config_bad");
  std::ofstream(dir / "a.json") << R"({"estimate": {"mode": "sometimes"}})";
  EXPECT_THROW(PipelineConfig::load(dir / "a.json"), InvalidArgument);
  std::ofstream(dir / "b.json") << R"({"mix": {"snr_range_db": [1]}})";
  EXPECT_THROW(PipelineConfig::load(dir / "b.json"), InvalidArgument);
  std::ofstream(dir / "c.json") << "{";
  EXPECT_THROW(PipelineConfig::load(dir / "c.json"), InvalidArgument);
  EXPECT_THROW(PipelineConfig::load(dir / "none.json"), IoError);
}

// --- Parallel helper ---------------------------------------------------

TEST(ParallelFor, VisitsEveryIndexOnceAndRethrowsLowestFailure) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 8, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) EXPECT_EQ(h, 1);
  try {
    parallel_for(100, 4, [](std::size_t i) {
      if (i == 17 || i == 60) throw std::runtime_error(std::to_string(i));
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "17");
  }
}

// --- Commands ----------------------------------------------------------

TEST(SampleSubset, SeededWithoutReplacement) {
  std::vector<std::string> items;
  for (int i = 0; i < 20; ++i) items.push_back("x" + std::to_string(100 + i));
  const auto a = sample_subset(items, 6, 5);
  EXPECT_EQ(a.size(), 6u);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  EXPECT_EQ(std::set<std::string>(a.begin(), a.end()).size(), 6u);
  EXPECT_EQ(a, sample_subset(items, 6, 5));
  EXPECT_EQ(sample_subset(items, 50, 5).size(), 20u);
  std::vector<std::string> shuffled(items.rbegin(), items.rend());
  EXPECT_EQ(sample_subset(shuffled, 6, 5), a);
}

class Commands : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    CorpusOptions o;
    o.talkers = 3;
    o.utterances_per_talker = 4;
    corpus_ = new Corpus(build_corpus(fresh_dir("cmd_corpus"), o));
  }
  static void TearDownTestSuite() { delete corpus_; }

  PipelineConfig config(const std::string& out) const {
    PipelineConfig c;
    c.seed = 7;
    c.output_dir = fresh_dir(out);
    c.inventory = corpus_->inventory;
    return c;
  }

  static Corpus* corpus_;
};

Corpus* Commands::corpus_ = nullptr;

TEST_F(Commands, EstimateWritesIndividualAndAveragedModels) {
  const PipelineConfig c = config("est_both");
  const EstimateSummary s = cmd_estimate(c, corpus_->pairs);
  EXPECT_EQ(s.models.size(), 4u);
  EXPECT_EQ(s.talkers, corpus_->talkers);
  EXPECT_EQ(s.utterances, 12u);
  const RtfModel avg = load_model(c.output_dir / "averaged.ovrtf");
  EXPECT_EQ(avg.scope, ModelScope::kTalkerAveraged);
  EXPECT_EQ(avg.talkers, corpus_->talkers);
  EXPECT_EQ(avg.utterance_count, 12u);
  EXPECT_TRUE(avg.check().empty());
  const Manifest models = Manifest::load(c.output_dir / "models.jsonl");
  EXPECT_EQ(models.role, ManifestRole::kModels);
  EXPECT_TRUE(models.check().empty());
}

TEST_F(Commands, SingleTalkerAveragedEqualsIndividual) {
  PipelineConfig c = config("est_one");
  c.subset_talkers = 1;
  const EstimateSummary s = cmd_estimate(c, corpus_->pairs);
  ASSERT_EQ(s.talkers.size(), 1u);
  RtfModel ind = load_model(c.output_dir / (s.talkers[0] + ".ovrtf"));
  RtfModel avg = load_model(c.output_dir / "averaged.ovrtf");
  EXPECT_EQ(ind.scope, ModelScope::kIndividual);
  avg.scope = ind.scope;
  EXPECT_EQ(ind, avg);
}

TEST_F(Commands, UtteranceSubsetFrameCountsMatchAlignments) {
  PipelineConfig c = config("est_sub");
  c.subset_utterances = 3;
  const EstimateSummary s = cmd_estimate(c, corpus_->pairs);
  EXPECT_EQ(s.utterances, 9u);

  // Recount from the alignments of the sampled utterances.
  const Manifest pairs = Manifest::load(corpus_->pairs);
  const PhonemeInventory inv = PhonemeInventory::load(corpus_->inventory);
  for (const auto& talker : corpus_->talkers) {
    std::vector<std::string> ids;
    for (const auto& e : pairs.entries) if (e.talker == talker) ids.push_back(e.id);
    const auto chosen = sample_subset(ids, 3, derive_seed(7, talker, "subset-utterances"));
    std::vector<std::uint64_t> expected(inv.size(), 0);
    for (const auto& e : pairs.entries) {
      if (std::find(chosen.begin(), chosen.end(), e.id) == chosen.end()) continue;
      const Waveform outer = read_wav_mono(pairs.resolve(e.outer));
      const std::size_t low = Resampler(16000, 5000).output_length(outer.size());
      for (auto id : load_alignment(pairs.resolve(e.alignment), inv, model_frame_spec(), low).ids) {
        if (id != kUnknownPhoneme) ++expected[id - 1];
      }
    }
    const RtfModel m = load_model(c.output_dir / (talker + ".ovrtf"));
    EXPECT_EQ(m.frame_counts, expected) << talker;
    EXPECT_EQ(m.utterance_count, 3u);
  }
}

TEST_F(Commands, EstimateIsDeterministicAcrossJobCounts) {
  PipelineConfig a = config("est_j1");
  PipelineConfig b = config("est_j8");
  b.jobs = 8;
  cmd_estimate(a, corpus_->pairs);
  cmd_estimate(b, corpus_->pairs);
  EXPECT_EQ(tree_bytes(a.output_dir), tree_bytes(b.output_dir));
}

TEST_F(Commands, EstimateErrors) {
  PipelineConfig c = config("est_err");
  c.inventory.clear();
  EXPECT_THROW(cmd_estimate(c, corpus_->pairs), InvalidArgument);
  EXPECT_THROW(cmd_estimate(config("est_err2"), corpus_->speech), InvalidArgument);
}

TEST_F(Commands, AugmentProducesOneFilePerUtterance) {
  PipelineConfig est = config("aug_models");
  cmd_estimate(est, corpus_->pairs);
  PipelineConfig c = config("aug_out");
  const fs::path manifest = cmd_augment(c, corpus_->speech, est.output_dir / "averaged.ovrtf");
  const Manifest out = Manifest::load(manifest);
  EXPECT_EQ(out.role, ManifestRole::kOwnVoicePairs);
  ASSERT_EQ(out.entries.size(), 12u);
  EXPECT_TRUE(out.check().empty());
  for (const auto& e : out.entries) {
    const Waveform src = read_wav_mono(out.resolve(e.outer));
    const Waveform sim = read_wav_mono(out.resolve(e.inear));
    EXPECT_EQ(src.size(), sim.size());
    EXPECT_EQ(json::parse(e.extra.at("seed")).get<std::uint64_t>(), derive_seed(7, e.id, "augment"));
  }
}

TEST_F(Commands, AugmentSubsetReproducesPerUtterance) {
  PipelineConfig est = config("aug_sub_models");
  est.model_mode = ModelMode::kSpeechDependent;
  cmd_estimate(est, corpus_->pairs);
  const fs::path model = est.output_dir / "averaged.ovrtf";
  PipelineConfig full = config("aug_full");
  full.technique = Technique::kRandomPhoneme;
  cmd_augment(full, corpus_->speech, model);

  // A manifest holding only two of the utterances.
  const fs::path dir = fresh_dir("aug_subset_manifest");
  Manifest speech = Manifest::load(corpus_->speech);
  speech.entries.resize(2);
  for (auto& e : speech.entries) {
    e.audio = speech.resolve(e.audio).string();
    e.alignment = speech.resolve(e.alignment).string();
  }
  speech.save(dir / "subset.jsonl");
  PipelineConfig sub = config("aug_subset");
  sub.technique = Technique::kRandomPhoneme;
  cmd_augment(sub, dir / "subset.jsonl", model);
  for (const auto& e : speech.entries) {
    const std::string rel = "inear/" + e.id + ".wav";
    EXPECT_EQ(file_bytes(full.output_dir / rel), file_bytes(sub.output_dir / rel));
  }
}

TEST_F(Commands, AugmentEmptyManifest) {
  const fs::path dir = fresh_dir("aug_empty_in");
  Manifest{ManifestRole::kSpeechCorpus, {}, dir}.save(dir / "empty.jsonl");
  const fs::path model = dir / "unity.ovrtf";
  save_model(RtfModel::constant(ModelMode::kSpeechDependent, 6, Complex(1.0)), model);
  const fs::path out = cmd_augment(config("aug_empty"), dir / "empty.jsonl", model);
  EXPECT_TRUE(Manifest::load(out).entries.empty());
}

TEST_F(Commands, SpatializeWritesPairs) {
  PipelineConfig c = config("spat");
  const Manifest out = Manifest::load(cmd_spatialize(c, corpus_->noise, corpus_->hrir));
  EXPECT_EQ(out.role, ManifestRole::kSpatializedNoise);
  EXPECT_EQ(out.entries.size(), 3u);
  EXPECT_TRUE(out.check().empty());
}

TEST_F(Commands, MixRecordsForcingsAndStatistics) {
  PipelineConfig c = config("mix_forced");
  c.force_snr_db = 0.0;
  c.spatial.force_mode = SpatialMode::kPoint;
  c.spatial.force_direction = 0;
  const fs::path path = cmd_mix(c, corpus_->pairs, corpus_->noise, corpus_->hrir);
  const Manifest out = Manifest::load(path);
  EXPECT_EQ(out.role, ManifestRole::kMixedExamples);
  EXPECT_TRUE(out.check().empty());
  for (const auto& r : records(path)) {
    EXPECT_EQ(r.at("mode"), "point");
    EXPECT_EQ(r.at("direction"), 0);
    EXPECT_EQ(r.at("snr_db"), 0.0);
    EXPECT_NEAR(r.at("achieved_snr_db").get<double>(), 0.0, 0.01);
    EXPECT_EQ(r.at("duration"), 3.0);
    // Own voice is taken from the matching talker's HRIR set when one exists.
    if (r.at("talker") != "t02") EXPECT_EQ(r.at("hrir"), r.at("talker"));
  }
  for (const auto& e : out.entries) {
    const Waveform noisy = read_wav_mono(out.resolve(e.outer));
    EXPECT_EQ(noisy.size(), 48000u);
    double mu = 0.0, var = 0.0;
    for (double v : noisy.samples) mu += v;
    mu /= noisy.size();
    for (double v : noisy.samples) var += (v - mu) * (v - mu);
    var /= noisy.size();
    // Stored as float32, so statistics hold to single precision.
    EXPECT_NEAR(mu, 0.0, 1e-6);
    EXPECT_NEAR(var, 1.0, 1e-5);
  }
}

TEST_F(Commands, MixNeedsLongEnoughNoise) {
  PipelineConfig c = config("mix_short");
  c.segment_seconds = 10.0;
  EXPECT_THROW(cmd_mix(c, corpus_->pairs, corpus_->noise, corpus_->hrir), InvalidArgument);
}

TEST_F(Commands, ReconstructPassthrough) {
  const fs::path dir = fresh_dir("recon");
  const Waveform outer(white_noise(8000, 1, 0.1), 16000);
  const Waveform inear(white_noise(8000, 2, 0.1), 16000);
  write_wav(dir / "o.wav", {outer});
  write_wav(dir / "i.wav", {inear});
  write_wav(dir / "stereo.wav", {outer, inear});
  const Spectrogram s = analyze(outer, pipeline_frame_spec());
  save_masks({pipeline_frame_spec(), ComplexMatrix(s.bins(), s.frames(), 1.0), ComplexMatrix(s.bins(), s.frames())},
             dir / "m.ovmsk");
  cmd_reconstruct(dir / "o.wav", dir / "i.wav", dir / "m.ovmsk", dir / "est.wav");
  cmd_reconstruct(dir / "stereo.wav", "", dir / "m.ovmsk", dir / "est2.wav");
  const Waveform est = read_wav_mono(dir / "est.wav");
  ASSERT_EQ(est.size(), 8000u);
  const Waveform stored = read_wav_mono(dir / "o.wav");
  for (std::size_t i = 0; i < est.size(); ++i) EXPECT_NEAR(est.samples[i], stored.samples[i], 1e-6);
  EXPECT_EQ(file_bytes(dir / "est.wav"), file_bytes(dir / "est2.wav"));

  save_masks({pipeline_frame_spec(), ComplexMatrix(s.bins(), 3), ComplexMatrix(s.bins(), 3)}, dir / "short.ovmsk");
  EXPECT_THROW(cmd_reconstruct(dir / "o.wav", dir / "i.wav", dir / "short.ovmsk", dir / "x.wav"), ShapeMismatch);
}

TEST_F(Commands, ValidateReports) {
  const fs::path dir = fresh_dir("validate");
  save_model(RtfModel::constant(ModelMode::kSpeechDependent, 4, Complex(0.5)), dir / "m.ovrtf");
  EXPECT_TRUE(cmd_validate(dir / "m.ovrtf").ok());
  EXPECT_EQ(json::parse(cmd_validate(dir / "m.ovrtf").to_json()).at("status"), "ok");

  auto bytes = file_bytes(dir / "m.ovrtf");
  const std::size_t bitmap = 29 + 5 * 65 * 16;
  bytes[bitmap] = static_cast<char>(bytes[bitmap] ^ 0x02);
  write_file_bytes(dir / "flipped.ovrtf", bytes);
  const ValidationReport flipped = cmd_validate(dir / "flipped.ovrtf");
  EXPECT_FALSE(flipped.ok());
  EXPECT_NE(flipped.violations.front().find("availability"), std::string::npos);

  bytes[5] = 3;
  write_file_bytes(dir / "version.ovrtf", bytes);
  EXPECT_NE(cmd_validate(dir / "version.ovrtf").violations.front().find("version"), std::string::npos);

  EXPECT_TRUE(cmd_validate(corpus_->pairs).ok());
  Manifest broken = Manifest::load(corpus_->pairs);
  broken.entries[0].outer = "pairs/nothing.wav";
  broken.base_dir = corpus_->root;
  broken.save(corpus_->root / "broken.jsonl");
  const ValidationReport r = cmd_validate(corpus_->root / "broken.jsonl");
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.kind, "manifest");

  std::ofstream(dir / "c.json") << R"({"augment": {"alpha": 2}})";
  EXPECT_FALSE(cmd_validate(dir / "c.json").ok());
  EXPECT_THROW(cmd_validate(dir / "missing.ovrtf"), IoError);
}

}  // namespace
}  // namespace ovaug::pipeline
