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

#include <sys/wait.h>

#include <cstdlib>

#include "../support/corpus.hpp"
#include "ovaug/reconstruct.hpp"
#include "ovaug/rtf_model.hpp"

namespace ovaug {
namespace {

using namespace ovaug::testing;

int run(const std::string& args) {
  const std::string cmd = std::string(OVAUG_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    CorpusOptions o;
    o.talkers = 2;
    o.utterances_per_talker = 2;
    corpus_ = new Corpus(build_corpus(fresh_dir("cli_corpus"), o));
  }
  static void TearDownTestSuite() { delete corpus_; }
  static Corpus* corpus_;
};

Corpus* Cli::corpus_ = nullptr;

TEST_F(Cli, FullWorkflow) {
  const fs::path out = fresh_dir("cli_run");
  ASSERT_EQ(run("--seed 3 --jobs 2 --out " + q(out / "models") + " estimate --pairs " + q(corpus_->pairs) +
                " --inventory " + q(corpus_->inventory)),
            0);
  EXPECT_TRUE(fs::exists(out / "models" / "averaged.ovrtf"));
  EXPECT_TRUE(fs::exists(out / "models" / "t00.ovrtf"));

  ASSERT_EQ(run("--seed 3 --out " + q(out / "aug") + " augment --speech " + q(corpus_->speech) + " --model " +
                q(out / "models" / "averaged.ovrtf") + " --technique random-phoneme --alpha 0.3"),
            0);
  ASSERT_EQ(run("--seed 3 --out " + q(out / "spat") + " spatialize --noise " + q(corpus_->noise) + " --hrir " +
                q(corpus_->hrir) + " --mode diffuse"),
            0);
  ASSERT_EQ(run("--seed 3 --out " + q(out / "mix") + " mix --own " + q(out / "aug" / "augmented.jsonl") +
                " --noise " + q(corpus_->noise) + " --hrir " + q(corpus_->hrir) + " --snr 5 --mode point --direction 2"),
            0);
  EXPECT_EQ(run("validate " + q(out / "mix" / "examples.jsonl") + " " + q(out / "models" / "averaged.ovrtf")), 0);

  const auto noisy = pipeline::read_wav_mono(out / "mix" / "examples" / "t00_u000_outer.wav");
  const Spectrogram s = analyze(noisy, pipeline_frame_spec());
  save_masks({pipeline_frame_spec(), ComplexMatrix(s.bins(), s.frames(), 0.5), ComplexMatrix(s.bins(), s.frames(), 0.5)},
             out / "m.ovmsk");
  EXPECT_EQ(run("reconstruct --outer " + q(out / "mix" / "examples" / "t00_u000_outer.wav") + " --inear " +
                q(out / "mix" / "examples" / "t00_u000_inear.wav") + " --masks " + q(out / "m.ovmsk") + " --output " +
                q(out / "est.wav")),
            0);
  EXPECT_EQ(pipeline::read_wav_mono(out / "est.wav").size(), noisy.size());
}

TEST_F(Cli, ConfigFileAndSubsets) {
  const fs::path out = fresh_dir("cli_cfg");
  std::ofstream(out / "c.json") << R"({"seed": 5, "estimate": {"mode": "speech-independent", "scope": "talker-averaged"}})";
  ASSERT_EQ(run("--config " + q(out / "c.json") + " --subset-talkers 1 --subset-utterances 1 --out " + q(out / "m") +
                " estimate --pairs " + q(corpus_->pairs)),
            0);
  const RtfModel m = load_model(out / "m" / "averaged.ovrtf");
  EXPECT_EQ(m.mode, ModelMode::kSpeechIndependent);
  EXPECT_EQ(m.talkers.size(), 1u);
  EXPECT_EQ(m.utterance_count, 1u);
  EXPECT_FALSE(fs::exists(out / "m" / "t00.ovrtf"));
}

TEST_F(Cli, ExitCodes) {
  const fs::path dir = fresh_dir("cli_codes");
  save_model(RtfModel::constant(ModelMode::kSpeechIndependent, 1, Complex(1.0)), dir / "ok.ovrtf");
  EXPECT_EQ(run("validate " + q(dir / "ok.ovrtf")), 0);

  std::ofstream(dir / "bad.json") << R"({"augment": {"alpha": 5}})";
  EXPECT_EQ(run("validate " + q(dir / "bad.json")), 1);
  EXPECT_EQ(run("validate " + q(dir / "ok.ovrtf") + " " + q(dir / "bad.json")), 1);
  EXPECT_EQ(run("validate " + q(dir / "nothing.ovrtf")), 2);
  EXPECT_EQ(run("estimate --pairs " + q(dir / "nothing.jsonl") + " --out " + q(dir / "o")), 2);
  // Speech-dependent estimation without an inventory is a validation failure.
  EXPECT_EQ(run("--out " + q(dir / "o") + " estimate --pairs " + q(corpus_->pairs)), 1);
  EXPECT_EQ(run("--out " + q(dir / "o") + " estimate --pairs " + q(corpus_->pairs) + " --mode sometimes"), 1);
  EXPECT_NE(run("--jobs 0 validate " + q(dir / "ok.ovrtf")), 0);
  EXPECT_NE(run("frobnicate"), 0);
}

}  // namespace
}  // namespace ovaug
