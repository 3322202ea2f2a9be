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

#include "ovaug/augmentor.hpp"

#include <string>

#include "ovaug/error.hpp"
#include "ovaug/resampler.hpp"
#include "ovaug/wola.hpp"

namespace ovaug {

const char* to_string(Technique t) {
  switch (t) {
    case Technique::kSpeechIndependent:
      return "speech-independent";
    case Technique::kSpeechDependent:
      return "speech-dependent";
    case Technique::kRandomPhoneme:
      return "random-phoneme";
  }
  return "?";
}

Technique parse_technique(std::string_view name) {
  if (name == "speech-independent") return Technique::kSpeechIndependent;
  if (name == "speech-dependent") return Technique::kSpeechDependent;
  if (name == "random-phoneme") return Technique::kRandomPhoneme;
  throw InvalidArgument("unknown augmentation technique '" + std::string(name) + "'");
}

void AugmentConfig::validate(const RtfModel& model) const {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie in [0, 1)");
  if (technique != Technique::kSpeechIndependent && model.mode != ModelMode::kSpeechDependent) {
    throw InvalidArgument(std::string(to_string(technique)) + " augmentation needs a speech-dependent model");
  }
  if (technique == Technique::kSpeechIndependent && model.mode != ModelMode::kSpeechIndependent) {
    throw InvalidArgument("speech-independent augmentation needs a speech-independent model");
  }
}

ComplexMatrix select_rtf_sequence(const RtfModel& model, const PhonemeSequence& phonemes) {
  if (model.mode != ModelMode::kSpeechDependent) {
    throw InvalidArgument("select_rtf_sequence: model is not speech-dependent");
  }
  if (phonemes.inventory_size != model.num_slots()) {
    throw ShapeMismatch("select_rtf_sequence: phoneme inventory size differs from model slots");
  }
  phonemes.check(phonemes.size());
  const std::size_t bins = model.num_bins();
  ComplexMatrix out(bins, phonemes.size());
  for (std::size_t l = 0; l < phonemes.size(); ++l) {
    const PhonemeId id = phonemes.ids[l];
    const bool have = id != kUnknownPhoneme && model.available[id - 1];
    const auto src = have ? model.slot(id - 1) : std::span<const Complex>(model.fallback);
    std::copy(src.begin(), src.end(), out.column(l).begin());
  }
  return out;
}

ComplexMatrix constant_rtf_sequence(const RtfModel& model, std::size_t num_frames) {
  if (model.mode != ModelMode::kSpeechIndependent) {
    throw InvalidArgument("constant_rtf_sequence: model is not speech-independent");
  }
  ComplexMatrix out(model.num_bins(), num_frames);
  const auto src = model.slot(0);
  for (std::size_t l = 0; l < num_frames; ++l) std::copy(src.begin(), src.end(), out.column(l).begin());
  return out;
}

ComplexMatrix smooth_rtf_sequence(const ComplexMatrix& sequence, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie in [0, 1)");
  ComplexMatrix out = sequence;
  for (std::size_t l = 1; l < out.frames(); ++l) {
    auto prev = out.column(l - 1);
    auto cur = out.column(l);
    // in + alpha * (prev - in): identical to the textbook form, and exact
    // when prev == in, so constant runs pass through bit for bit.
    for (std::size_t k = 0; k < out.bins(); ++k) cur[k] += alpha * (prev[k] - cur[k]);
  }
  return out;
}

std::size_t model_frames_for(const Waveform& speech, const RtfModel& model) {
  const Resampler down(speech.sample_rate, model.spec.sample_rate);
  return num_frames_for(model.spec, speech.sample_rate == model.spec.sample_rate ? speech.size()
                                                                                  : down.output_length(speech.size()));
}

Waveform augment(const Waveform& speech, const RtfModel& model, const AugmentConfig& cfg,
                 const PhonemeSequence* phonemes) {
  cfg.validate(model);
  speech.validate();
  if (speech.empty()) throw InvalidArgument("augment: empty input");

  const Waveform low = resample(speech, model.spec.sample_rate);
  Spectrogram spec = analyze(low, model.spec);
  const std::size_t n_frames = spec.frames();

  ComplexMatrix rtf;
  switch (cfg.technique) {
    case Technique::kSpeechIndependent:
      rtf = constant_rtf_sequence(model, n_frames);
      break;
    case Technique::kSpeechDependent:
      if (phonemes == nullptr) throw InvalidArgument("augment: speech-dependent technique needs a phoneme sequence");
      phonemes->check(n_frames);
      rtf = select_rtf_sequence(model, *phonemes);
      break;
    case Technique::kRandomPhoneme: {
      const PhonemeInventory inventory(model.inventory);
      rtf = select_rtf_sequence(model, random_sequence(n_frames, inventory, cfg.seed, model.spec));
      break;
    }
  }
  rtf = smooth_rtf_sequence(rtf, cfg.alpha);

  auto values = spec.data.data();
  const auto gains = rtf.data();
  for (std::size_t j = 0; j < values.size(); ++j) values[j] *= gains[j];

  Waveform inear = resample(synthesize(spec), speech.sample_rate);
  inear.samples.resize(speech.size(), 0.0);
  return inear;
}

}  // namespace ovaug
