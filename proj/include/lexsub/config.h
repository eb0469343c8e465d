//
// Copyright 2026 The LexSub Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Flat `key = value` run configuration and the backend wiring it selects.
//
// Lines are `key = value`; `#` starts a comment. Unknown keys are rejected.
// Relative paths resolve against the directory of the config file.

#ifndef LEXSUB_CONFIG_H_
#define LEXSUB_CONFIG_H_

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lexsub/augment.h"
#include "lexsub/backends.h"
#include "lexsub/lexicon.h"
#include "lexsub/metrics.h"
#include "lexsub/ranking.h"
#include "lexsub/sentence_scorer.h"

namespace lexsub {

// Config or command-line problem; maps to the usage exit code.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct ConfigKey {
  std::string_view name;
  std::string_view default_value;
  std::string_view help;
};

// Every accepted key, in documentation order.
const std::vector<ConfigKey>& KnownConfigKeys();

struct RunConfig {
  // Backend selections: "stub" or "external:<base-url>".
  std::string predictor_backend = "stub";
  std::string sentence_encoder_backend = "stub";
  std::string pair_model_backend = "stub";
  std::string gloss_selector_backend = "stub";
  std::string translator_backend = "stub";
  std::string token_encoder_backend = "stub";

  std::filesystem::path stub_vocabulary;
  std::filesystem::path stub_translation_table;
  std::filesystem::path lexicon_path;

  PerturbationStrategy strategy = MixupStrategy{};
  CombinationWeights weights;
  std::size_t k = kDefaultCandidateCount;
  double grid_step = kDefaultGridStep;
  ValidationOptions validation;
  StsPairOptions sts;
  int epochs = kDefaultFinetuneEpochs;
  MetricOptions metrics;
};

// Raw key/value view used for overrides before interpretation.
class ConfigValues {
 public:
  // Throws ConfigError naming the line for syntax errors or unknown keys.
  static ConfigValues FromFile(const std::filesystem::path& path);
  static ConfigValues FromString(std::string_view text,
                                 const std::filesystem::path& base_dir);

  // "key=value"; throws ConfigError for unknown keys.
  void Set(std::string_view assignment);
  void Set(const std::string& key, const std::string& value);

  // Interprets the values. Throws ConfigError for bad numbers, out-of-range
  // parameters, or referenced paths that do not exist.
  RunConfig Resolve() const;

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
  std::filesystem::path base_dir_;
};

// Owned backends plus the lexicon they share.
struct Backends {
  std::shared_ptr<const Lexicon> lexicon;
  std::shared_ptr<TargetWordPredictor> predictor;
  std::shared_ptr<SentenceEncoder> sentence_encoder;
  std::shared_ptr<PairSimilarityModel> pair_model;
  std::shared_ptr<GlossSelector> gloss_selector;
  std::shared_ptr<Translator> translator;
  std::shared_ptr<ContextualTokenEncoder> token_encoder;

  Scorers MakeScorers(const RunConfig& config) const;
  Pipeline MakePipeline(const RunConfig& config) const;
};

// Loads the lexicon and instantiates every selected backend, wrapping any
// that are not concurrency safe. Throws ConfigError when lexicon.path, or
// stub.vocabulary for the stub predictor, is unset.
Backends BuildBackends(const RunConfig& config);

}  // namespace lexsub

#endif  // LEXSUB_CONFIG_H_
