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

#include "lexsub/config.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "lexsub/http_backends.h"
#include "lexsub/stub_backends.h"

namespace lexsub {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool IsKnownKey(std::string_view key) {
  const auto& keys = KnownConfigKeys();
  return std::any_of(keys.begin(), keys.end(),
                     [&](const ConfigKey& k) { return k.name == key; });
}

class Reader {
 public:
  Reader(const std::map<std::string, std::string>& values,
         const std::filesystem::path& base_dir)
      : values_(values), base_dir_(base_dir) {}

  std::string String(const std::string& key) const {
    const auto it = values_.find(key);
    if (it != values_.end()) return it->second;
    for (const ConfigKey& k : KnownConfigKeys()) {
      if (k.name == key) return std::string(k.default_value);
    }
    throw ConfigError("unknown config key '" + key + "'");
  }

  double Double(const std::string& key) const {
    const std::string s = String(key);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
      throw ConfigError(key + ": expected a number, got '" + s + "'");
    }
    return v;
  }

  double UnitInterval(const std::string& key) const {
    const double v = Double(key);
    if (v < 0.0 || v > 1.0) throw ConfigError(key + " must be in [0,1]");
    return v;
  }

  std::uint64_t Unsigned(const std::string& key) const {
    const std::string s = String(key);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ConfigError(key + ": expected a non-negative integer, got '" + s + "'");
    }
    return v;
  }

  bool Bool(const std::string& key) const {
    const std::string s = String(key);
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw ConfigError(key + ": expected true or false, got '" + s + "'");
  }

  std::vector<double> DoubleList(const std::string& key) const {
    std::vector<double> out;
    std::stringstream ss(String(key));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const std::string_view t = Trim(item);
      if (t.empty()) continue;
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc() || ptr != t.data() + t.size()) {
        throw ConfigError(key + ": bad number '" + std::string(t) + "'");
      }
      out.push_back(v);
    }
    return out;
  }

  // Empty stays empty; otherwise resolved against the config directory and
  // required to exist.
  std::filesystem::path ExistingPath(const std::string& key) const {
    const std::string s = String(key);
    if (s.empty()) return {};
    std::filesystem::path p(s);
    if (p.is_relative() && !base_dir_.empty()) p = base_dir_ / p;
    if (!std::filesystem::exists(p)) {
      throw ConfigError(key + ": path does not exist: " + p.string());
    }
    return p;
  }

  std::string Backend(const std::string& key) const {
    const std::string s = String(key);
    if (s == "stub" || (s.starts_with("external:") && s.size() > 9)) return s;
    throw ConfigError(key + ": expected 'stub' or 'external:<url>', got '" + s + "'");
  }

 private:
  const std::map<std::string, std::string>& values_;
  const std::filesystem::path& base_dir_;
};

std::string ExternalUrl(const std::string& selection) {
  return selection.substr(std::string_view("external:").size());
}

}  // namespace

const std::vector<ConfigKey>& KnownConfigKeys() {
  static const std::vector<ConfigKey> keys = {
      {"backend.predictor", "stub", "masked-word predictor: stub | external:<url>"},
      {"backend.sentence_encoder", "stub", "gloss sentence encoder: stub | external:<url>"},
      {"backend.pair_model", "stub", "sentence-pair similarity model: stub | external:<url>"},
      {"backend.gloss_selector", "stub", "context gloss selector: stub | external:<url>"},
      {"backend.translator", "stub", "translation models: stub | external:<url>"},
      {"backend.token_encoder", "stub", "contextual token encoder: stub | external:<url>"},
      {"stub.vocabulary", "", "word list for the stub predictor (one per line)"},
      {"stub.translation_table", "", "route<TAB>from<TAB>to rewrites for the stub translator"},
      {"lexicon.path", "", "lexicon TSV (required)"},
      {"proposal.strategy", "mixup", "mixup | gaussian | dropout | mask | keep"},
      {"proposal.lambda", "0.25", "mixup interpolation weight of the target embedding"},
      {"proposal.mu", "0", "gaussian noise mean"},
      {"proposal.sigma", "0.01", "gaussian noise standard deviation"},
      {"proposal.sigma_per_component", "", "comma-separated per-component sigmas (overrides proposal.sigma)"},
      {"proposal.dropout_p", "0.3", "embedding dropout probability"},
      {"proposal.seed", "0", "seed for gaussian noise and dropout"},
      {"weights.proposal", "0.05", "weight of the proposal score"},
      {"weights.gloss", "0.05", "weight of the gloss similarity score"},
      {"weights.sentence", "1", "weight of the sentence similarity score"},
      {"weights.validation", "0.5", "weight of the validation score"},
      {"candidates.k", "30", "candidates generated per target"},
      {"tune.grid_step", "0.05", "weight grid step for tune-weights"},
      {"validation.include_target", "true", "weight the target position in the validation score"},
      {"routes.out", "en-romance", "first translation hop"},
      {"routes.back", "romance-en", "translation back to the source language"},
      {"routes.mid", "fr-es", "intermediate hop used when the round trip is a no-op"},
      {"sts.epochs", "4", "fine-tuning epochs for the similarity model"},
      {"sts.backtranslated_gold", "true", "emit back-translated gold pairs"},
      {"sts.backtranslated_synonym", "true", "emit back-translated synonym pairs"},
      {"metrics.coverage_only", "false", "average over predicted instances only"},
  };
  return keys;
}

ConfigValues ConfigValues::FromFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return FromString(ss.str(), path.parent_path());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ":" + e.what());
  }
}

ConfigValues ConfigValues::FromString(std::string_view text,
                                      const std::filesystem::path& base_dir) {
  ConfigValues config;
  config.base_dir_ = base_dir;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(std::to_string(line_no) + ": expected 'key = value'");
    }
    try {
      config.Set(std::string(Trim(line.substr(0, eq))),
                 std::string(Trim(line.substr(eq + 1))));
    } catch (const ConfigError& e) {
      throw ConfigError(std::to_string(line_no) + ": " + e.what());
    }
  }
  return config;
}

void ConfigValues::Set(std::string_view assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("expected key=value, got '" + std::string(assignment) + "'");
  }
  Set(std::string(Trim(assignment.substr(0, eq))),
      std::string(Trim(assignment.substr(eq + 1))));
}

void ConfigValues::Set(const std::string& key, const std::string& value) {
  if (!IsKnownKey(key)) throw ConfigError("unknown config key '" + key + "'");
  values_[key] = value;
}

RunConfig ConfigValues::Resolve() const {
  const Reader r(values_, base_dir_);
  RunConfig c;
  c.predictor_backend = r.Backend("backend.predictor");
  c.sentence_encoder_backend = r.Backend("backend.sentence_encoder");
  c.pair_model_backend = r.Backend("backend.pair_model");
  c.gloss_selector_backend = r.Backend("backend.gloss_selector");
  c.translator_backend = r.Backend("backend.translator");
  c.token_encoder_backend = r.Backend("backend.token_encoder");

  c.stub_vocabulary = r.ExistingPath("stub.vocabulary");
  c.stub_translation_table = r.ExistingPath("stub.translation_table");
  c.lexicon_path = r.ExistingPath("lexicon.path");

  GaussianNoise noise;
  noise.mu = r.Double("proposal.mu");
  noise.sigma = r.Double("proposal.sigma");
  noise.sigma_per_component = r.DoubleList("proposal.sigma_per_component");
  noise.seed = r.Unsigned("proposal.seed");
  const std::string strategy = r.String("proposal.strategy");
  if (strategy == "mixup") {
    c.strategy = MixupStrategy{r.UnitInterval("proposal.lambda"), noise};
  } else if (strategy == "gaussian") {
    c.strategy = noise;
  } else if (strategy == "dropout") {
    c.strategy = DropoutStrategy{r.UnitInterval("proposal.dropout_p"), noise.seed};
  } else if (strategy == "mask") {
    c.strategy = MaskStrategy{};
  } else if (strategy == "keep") {
    c.strategy = KeepStrategy{};
  } else {
    throw ConfigError("proposal.strategy: unknown strategy '" + strategy + "'");
  }
  try {
    ValidateStrategy(c.strategy);
  } catch (const ValidationError& e) {
    throw ConfigError(e.what());
  }

  c.weights = {r.UnitInterval("weights.proposal"), r.UnitInterval("weights.gloss"),
               r.UnitInterval("weights.sentence"),
               r.UnitInterval("weights.validation")};
  c.k = r.Unsigned("candidates.k");
  if (c.k == 0) throw ConfigError("candidates.k must be >= 1");
  c.grid_step = r.Double("tune.grid_step");
  if (!(c.grid_step > 0.0 && c.grid_step <= 1.0)) {
    throw ConfigError("tune.grid_step must be in (0,1]");
  }
  c.validation.include_target = r.Bool("validation.include_target");
  c.sts.routes = {r.String("routes.out"), r.String("routes.back"),
                  r.String("routes.mid")};
  c.sts.backtranslated_gold = r.Bool("sts.backtranslated_gold");
  c.sts.backtranslated_synonym = r.Bool("sts.backtranslated_synonym");
  const std::uint64_t epochs = r.Unsigned("sts.epochs");
  if (epochs > 1000) throw ConfigError("sts.epochs is unreasonably large");
  c.epochs = static_cast<int>(epochs);
  c.metrics.coverage_only = r.Bool("metrics.coverage_only");
  return c;
}

Scorers Backends::MakeScorers(const RunConfig& config) const {
  return Scorers{*lexicon,      *predictor,     *gloss_selector,
                 *sentence_encoder, *pair_model, *token_encoder,
                 config.strategy,   config.validation};
}

Pipeline Backends::MakePipeline(const RunConfig& config) const {
  return Pipeline{MakeScorers(config), config.weights, config.k};
}

Backends BuildBackends(const RunConfig& config) {
  if (config.lexicon_path.empty()) throw ConfigError("lexicon.path is required");
  if (config.predictor_backend == "stub" && config.stub_vocabulary.empty()) {
    throw ConfigError("stub.vocabulary is required with the stub predictor");
  }
  Backends b;
  b.lexicon = std::make_shared<Lexicon>(LoadLexicon(config.lexicon_path));

  if (config.predictor_backend == "stub") {
    b.predictor = std::make_shared<StubPredictor>(LoadVocabulary(config.stub_vocabulary));
  } else {
    b.predictor = MakeHttpPredictor(ExternalUrl(config.predictor_backend));
  }
  b.sentence_encoder =
      config.sentence_encoder_backend == "stub"
          ? std::shared_ptr<SentenceEncoder>(std::make_shared<StubSentenceEncoder>())
          : MakeHttpSentenceEncoder(ExternalUrl(config.sentence_encoder_backend));
  b.pair_model =
      config.pair_model_backend == "stub"
          ? std::shared_ptr<PairSimilarityModel>(std::make_shared<StubPairModel>())
          : MakeHttpPairModel(ExternalUrl(config.pair_model_backend));
  b.gloss_selector =
      config.gloss_selector_backend == "stub"
          ? std::shared_ptr<GlossSelector>(std::make_shared<StubGlossSelector>())
          : MakeHttpGlossSelector(ExternalUrl(config.gloss_selector_backend));
  if (config.translator_backend == "stub") {
    if (config.stub_translation_table.empty()) {
      StubTranslator::RewriteTable identity;
      identity[config.sts.routes.out];
      identity[config.sts.routes.back];
      identity[config.sts.routes.mid];
      b.translator = std::make_shared<StubTranslator>(std::move(identity));
    } else {
      b.translator = std::make_shared<StubTranslator>(
          StubTranslator::ReadTable(config.stub_translation_table));
    }
  } else {
    b.translator = MakeHttpTranslator(ExternalUrl(config.translator_backend));
  }
  b.token_encoder =
      config.token_encoder_backend == "stub"
          ? std::shared_ptr<ContextualTokenEncoder>(std::make_shared<StubTokenEncoder>())
          : MakeHttpTokenEncoder(ExternalUrl(config.token_encoder_backend));

  b.predictor = SerializeIfUnsafe(std::move(b.predictor));
  b.sentence_encoder = SerializeIfUnsafe(std::move(b.sentence_encoder));
  b.pair_model = SerializeIfUnsafe(std::move(b.pair_model));
  b.gloss_selector = SerializeIfUnsafe(std::move(b.gloss_selector));
  b.translator = SerializeIfUnsafe(std::move(b.translator));
  b.token_encoder = SerializeIfUnsafe(std::move(b.token_encoder));
  return b;
}

}  // namespace lexsub
