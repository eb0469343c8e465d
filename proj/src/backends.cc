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

#include "lexsub/backends.h"

#include <cmath>
#include <mutex>

namespace lexsub {

double VocabularyScores::at(const std::string& word) const {
  const auto it = scores.find(word);
  if (it == scores.end()) {
    throw BackendError("predictor returned no score for '" + word + "'");
  }
  return it->second;
}

std::span<const double> TokenAnalysis::attention_from(std::size_t src) const {
  return attention.at(src);
}

void ValidateAnalysis(const TokenAnalysis& analysis, std::size_t token_count) {
  if (analysis.token_vectors.size() != token_count ||
      analysis.attention.size() != token_count) {
    throw BackendError("token analysis covers " +
                       std::to_string(analysis.token_vectors.size()) +
                       " tokens, expected " + std::to_string(token_count));
  }
  for (const auto& row : analysis.attention) {
    if (row.size() != token_count) {
      throw BackendError("attention row has wrong length");
    }
    for (double w : row) {
      if (!(w >= 0.0) || !std::isfinite(w)) {
        throw BackendError("attention weights must be finite and >= 0");
      }
    }
  }
}

std::string_view PairSourceName(PairSource source) {
  switch (source) {
    case PairSource::kGold:
      return "gold";
    case PairSource::kSynonym:
      return "synonym";
    case PairSource::kBacktranslatedGold:
      return "backtranslated-gold";
    case PairSource::kBacktranslatedSynonym:
      return "backtranslated-synonym";
  }
  return "unknown";
}

namespace {

class SerializedPredictor : public TargetWordPredictor {
 public:
  explicit SerializedPredictor(std::shared_ptr<TargetWordPredictor> inner)
      : inner_(std::move(inner)) {}
  EmbeddingVector InputEmbedding(const std::string& word) const override {
    std::lock_guard lock(mu_);
    return inner_->InputEmbedding(word);
  }
  VocabularyScores Predict(std::span<const std::string> tokens,
                           std::size_t target_index,
                           const EmbeddingVector& replacement,
                           std::span<const std::string> query_words)
      const override {
    std::lock_guard lock(mu_);
    return inner_->Predict(tokens, target_index, replacement, query_words);
  }

 private:
  std::shared_ptr<TargetWordPredictor> inner_;
  mutable std::mutex mu_;
};

class SerializedEncoder : public SentenceEncoder {
 public:
  explicit SerializedEncoder(std::shared_ptr<SentenceEncoder> inner)
      : inner_(std::move(inner)) {}
  EmbeddingVector Encode(const std::string& text) const override {
    std::lock_guard lock(mu_);
    return inner_->Encode(text);
  }

 private:
  std::shared_ptr<SentenceEncoder> inner_;
  mutable std::mutex mu_;
};

class SerializedPairModel : public PairSimilarityModel {
 public:
  explicit SerializedPairModel(std::shared_ptr<PairSimilarityModel> inner)
      : inner_(std::move(inner)) {}
  double Score(const std::string& a, const std::string& b) const override {
    std::lock_guard lock(mu_);
    return inner_->Score(a, b);
  }
  void Fit(const std::vector<SentencePairExample>& pairs, int epochs) override {
    std::lock_guard lock(mu_);
    inner_->Fit(pairs, epochs);
  }

 private:
  std::shared_ptr<PairSimilarityModel> inner_;
  mutable std::mutex mu_;
};

class SerializedGlossSelector : public GlossSelector {
 public:
  explicit SerializedGlossSelector(std::shared_ptr<GlossSelector> inner)
      : inner_(std::move(inner)) {}
  std::size_t Choose(std::span<const std::string> tokens,
                     std::size_t target_index,
                     std::span<const std::string> glosses) const override {
    std::lock_guard lock(mu_);
    return inner_->Choose(tokens, target_index, glosses);
  }

 private:
  std::shared_ptr<GlossSelector> inner_;
  mutable std::mutex mu_;
};

class SerializedTranslator : public Translator {
 public:
  explicit SerializedTranslator(std::shared_ptr<Translator> inner)
      : inner_(std::move(inner)) {}
  std::string Translate(const std::string& text,
                        const std::string& route) const override {
    std::lock_guard lock(mu_);
    return inner_->Translate(text, route);
  }

 private:
  std::shared_ptr<Translator> inner_;
  mutable std::mutex mu_;
};

class SerializedTokenEncoder : public ContextualTokenEncoder {
 public:
  explicit SerializedTokenEncoder(std::shared_ptr<ContextualTokenEncoder> inner)
      : inner_(std::move(inner)) {}
  TokenAnalysis Analyze(std::span<const std::string> tokens) const override {
    std::lock_guard lock(mu_);
    return inner_->Analyze(tokens);
  }

 private:
  std::shared_ptr<ContextualTokenEncoder> inner_;
  mutable std::mutex mu_;
};

template <typename Wrapper, typename Interface>
std::shared_ptr<Interface> Wrap(std::shared_ptr<Interface> backend) {
  if (backend == nullptr || backend->concurrency_safe()) return backend;
  return std::make_shared<Wrapper>(std::move(backend));
}

}  // namespace

std::shared_ptr<TargetWordPredictor> SerializeIfUnsafe(
    std::shared_ptr<TargetWordPredictor> backend) {
  return Wrap<SerializedPredictor>(std::move(backend));
}
std::shared_ptr<SentenceEncoder> SerializeIfUnsafe(
    std::shared_ptr<SentenceEncoder> backend) {
  return Wrap<SerializedEncoder>(std::move(backend));
}
std::shared_ptr<PairSimilarityModel> SerializeIfUnsafe(
    std::shared_ptr<PairSimilarityModel> backend) {
  return Wrap<SerializedPairModel>(std::move(backend));
}
std::shared_ptr<GlossSelector> SerializeIfUnsafe(
    std::shared_ptr<GlossSelector> backend) {
  return Wrap<SerializedGlossSelector>(std::move(backend));
}
std::shared_ptr<Translator> SerializeIfUnsafe(
    std::shared_ptr<Translator> backend) {
  return Wrap<SerializedTranslator>(std::move(backend));
}
std::shared_ptr<ContextualTokenEncoder> SerializeIfUnsafe(
    std::shared_ptr<ContextualTokenEncoder> backend) {
  return Wrap<SerializedTokenEncoder>(std::move(backend));
}

}  // namespace lexsub
