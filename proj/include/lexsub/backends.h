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

// Model backend interfaces consumed by the scorers.
//
// Every backend reports whether concurrent calls are safe. Callers that fan
// out over instances wrap unsafe backends with SerializeIfUnsafe(), which
// funnels all calls through one mutex.
//
// Adapter contract for real models:
//  * TargetWordPredictor::Predict must return a score for every word in
//    `query_words`, even when the word is outside the model vocabulary. The
//    reference policy scores such a word by its first sub-token.
//  * Multi-piece words are embedded as the mean of their piece embeddings.
//  * ContextualTokenEncoder::Analyze returns one vector per input word
//    (piece vectors averaged) and attention averaged over heads and layers,
//    aggregated to word positions the same way.

#ifndef LEXSUB_BACKENDS_H_
#define LEXSUB_BACKENDS_H_

#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lexsub/types.h"

namespace lexsub {

// Score vector y_t keyed by word.
struct VocabularyScores {
  std::unordered_map<std::string, double> scores;

  // Throws BackendError when `word` is missing.
  double at(const std::string& word) const;
};

struct TokenAnalysis {
  std::vector<EmbeddingVector> token_vectors;
  // attention[src][i]: non-negative weight from token src to token i.
  std::vector<std::vector<double>> attention;

  std::span<const double> attention_from(std::size_t src) const;
};

// Throws BackendError unless the analysis has one vector and one full-length
// non-negative attention row per token.
void ValidateAnalysis(const TokenAnalysis& analysis, std::size_t token_count);

enum class PairSource {
  kGold,
  kSynonym,
  kBacktranslatedGold,
  kBacktranslatedSynonym,
};

std::string_view PairSourceName(PairSource source);

// One fine-tuning example for the sentence-pair similarity model.
struct SentencePairExample {
  std::string text_a;
  std::string text_b;
  double label = 0.0;  // in [0, 1]
  PairSource source = PairSource::kGold;

  friend bool operator==(const SentencePairExample&,
                         const SentencePairExample&) = default;
};

class TargetWordPredictor {
 public:
  virtual ~TargetWordPredictor() = default;
  virtual EmbeddingVector InputEmbedding(const std::string& word) const = 0;
  // Scores every vocabulary word plus every word in `query_words` for the
  // target slot, with the slot's input embedding replaced by `replacement`.
  virtual VocabularyScores Predict(std::span<const std::string> tokens,
                                   std::size_t target_index,
                                   const EmbeddingVector& replacement,
                                   std::span<const std::string> query_words)
      const = 0;
  virtual bool concurrency_safe() const { return true; }
};

class SentenceEncoder {
 public:
  virtual ~SentenceEncoder() = default;
  virtual EmbeddingVector Encode(const std::string& text) const = 0;
  virtual bool concurrency_safe() const { return true; }
};

class PairSimilarityModel {
 public:
  virtual ~PairSimilarityModel() = default;
  // Similarity in [0, 1].
  virtual double Score(const std::string& a, const std::string& b) const = 0;
  // Requires exclusive access: no Score() calls may run concurrently.
  virtual void Fit(const std::vector<SentencePairExample>& pairs,
                   int epochs) = 0;
  virtual bool concurrency_safe() const { return true; }
};

class GlossSelector {
 public:
  virtual ~GlossSelector() = default;
  // Index into the non-empty `glosses`.
  virtual std::size_t Choose(std::span<const std::string> tokens,
                             std::size_t target_index,
                             std::span<const std::string> glosses) const = 0;
  virtual bool concurrency_safe() const { return true; }
};

class Translator {
 public:
  virtual ~Translator() = default;
  virtual std::string Translate(const std::string& text,
                                const std::string& route) const = 0;
  virtual bool concurrency_safe() const { return true; }
};

class ContextualTokenEncoder {
 public:
  virtual ~ContextualTokenEncoder() = default;
  virtual TokenAnalysis Analyze(std::span<const std::string> tokens) const = 0;
  virtual bool concurrency_safe() const { return true; }
};

// Mutex-guarded wrappers for backends that are not concurrency safe. Each
// returns `backend` unchanged when it is already safe.
std::shared_ptr<TargetWordPredictor> SerializeIfUnsafe(
    std::shared_ptr<TargetWordPredictor> backend);
std::shared_ptr<SentenceEncoder> SerializeIfUnsafe(
    std::shared_ptr<SentenceEncoder> backend);
std::shared_ptr<PairSimilarityModel> SerializeIfUnsafe(
    std::shared_ptr<PairSimilarityModel> backend);
std::shared_ptr<GlossSelector> SerializeIfUnsafe(
    std::shared_ptr<GlossSelector> backend);
std::shared_ptr<Translator> SerializeIfUnsafe(
    std::shared_ptr<Translator> backend);
std::shared_ptr<ContextualTokenEncoder> SerializeIfUnsafe(
    std::shared_ptr<ContextualTokenEncoder> backend);

}  // namespace lexsub

#endif  // LEXSUB_BACKENDS_H_
