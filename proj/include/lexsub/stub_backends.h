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

// Deterministic letter-count backends. Every value they produce can be
// computed by hand, which makes them the test oracle for the scorers.

#ifndef LEXSUB_STUB_BACKENDS_H_
#define LEXSUB_STUB_BACKENDS_H_

#include <atomic>
#include <filesystem>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lexsub/backends.h"

namespace lexsub {

inline constexpr std::size_t kStubDim = 26;

// L2-normalized counts of the letters a-z in `text` (case-folded). Text
// without letters maps to the zero vector.
EmbeddingVector StubEmbed(std::string_view text);

// score(w) = -||replacement - StubEmbed(w)|| for every w in `vocabulary`.
// Throws ValidationError on an empty vocabulary. Context is ignored.
VocabularyScores StubPredict(std::span<const std::string> tokens,
                             std::size_t target_index,
                             const EmbeddingVector& replacement,
                             const std::set<std::string>& vocabulary);

// (1 + cos(StubEmbed(a), StubEmbed(b))) / 2, and exactly 1 for identical
// non-empty strings.
double StubPairScore(std::string_view a, std::string_view b);

class StubPredictor : public TargetWordPredictor {
 public:
  explicit StubPredictor(std::set<std::string> vocabulary);

  EmbeddingVector InputEmbedding(const std::string& word) const override;
  VocabularyScores Predict(std::span<const std::string> tokens,
                           std::size_t target_index,
                           const EmbeddingVector& replacement,
                           std::span<const std::string> query_words)
      const override;

  const std::set<std::string>& vocabulary() const { return vocabulary_; }

 private:
  std::set<std::string> vocabulary_;
};

// One word per line; blank lines ignored.
std::set<std::string> LoadVocabulary(const std::filesystem::path& path);

class StubSentenceEncoder : public SentenceEncoder {
 public:
  EmbeddingVector Encode(const std::string& text) const override;
};

class StubPairModel : public PairSimilarityModel {
 public:
  double Score(const std::string& a, const std::string& b) const override;
  void Fit(const std::vector<SentencePairExample>& pairs, int epochs) override;

  // Everything Fit() has received, in call order.
  std::vector<std::pair<std::vector<SentencePairExample>, int>> fit_calls()
      const;

 private:
  mutable std::mutex mu_;
  std::vector<std::pair<std::vector<SentencePairExample>, int>> fit_calls_;
};

// Picks the gloss whose letter profile is closest (cosine) to the joined
// sentence; ties go to the lowest index.
class StubGlossSelector : public GlossSelector {
 public:
  std::size_t Choose(std::span<const std::string> tokens,
                     std::size_t target_index,
                     std::span<const std::string> glosses) const override;

  std::size_t calls() const { return calls_.load(); }

 private:
  mutable std::atomic<std::size_t> calls_{0};
};

struct TranslationCall {
  std::string text;
  std::string route;

  friend bool operator==(const TranslationCall&,
                         const TranslationCall&) = default;
};

// Token rewrite tables keyed by route. A route with no rules is the identity.
class StubTranslator : public Translator {
 public:
  using RewriteTable = std::map<std::string, std::vector<std::pair<std::string, std::string>>>;

  explicit StubTranslator(RewriteTable table);

  // Reads TSV lines `route<TAB>from<TAB>to`. A line holding only `route` declares an
  // identity route.
  static RewriteTable ReadTable(const std::filesystem::path& path);

  // Throws BackendError for an unconfigured route.
  std::string Translate(const std::string& text,
                        const std::string& route) const override;

  std::vector<TranslationCall> call_log() const;
  void ClearLog();

 private:
  RewriteTable table_;
  mutable std::mutex mu_;
  mutable std::vector<TranslationCall> log_;
};

// Token vectors are StubEmbed(token); attention is uniform.
class StubTokenEncoder : public ContextualTokenEncoder {
 public:
  TokenAnalysis Analyze(std::span<const std::string> tokens) const override;
};

}  // namespace lexsub

#endif  // LEXSUB_STUB_BACKENDS_H_
