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

#include "lexsub/stub_backends.h"

#include <cmath>
#include <fstream>

#include "lexsub/simd/kernels.h"

namespace lexsub {

EmbeddingVector StubEmbed(std::string_view text) {
  EmbeddingVector v(kStubDim);
  std::span<double> values = v.mutable_values();
  for (char c : text) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c >= 'a' && c <= 'z') values[static_cast<std::size_t>(c - 'a')] += 1.0;
  }
  const double norm = simd::Norm(values);
  if (norm > 0.0) {
    for (double& x : values) x /= norm;
  }
  return v;
}

VocabularyScores StubPredict(std::span<const std::string> /*tokens*/,
                             std::size_t /*target_index*/,
                             const EmbeddingVector& replacement,
                             const std::set<std::string>& vocabulary) {
  if (vocabulary.empty()) {
    throw ValidationError("stub predictor needs a non-empty vocabulary");
  }
  VocabularyScores out;
  out.scores.reserve(vocabulary.size());
  for (const std::string& w : vocabulary) {
    out.scores.emplace(
        w, -simd::Distance(replacement.values(), StubEmbed(w).values()));
  }
  return out;
}

double StubPairScore(std::string_view a, std::string_view b) {
  if (a == b && !a.empty()) return 1.0;
  return (1.0 + Cosine(StubEmbed(a), StubEmbed(b))) / 2.0;
}

StubPredictor::StubPredictor(std::set<std::string> vocabulary)
    : vocabulary_(std::move(vocabulary)) {
  if (vocabulary_.empty()) {
    throw ValidationError("stub predictor needs a non-empty vocabulary");
  }
}

EmbeddingVector StubPredictor::InputEmbedding(const std::string& word) const {
  return StubEmbed(word);
}

VocabularyScores StubPredictor::Predict(
    std::span<const std::string> tokens, std::size_t target_index,
    const EmbeddingVector& replacement,
    std::span<const std::string> query_words) const {
  if (replacement.dim() != kStubDim) {
    throw BackendError("stub predictor expects 26-dim embeddings");
  }
  VocabularyScores out =
      StubPredict(tokens, target_index, replacement, vocabulary_);
  for (const std::string& w : query_words) {
    if (!out.scores.contains(w)) {
      out.scores.emplace(
          w, -simd::Distance(replacement.values(), StubEmbed(w).values()));
    }
  }
  return out;
}

std::set<std::string> LoadVocabulary(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::set<std::string> vocab;
  std::string line;
  while (std::getline(in, line)) {
    for (std::string& w : SplitTokens(line)) {
      if (!w.empty() && w.back() == '\r') w.pop_back();
      if (!w.empty()) vocab.insert(std::move(w));
    }
  }
  return vocab;
}

EmbeddingVector StubSentenceEncoder::Encode(const std::string& text) const {
  return StubEmbed(text);
}

double StubPairModel::Score(const std::string& a, const std::string& b) const {
  return StubPairScore(a, b);
}

void StubPairModel::Fit(const std::vector<SentencePairExample>& pairs,
                        int epochs) {
  std::lock_guard lock(mu_);
  fit_calls_.emplace_back(pairs, epochs);
}

std::vector<std::pair<std::vector<SentencePairExample>, int>>
StubPairModel::fit_calls() const {
  std::lock_guard lock(mu_);
  return fit_calls_;
}

std::size_t StubGlossSelector::Choose(std::span<const std::string> tokens,
                                      std::size_t /*target_index*/,
                                      std::span<const std::string> glosses)
    const {
  if (glosses.empty()) throw BackendError("no glosses to choose from");
  ++calls_;
  const EmbeddingVector sentence = StubEmbed(JoinTokens(tokens));
  std::size_t best = 0;
  double best_cos = Cosine(StubEmbed(glosses[0]), sentence);
  for (std::size_t i = 1; i < glosses.size(); ++i) {
    const double c = Cosine(StubEmbed(glosses[i]), sentence);
    if (c > best_cos) {
      best = i;
      best_cos = c;
    }
  }
  return best;
}

StubTranslator::StubTranslator(RewriteTable table) : table_(std::move(table)) {}

StubTranslator::RewriteTable StubTranslator::ReadTable(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  RewriteTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() == 1) {
      table[fields[0]];
    } else if (fields.size() == 3 && !fields[0].empty() && !fields[1].empty()) {
      table[fields[0]].emplace_back(fields[1], fields[2]);
    } else {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": expected 'route<TAB>from<TAB>to' or 'route'");
    }
  }
  return table;
}

std::string StubTranslator::Translate(const std::string& text,
                                      const std::string& route) const {
  {
    std::lock_guard lock(mu_);
    log_.push_back({text, route});
  }
  const auto it = table_.find(route);
  if (it == table_.end()) {
    throw BackendError("unknown translation route '" + route + "'");
  }
  if (it->second.empty()) return text;
  std::vector<std::string> tokens = SplitTokens(text);
  for (std::string& token : tokens) {
    for (const auto& [from, to] : it->second) {
      if (token == from) {
        token = to;
        break;
      }
    }
  }
  return JoinTokens(tokens);
}

std::vector<TranslationCall> StubTranslator::call_log() const {
  std::lock_guard lock(mu_);
  return log_;
}

void StubTranslator::ClearLog() {
  std::lock_guard lock(mu_);
  log_.clear();
}

TokenAnalysis StubTokenEncoder::Analyze(
    std::span<const std::string> tokens) const {
  if (tokens.empty()) throw ValidationError("cannot analyze zero tokens");
  TokenAnalysis analysis;
  const std::size_t n = tokens.size();
  analysis.token_vectors.reserve(n);
  for (const std::string& t : tokens) analysis.token_vectors.push_back(StubEmbed(t));
  analysis.attention.assign(n, std::vector<double>(n, 1.0 / static_cast<double>(n)));
  return analysis;
}

}  // namespace lexsub
