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

#include "lexsub/gloss_scorer.h"

namespace lexsub {

std::vector<std::string> Substitute(std::span<const std::string> tokens,
                                    std::size_t index, const std::string& word) {
  if (index >= tokens.size()) throw ValidationError("target_index out of range");
  std::vector<std::string> out(tokens.begin(), tokens.end());
  out[index] = word;
  return out;
}

double GlossScore(const Lexicon& lexicon, const GlossSelector& selector,
                  const SentenceEncoder& encoder, const TargetContext& target,
                  const std::string& candidate) {
  if (candidate.empty() || ContainsWhitespace(candidate)) {
    throw ValidationError("gloss score needs a single-word candidate");
  }
  std::optional<std::string> target_gloss =
      SelectGloss(lexicon, selector, target.tokens, target.target_index,
                  target.lemma, target.pos);
  if (!target_gloss && target.target_word() != target.lemma) {
    target_gloss = SelectGloss(lexicon, selector, target.tokens,
                               target.target_index, target.target_word(),
                               target.pos);
  }
  if (!target_gloss) return 0.0;

  const std::vector<std::string> substituted =
      Substitute(target.tokens, target.target_index, candidate);
  const std::optional<std::string> candidate_gloss =
      SelectGloss(lexicon, selector, substituted, target.target_index,
                  candidate, target.pos);
  if (!candidate_gloss) return 0.0;

  const EmbeddingVector a = encoder.Encode(*target_gloss);
  const EmbeddingVector b = encoder.Encode(*candidate_gloss);
  return a == b ? 1.0 : Cosine(a, b);
}

}  // namespace lexsub
