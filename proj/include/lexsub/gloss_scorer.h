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

#ifndef LEXSUB_GLOSS_SCORER_H_
#define LEXSUB_GLOSS_SCORER_H_

#include <optional>
#include <span>
#include <string>

#include "lexsub/backends.h"
#include "lexsub/lexicon.h"

namespace lexsub {

// The word at tokens[target_index] in context, with its dictionary form.
struct TargetContext {
  std::span<const std::string> tokens;
  std::size_t target_index = 0;
  std::string lemma;
  std::optional<Pos> pos;  // nullopt: search every pos

  const std::string& target_word() const { return tokens[target_index]; }
};

// Copy of `tokens` with tokens[index] replaced by `word`.
std::vector<std::string> Substitute(std::span<const std::string> tokens,
                                    std::size_t index, const std::string& word);

// Cosine between the sentence embeddings of the target's gloss (selected on
// the original sentence) and the candidate's gloss (selected on the sentence
// with the candidate substituted in). The target is looked up by lemma,
// falling back to its surface form. 0 when either word has no gloss; exactly
// 1 when both glosses embed to the same vector.
double GlossScore(const Lexicon& lexicon, const GlossSelector& selector,
                  const SentenceEncoder& encoder, const TargetContext& target,
                  const std::string& candidate);

}  // namespace lexsub

#endif  // LEXSUB_GLOSS_SCORER_H_
