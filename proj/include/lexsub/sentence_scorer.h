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

// Sentence-pair similarity between the original and substituted sentence,
// and construction of the fine-tuning pairs for the similarity model
// (annotated substitutes, sense synonyms, and their back-translated
// counterparts).

#ifndef LEXSUB_SENTENCE_SCORER_H_
#define LEXSUB_SENTENCE_SCORER_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "lexsub/backends.h"
#include "lexsub/dataset_io.h"
#include "lexsub/lexicon.h"

namespace lexsub {

inline constexpr int kDefaultFinetuneEpochs = 4;

double SentenceSimilarityScore(const PairSimilarityModel& model,
                               std::span<const std::string> tokens,
                               std::size_t target_index,
                               const std::string& candidate);

struct TranslationRoutes {
  std::string out = "en-romance";
  std::string back = "romance-en";
  // Second hop used only when the round trip returns the input unchanged.
  std::string mid = "fr-es";
};

// Round trip text -> out -> back. If that reproduces `text`, retries as
// text -> out -> mid -> back and returns the result even if it is still
// unchanged.
std::string BackTranslate(const Translator& translator, const std::string& text,
                          const TranslationRoutes& routes);

struct StsPairOptions {
  TranslationRoutes routes;
  bool backtranslated_gold = true;
  bool backtranslated_synonym = true;
};

// Pairs per instance, in order: gold, synonym, back-translated gold,
// back-translated synonym; within a category by substitute.
//  * gold: label = weight / max weight of the instance.
//  * synonym: lemmas of the context-selected synset of the target, label 1.
//  * back-translated: the same substitutes applied to the back-translation
//    of the sentence, only when the target word survives as a token.
// Throws ValidationError when an instance has no gold entry.
std::vector<SentencePairExample> BuildStsPairs(
    const std::vector<LexSubInstance>& instances, const GoldSet& gold,
    const Lexicon& lexicon, const GlossSelector& selector,
    const Translator& translator, const StsPairOptions& options);

// TSV: text_a<TAB>text_b<TAB>label<TAB>source
void WriteStsPairs(const std::vector<SentencePairExample>& pairs,
                   std::ostream& out);
void WriteStsPairs(const std::vector<SentencePairExample>& pairs,
                   const std::filesystem::path& path);
std::vector<SentencePairExample> ReadStsPairs(const std::filesystem::path& path);

// Requires exclusive access to `model`.
void FinetuneSimilarity(PairSimilarityModel& model,
                        const std::vector<SentencePairExample>& pairs,
                        int epochs = kDefaultFinetuneEpochs);

}  // namespace lexsub

#endif  // LEXSUB_SENTENCE_SCORER_H_
