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

// Candidate generation and the final ranking by a weighted sum of the four
// component scores.

#ifndef LEXSUB_RANKING_H_
#define LEXSUB_RANKING_H_

#include <cstddef>
#include <string>
#include <vector>

#include "lexsub/backends.h"
#include "lexsub/dataset_io.h"
#include "lexsub/gloss_scorer.h"
#include "lexsub/lexicon.h"
#include "lexsub/proposal.h"
#include "lexsub/validation_scorer.h"

namespace lexsub {

inline constexpr std::size_t kDefaultCandidateCount = 30;
inline constexpr double kDefaultGridStep = 0.05;

struct CombinationWeights {
  double proposal = 0.05;
  double gloss = 0.05;
  double sentence = 1.0;
  double validation = 0.5;

  // Throws ValidationError unless every weight is in [0, 1].
  void Validate() const;

  friend bool operator==(const CombinationWeights&,
                         const CombinationWeights&) = default;
};

struct ScoredCandidate {
  std::string word;
  double proposal = 0.0;
  double gloss = 0.0;
  double sentence = 0.0;
  double validation = 0.0;
  double final = 0.0;
};

// Backends and settings shared by every scorer. All references must outlive
// the bundle.
struct Scorers {
  const Lexicon& lexicon;
  const TargetWordPredictor& predictor;
  const GlossSelector& gloss_selector;
  const SentenceEncoder& sentence_encoder;
  const PairSimilarityModel& pair_model;
  const ContextualTokenEncoder& token_encoder;
  PerturbationStrategy strategy = MixupStrategy{};
  ValidationOptions validation;
};

TargetContext MakeTargetContext(const LexSubInstance& instance);

// Synonyms feeding the mixup embedding: every lemma sharing a synset with the
// target lemma (or, failing that, the surface word).
std::set<std::string> MixupSynonyms(const Lexicon& lexicon,
                                    const TargetContext& target);

// Up to `k` lowercase single-word candidates. Lexicon relations (synonyms,
// hypernyms, hyponyms; lexicographic) come first; remaining slots are filled
// with the predictor's highest-scoring vocabulary words under `strategy`
// (score descending, then lexicographic). The target word and lemma are never
// included.
std::vector<std::string> GenerateCandidates(const Lexicon& lexicon,
                                            const TargetWordPredictor& predictor,
                                            const TargetContext& target,
                                            std::size_t k,
                                            const PerturbationStrategy& strategy);

// The four component scores for each candidate (final left at 0), in the
// order of `candidates`. Scorer failures surface as ScorerError.
std::vector<ScoredCandidate> ComponentScores(
    const Scorers& scorers, const TargetContext& target,
    const std::vector<std::string>& candidates);

double CombineScores(const CombinationWeights& weights,
                     const ScoredCandidate& candidate);

// Fills in `final` and sorts by final descending, ties by word ascending.
void ApplyWeights(const CombinationWeights& weights,
                  std::vector<ScoredCandidate>* candidates);

std::vector<ScoredCandidate> Rank(const CombinationWeights& weights,
                                  const Scorers& scorers,
                                  const TargetContext& target,
                                  const std::vector<std::string>& candidates);

struct TuneResult {
  CombinationWeights weights;
  double best_score = 0.0;  // best measure (percent) at `weights`
  std::size_t tuples_evaluated = 0;
};

// Exhaustive search over {0, step, ..., 1}^4 maximizing the best measure of
// the top-ranked candidate on `trial`. Ties go to the lexicographically
// smallest (proposal, gloss, sentence, validation) tuple. Candidates come from
// GenerateCandidates with `k`.
TuneResult TuneWeights(const std::vector<LexSubInstance>& trial,
                       const GoldSet& gold, const Scorers& scorers,
                       double grid_step, std::size_t k = kDefaultCandidateCount);

// Same search over precomputed component scores; `gold_credit[i][j]` is the
// best-measure credit of candidate j of instance i.
TuneResult TuneWeightsOnScores(
    const std::vector<std::vector<ScoredCandidate>>& components,
    const std::vector<std::vector<double>>& gold_credit, double grid_step);

}  // namespace lexsub

#endif  // LEXSUB_RANKING_H_
