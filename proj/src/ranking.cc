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

#include "lexsub/ranking.h"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "lexsub/sentence_scorer.h"

namespace lexsub {
namespace {

template <typename Fn>
auto Guarded(const char* scorer, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ScorerError&) {
    throw;
  } catch (const std::exception& e) {
    throw ScorerError(scorer, e.what());
  }
}

bool RankBefore(const ScoredCandidate& a, const ScoredCandidate& b) {
  if (a.final != b.final) return a.final > b.final;
  return a.word < b.word;
}

}  // namespace

void CombinationWeights::Validate() const {
  for (double w : {proposal, gloss, sentence, validation}) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw ValidationError("combination weights must lie in [0,1]");
    }
  }
}

TargetContext MakeTargetContext(const LexSubInstance& instance) {
  ValidateInstance(instance);
  return TargetContext{instance.tokens, instance.target_index, instance.lemma(),
                       instance.pos()};
}

std::set<std::string> MixupSynonyms(const Lexicon& lexicon,
                                    const TargetContext& target) {
  std::set<std::string> synonyms = AllSynonyms(lexicon, target.lemma);
  if (synonyms.empty() && target.target_word() != target.lemma) {
    synonyms = AllSynonyms(lexicon, target.target_word());
  }
  synonyms.erase(ToLower(target.target_word()));
  return synonyms;
}

std::vector<std::string> GenerateCandidates(const Lexicon& lexicon,
                                            const TargetWordPredictor& predictor,
                                            const TargetContext& target,
                                            std::size_t k,
                                            const PerturbationStrategy& strategy) {
  if (k == 0) throw ValidationError("candidate count k must be >= 1");
  const std::string lemma = ToLower(target.lemma);
  const std::string word = ToLower(target.target_word());
  std::unordered_set<std::string> seen = {lemma, word};
  std::vector<std::string> out;

  for (const std::string& c : RelationCandidates(lexicon, target.lemma, target.pos)) {
    if (out.size() == k) return out;
    if (!c.empty() && !ContainsWhitespace(c) && seen.insert(c).second) {
      out.push_back(c);
    }
  }
  if (out.size() == k) return out;

  const EmbeddingVector replacement = PerturbedTargetEmbedding(
      predictor, target.tokens, target.target_index, strategy,
      MixupSynonyms(lexicon, target));
  const VocabularyScores scores =
      predictor.Predict(target.tokens, target.target_index, replacement, {});
  std::vector<std::pair<std::string, double>> ranked(scores.scores.begin(),
                                                     scores.scores.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  for (const auto& [w, score] : ranked) {
    if (out.size() == k) break;
    std::string lower = ToLower(w);
    if (lower.empty() || ContainsWhitespace(lower)) continue;
    if (seen.insert(lower).second) out.push_back(std::move(lower));
  }
  return out;
}

std::vector<ScoredCandidate> ComponentScores(
    const Scorers& scorers, const TargetContext& target,
    const std::vector<std::string>& candidates) {
  if (candidates.empty()) throw ValidationError("no candidates to rank");
  const std::map<std::string, double> proposal = Guarded("proposal", [&] {
    return ProposalScores(scorers.predictor, target.tokens, target.target_index,
                          candidates, scorers.strategy,
                          MixupSynonyms(scorers.lexicon, target));
  });
  std::vector<ScoredCandidate> out;
  out.reserve(candidates.size());
  for (const std::string& c : candidates) {
    ScoredCandidate sc;
    sc.word = c;
    sc.proposal = proposal.at(c);
    sc.gloss = Guarded("gloss", [&] {
      return GlossScore(scorers.lexicon, scorers.gloss_selector,
                        scorers.sentence_encoder, target, c);
    });
    sc.sentence = Guarded("sentence", [&] {
      return SentenceSimilarityScore(scorers.pair_model, target.tokens,
                                     target.target_index, c);
    });
    sc.validation = Guarded("validation", [&] {
      return ValidationScore(scorers.token_encoder, target.tokens,
                             target.target_index, c, scorers.validation)
          .score;
    });
    out.push_back(std::move(sc));
  }
  return out;
}

double CombineScores(const CombinationWeights& w, const ScoredCandidate& c) {
  return w.proposal * c.proposal + w.gloss * c.gloss + w.sentence * c.sentence +
         w.validation * c.validation;
}

void ApplyWeights(const CombinationWeights& weights,
                  std::vector<ScoredCandidate>* candidates) {
  for (ScoredCandidate& c : *candidates) c.final = CombineScores(weights, c);
  std::sort(candidates->begin(), candidates->end(), RankBefore);
}

std::vector<ScoredCandidate> Rank(const CombinationWeights& weights,
                                  const Scorers& scorers,
                                  const TargetContext& target,
                                  const std::vector<std::string>& candidates) {
  weights.Validate();
  std::vector<ScoredCandidate> scored =
      ComponentScores(scorers, target, candidates);
  ApplyWeights(weights, &scored);
  return scored;
}

TuneResult TuneWeightsOnScores(
    const std::vector<std::vector<ScoredCandidate>>& components,
    const std::vector<std::vector<double>>& gold_credit, double grid_step) {
  if (components.empty()) throw ValidationError("trial set is empty");
  if (components.size() != gold_credit.size()) {
    throw ValidationError("component and credit tables differ in size");
  }
  if (!(grid_step > 0.0 && grid_step <= 1.0)) {
    throw ValidationError("grid_step must be in (0,1]");
  }
  const double steps_real = 1.0 / grid_step;
  const auto steps = static_cast<int>(std::lround(steps_real));
  if (std::abs(steps_real - steps) > 1e-9) {
    throw ValidationError("grid_step must divide 1 evenly");
  }

  // Candidates pre-sorted by word so that the first maximum is the
  // lexicographic tie winner.
  std::vector<std::vector<std::size_t>> order(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].size() != gold_credit[i].size()) {
      throw ValidationError("component and credit rows differ in size");
    }
    order[i].resize(components[i].size());
    for (std::size_t j = 0; j < order[i].size(); ++j) order[i][j] = j;
    std::sort(order[i].begin(), order[i].end(), [&](std::size_t a, std::size_t b) {
      return components[i][a].word < components[i][b].word;
    });
  }

  std::vector<double> grid(steps + 1);
  for (int i = 0; i <= steps; ++i) grid[i] = static_cast<double>(i) / steps;

  TuneResult result;
  bool have_best = false;
  for (double wp : grid) {
    for (double wg : grid) {
      for (double ws : grid) {
        for (double wv : grid) {
          const CombinationWeights w{wp, wg, ws, wv};
          double total = 0.0;
          for (std::size_t i = 0; i < components.size(); ++i) {
            double best_final = 0.0;
            std::size_t best_j = components[i].size();
            for (std::size_t j : order[i]) {
              const double f = CombineScores(w, components[i][j]);
              if (best_j == components[i].size() || f > best_final) {
                best_final = f;
                best_j = j;
              }
            }
            if (best_j < components[i].size()) total += gold_credit[i][best_j];
          }
          const double score = 100.0 * total / static_cast<double>(components.size());
          ++result.tuples_evaluated;
          if (!have_best || score > result.best_score) {
            have_best = true;
            result.best_score = score;
            result.weights = w;
          }
        }
      }
    }
  }
  return result;
}

TuneResult TuneWeights(const std::vector<LexSubInstance>& trial,
                       const GoldSet& gold, const Scorers& scorers,
                       double grid_step, std::size_t k) {
  if (trial.empty()) throw ValidationError("trial set is empty");
  std::vector<std::vector<ScoredCandidate>> components;
  std::vector<std::vector<double>> credit;
  for (const LexSubInstance& instance : trial) {
    const auto it = gold.find(instance.ref());
    if (it == gold.end()) {
      throw ValidationError("no gold entry for trial instance " +
                            ToString(instance.ref()));
    }
    std::map<std::string, int> lowered;
    for (const auto& [sub, w] : it->second.weights) lowered[ToLower(sub)] += w;
    const double total = it->second.total_weight();

    const TargetContext target = MakeTargetContext(instance);
    const std::vector<std::string> candidates = GenerateCandidates(
        scorers.lexicon, scorers.predictor, target, k, scorers.strategy);
    std::vector<ScoredCandidate> scored;
    if (!candidates.empty()) scored = ComponentScores(scorers, target, candidates);
    std::vector<double> row;
    for (const ScoredCandidate& c : scored) {
      const auto g = lowered.find(ToLower(c.word));
      row.push_back(g == lowered.end() ? 0.0 : g->second / total);
    }
    components.push_back(std::move(scored));
    credit.push_back(std::move(row));
  }
  return TuneWeightsOnScores(components, credit, grid_step);
}

}  // namespace lexsub
