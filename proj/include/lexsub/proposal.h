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

// Proposal score: the predictor's candidate-restricted softmax when the
// target slot's input embedding has been perturbed.
//
// Strategies for the target embedding:
//   mixup     lambda * target + (1 - lambda) * mean(synonym embeddings)
//   gaussian  target + e, e_i ~ N(mu, sigma_i^2)
//   dropout   each component zeroed with probability p
//   mask      zero vector
//   keep      target unchanged

#ifndef LEXSUB_PROPOSAL_H_
#define LEXSUB_PROPOSAL_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lexsub/backends.h"

namespace lexsub {

inline constexpr double kDefaultMixupLambda = 0.25;
inline constexpr double kDefaultNoiseMean = 0.0;
inline constexpr double kDefaultNoiseStddev = 0.01;

struct GaussianNoise {
  double mu = kDefaultNoiseMean;
  double sigma = kDefaultNoiseStddev;
  // Optional per-component standard deviations. When non-empty its length
  // must equal the embedding dimension and it replaces `sigma`.
  std::vector<double> sigma_per_component;
  std::uint64_t seed = 0;
};

struct MixupStrategy {
  double lambda = kDefaultMixupLambda;
  // Used when the target has no synonyms.
  GaussianNoise fallback;
};

struct DropoutStrategy {
  double p = 0.0;
  std::uint64_t seed = 0;
};

struct MaskStrategy {};
struct KeepStrategy {};

using PerturbationStrategy = std::variant<MixupStrategy, GaussianNoise,
                                          DropoutStrategy, MaskStrategy,
                                          KeepStrategy>;

std::string_view StrategyName(const PerturbationStrategy& strategy);

// Throws ValidationError for out-of-range parameters.
void ValidateStrategy(const PerturbationStrategy& strategy);

// Applies `strategy` to `target`. Mixup requires a non-empty `synonyms`; use
// PerturbedTargetEmbedding() for the Gaussian fallback.
EmbeddingVector PerturbEmbedding(const PerturbationStrategy& strategy,
                                 const EmbeddingVector& target,
                                 const std::vector<EmbeddingVector>& synonyms);

// Input embedding of tokens[target_index] under `strategy`, embedding each
// synonym with the predictor. Mixup with no synonyms switches to its Gaussian
// fallback.
EmbeddingVector PerturbedTargetEmbedding(const TargetWordPredictor& predictor,
                                         std::span<const std::string> tokens,
                                         std::size_t target_index,
                                         const PerturbationStrategy& strategy,
                                         const std::set<std::string>& synonyms);

// Softmax of the predictor scores restricted to `candidates` (unique words).
std::map<std::string, double> ProposalScores(
    const TargetWordPredictor& predictor, std::span<const std::string> tokens,
    std::size_t target_index, std::span<const std::string> candidates,
    const PerturbationStrategy& strategy,
    const std::set<std::string>& synonyms);

// Same, from an already computed score vector.
std::map<std::string, double> CandidateSoftmax(
    const VocabularyScores& scores, std::span<const std::string> candidates);

}  // namespace lexsub

#endif  // LEXSUB_PROPOSAL_H_
