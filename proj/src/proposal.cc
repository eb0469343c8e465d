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

#include "lexsub/proposal.h"

#include <cmath>
#include <unordered_set>

#include "lexsub/random.h"
#include "lexsub/simd/kernels.h"

namespace lexsub {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool InUnitInterval(double x) { return x >= 0.0 && x <= 1.0; }

void ValidateNoise(const GaussianNoise& noise) {
  if (!std::isfinite(noise.mu)) throw ValidationError("gaussian mu must be finite");
  if (!(noise.sigma >= 0.0) || !std::isfinite(noise.sigma)) {
    throw ValidationError("gaussian sigma must be >= 0");
  }
  for (double s : noise.sigma_per_component) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
      throw ValidationError("gaussian sigma components must be >= 0");
    }
  }
}

EmbeddingVector AddNoise(const GaussianNoise& noise,
                         const EmbeddingVector& target) {
  if (!noise.sigma_per_component.empty() &&
      noise.sigma_per_component.size() != target.dim()) {
    throw ValidationError("sigma_per_component has " +
                          std::to_string(noise.sigma_per_component.size()) +
                          " entries for a " + std::to_string(target.dim()) +
                          "-dim embedding");
  }
  SeededRandom rng(noise.seed);
  std::vector<double> out(target.values().begin(), target.values().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double sigma = noise.sigma_per_component.empty()
                             ? noise.sigma
                             : noise.sigma_per_component[i];
    const double e = rng.NextNormal(noise.mu, sigma);
    // x + 0 would turn -0.0 into +0.0.
    if (e != 0.0) out[i] += e;
  }
  return EmbeddingVector(std::move(out));
}

}  // namespace

std::string_view StrategyName(const PerturbationStrategy& strategy) {
  return std::visit(Overloaded{
                        [](const MixupStrategy&) { return "mixup"; },
                        [](const GaussianNoise&) { return "gaussian"; },
                        [](const DropoutStrategy&) { return "dropout"; },
                        [](const MaskStrategy&) { return "mask"; },
                        [](const KeepStrategy&) { return "keep"; },
                    },
                    strategy);
}

void ValidateStrategy(const PerturbationStrategy& strategy) {
  std::visit(Overloaded{
                 [](const MixupStrategy& s) {
                   if (!InUnitInterval(s.lambda)) {
                     throw ValidationError("mixup lambda must be in [0,1]");
                   }
                   ValidateNoise(s.fallback);
                 },
                 [](const GaussianNoise& s) { ValidateNoise(s); },
                 [](const DropoutStrategy& s) {
                   if (!InUnitInterval(s.p)) {
                     throw ValidationError("dropout p must be in [0,1]");
                   }
                 },
                 [](const MaskStrategy&) {},
                 [](const KeepStrategy&) {},
             },
             strategy);
}

EmbeddingVector PerturbEmbedding(const PerturbationStrategy& strategy,
                                 const EmbeddingVector& target,
                                 const std::vector<EmbeddingVector>& synonyms) {
  ValidateStrategy(strategy);
  for (const EmbeddingVector& s : synonyms) {
    if (s.dim() != target.dim()) {
      throw ValidationError("synonym embedding dimension " +
                            std::to_string(s.dim()) + " != target dimension " +
                            std::to_string(target.dim()));
    }
  }
  return std::visit(
      Overloaded{
          [&](const MixupStrategy& s) -> EmbeddingVector {
            if (synonyms.empty()) {
              throw ValidationError("mixup needs at least one synonym");
            }
            if (s.lambda == 1.0) return target;
            std::vector<double> mean(target.dim(), 0.0);
            for (const EmbeddingVector& syn : synonyms) {
              simd::Accumulate(syn.values(), mean);
            }
            simd::Scale(1.0 / static_cast<double>(synonyms.size()), mean);
            std::vector<double> out(target.dim());
            simd::Axpby(s.lambda, target.values(), 1.0 - s.lambda, mean, out);
            return EmbeddingVector(std::move(out));
          },
          [&](const GaussianNoise& s) { return AddNoise(s, target); },
          [&](const DropoutStrategy& s) -> EmbeddingVector {
            SeededRandom rng(s.seed);
            std::vector<double> out(target.values().begin(),
                                    target.values().end());
            for (double& x : out) {
              if (rng.NextBernoulli(s.p)) x = 0.0;
            }
            return EmbeddingVector(std::move(out));
          },
          [&](const MaskStrategy&) { return EmbeddingVector(target.dim()); },
          [&](const KeepStrategy&) { return target; },
      },
      strategy);
}

EmbeddingVector PerturbedTargetEmbedding(const TargetWordPredictor& predictor,
                                         std::span<const std::string> tokens,
                                         std::size_t target_index,
                                         const PerturbationStrategy& strategy,
                                         const std::set<std::string>& synonyms) {
  if (target_index >= tokens.size()) {
    throw ValidationError("target_index out of range");
  }
  const EmbeddingVector target = predictor.InputEmbedding(tokens[target_index]);
  if (const auto* mixup = std::get_if<MixupStrategy>(&strategy)) {
    if (synonyms.empty()) {
      return PerturbEmbedding(mixup->fallback, target, {});
    }
    std::vector<EmbeddingVector> synonym_embeddings;
    synonym_embeddings.reserve(synonyms.size());
    for (const std::string& s : synonyms) {
      synonym_embeddings.push_back(predictor.InputEmbedding(s));
    }
    return PerturbEmbedding(strategy, target, synonym_embeddings);
  }
  return PerturbEmbedding(strategy, target, {});
}

std::map<std::string, double> CandidateSoftmax(
    const VocabularyScores& scores, std::span<const std::string> candidates) {
  if (candidates.empty()) {
    throw ValidationError("proposal scores need at least one candidate");
  }
  std::unordered_set<std::string> seen;
  std::vector<double> logits;
  logits.reserve(candidates.size());
  for (const std::string& c : candidates) {
    if (!seen.insert(c).second) {
      throw ValidationError("duplicate candidate '" + c + "'");
    }
    const double y = scores.at(c);
    if (!std::isfinite(y)) {
      throw BackendError("non-finite predictor score for '" + c + "'");
    }
    logits.push_back(y);
  }
  simd::SoftmaxInPlace(logits);
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    out.emplace(candidates[i], logits[i]);
  }
  return out;
}

std::map<std::string, double> ProposalScores(
    const TargetWordPredictor& predictor, std::span<const std::string> tokens,
    std::size_t target_index, std::span<const std::string> candidates,
    const PerturbationStrategy& strategy,
    const std::set<std::string>& synonyms) {
  if (candidates.empty()) {
    throw ValidationError("proposal scores need at least one candidate");
  }
  const EmbeddingVector replacement = PerturbedTargetEmbedding(
      predictor, tokens, target_index, strategy, synonyms);
  const VocabularyScores scores =
      predictor.Predict(tokens, target_index, replacement, candidates);
  return CandidateSoftmax(scores, candidates);
}

}  // namespace lexsub
