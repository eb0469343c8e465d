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

#include "lexsub/validation_scorer.h"

#include "lexsub/gloss_scorer.h"
#include "lexsub/simd/kernels.h"

namespace lexsub {

ValidationBreakdown ValidationScore(const ContextualTokenEncoder& encoder,
                                    std::span<const std::string> tokens,
                                    std::size_t target_index,
                                    const std::string& candidate,
                                    const ValidationOptions& options) {
  if (tokens.empty()) throw ValidationError("validation score needs tokens");
  if (candidate.empty() || ContainsWhitespace(candidate)) {
    throw ValidationError("validation score needs a single-word candidate");
  }
  const std::vector<std::string> substituted =
      Substitute(tokens, target_index, candidate);
  const TokenAnalysis original = encoder.Analyze(tokens);
  const TokenAnalysis updated = encoder.Analyze(substituted);
  ValidateAnalysis(original, tokens.size());
  ValidateAnalysis(updated, tokens.size());

  const std::size_t n = tokens.size();
  ValidationBreakdown out;
  out.per_token_cosines.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // An unchanged representation counts as fully similar, including
    // letterless tokens whose vector is zero.
    const EmbeddingVector& a = original.token_vectors[i];
    const EmbeddingVector& b = updated.token_vectors[i];
    out.per_token_cosines.push_back(a == b ? 1.0 : Cosine(a, b));
  }

  const std::span<const double> row = updated.attention_from(target_index);
  out.weights.assign(row.begin(), row.end());
  if (!options.include_target) out.weights[target_index] = 0.0;
  double total = 0.0;
  for (double w : out.weights) total += w;
  if (!(total > 0.0)) throw ValidationError("degenerate attention");
  for (double& w : out.weights) w /= total;

  out.score = simd::Dot(out.weights, out.per_token_cosines);
  return out;
}

}  // namespace lexsub
