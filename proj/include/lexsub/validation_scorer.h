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

#ifndef LEXSUB_VALIDATION_SCORER_H_
#define LEXSUB_VALIDATION_SCORER_H_

#include <string>
#include <vector>

#include "lexsub/backends.h"

namespace lexsub {

struct ValidationBreakdown {
  std::vector<double> per_token_cosines;
  std::vector<double> weights;  // sums to 1
  double score = 0.0;
};

struct ValidationOptions {
  // Whether the target position itself carries weight.
  bool include_target = true;
};

// Attention-weighted mean of per-token cosines between the contextual vectors
// of the original and the substituted sentence. Weights are the attention
// row of the target in the substituted sentence, renormalized to sum to 1.
// Throws ValidationError("degenerate attention") when that row sums to 0.
ValidationBreakdown ValidationScore(const ContextualTokenEncoder& encoder,
                                    std::span<const std::string> tokens,
                                    std::size_t target_index,
                                    const std::string& candidate,
                                    const ValidationOptions& options = {});

}  // namespace lexsub

#endif  // LEXSUB_VALIDATION_SCORER_H_
