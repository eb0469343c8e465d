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

// Substitution-based data augmentation for text classification: one word
// per sentence is replaced by a substitute sampled in proportion to its final
// ranking score.

#ifndef LEXSUB_AUGMENT_H_
#define LEXSUB_AUGMENT_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lexsub/random.h"
#include "lexsub/ranking.h"

namespace lexsub {

struct Pipeline {
  Scorers scorers;
  CombinationWeights weights;
  std::size_t k = kDefaultCandidateCount;
};

struct LabeledText {
  std::string label;
  std::string text;
};

// Tokens that may be replaced: at least three characters, letters only.
bool IsEligibleToken(const std::string& token);

// Sampling distribution over final scores: shifted by the minimum when any
// score is negative, then divided by the sum. An all-zero vector becomes
// uniform.
std::vector<double> SamplingDistribution(const std::vector<double>& scores);

// Inverse-CDF draw from `probabilities` using one uniform variate.
std::size_t SampleIndex(const std::vector<double>& probabilities,
                        UniformSource& random);

// Picks an eligible position uniformly, ranks generated candidates for it and
// substitutes one sampled candidate. Returns `tokens` unchanged when nothing
// is eligible or no candidates exist. Scorer errors propagate.
std::vector<std::string> AugmentSentence(const Pipeline& pipeline,
                                         const std::vector<std::string>& tokens,
                                         UniformSource& random);
std::vector<std::string> AugmentSentence(const Pipeline& pipeline,
                                         const std::vector<std::string>& tokens,
                                         std::uint64_t seed);

struct AugmentOptions {
  std::size_t per_example = 1;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  // Abort on the first failed variant instead of skipping it.
  bool strict = false;
};

struct AugmentStats {
  std::size_t input_lines = 0;
  std::size_t written_variants = 0;
  std::vector<std::string> failures;  // "line N: message"
};

// `label<TAB>text` lines. Throws ParseError naming the line for malformed
// input.
std::vector<LabeledText> ReadLabeledText(const std::filesystem::path& path);

// Writes every input line followed by its augmented variants. Variant j of
// line i is seeded from (seed, i, j), so output does not depend on `jobs`.
AugmentStats AugmentDataset(const Pipeline& pipeline,
                            const std::filesystem::path& input,
                            const std::filesystem::path& output,
                            const AugmentOptions& options);

}  // namespace lexsub

#endif  // LEXSUB_AUGMENT_H_
