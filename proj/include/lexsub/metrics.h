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

// Lexical substitution evaluation measures (SemEval-2007 task 10 best, oot
// and their mode variants, precision at 1) and generalized average precision
// for the candidate ranking task.
//
// Gold and guesses are compared case-insensitively; gold entries differing
// only in case are merged. Unless `coverage_only` is set, gold instances
// without a prediction score 0 and stay in the denominators.

#ifndef LEXSUB_METRICS_H_
#define LEXSUB_METRICS_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexsub/dataset_io.h"

namespace lexsub {

struct MetricOptions {
  // Average over predicted instances only.
  bool coverage_only = false;
};

struct BestScores {
  double best = 0.0;       // percent
  double best_mode = 0.0;  // percent
  std::size_t instances = 0;
  std::size_t mode_instances = 0;
};

struct OotScores {
  double oot = 0.0;       // percent
  double oot_mode = 0.0;  // percent
  std::size_t instances = 0;
  std::size_t mode_instances = 0;
};

// Unique maximum-weight substitute (lowercased), if any.
std::optional<std::string> GoldMode(const GoldAnnotations& gold);

// Item score sum(H(g)) / (|G| * total). Throws ValidationError when a
// prediction has no gold entry, no guesses, or duplicate guesses.
BestScores ComputeBestScores(const std::vector<PredictionRecord>& predictions,
                             const GoldSet& gold,
                             const MetricOptions& options = {});

// Item score sum(H(g)) / total. Also throws on more than 10 guesses.
OotScores ComputeOotScores(const std::vector<PredictionRecord>& predictions,
                           const GoldSet& gold,
                           const MetricOptions& options = {});

// Percent of instances whose first guess is a gold substitute. Empty
// rankings count as misses.
double PrecisionAt1(const std::vector<PredictionRecord>& rankings,
                    const GoldSet& gold, const MetricOptions& options = {});

// Generalized average precision of `ranked` against positive gold weights, in
// [0, 1]. Non-gold entries still advance the rank. Throws ValidationError on
// empty gold, non-positive weights, or duplicates in `ranked`.
double Gap(std::span<const std::string> ranked,
           const std::map<std::string, double>& gold_weights);

enum class EvaluationMode { kGeneration, kRanking };

struct EvaluationReport {
  EvaluationMode mode = EvaluationMode::kGeneration;
  // Generation mode.
  double best = 0.0;
  double best_mode = 0.0;
  double oot = 0.0;
  double oot_mode = 0.0;
  double p_at_1 = 0.0;
  std::size_t mode_instances = 0;
  // Ranking mode, in [0, 1].
  double gap = 0.0;

  std::size_t instances = 0;
  // Per-instance problems; the offending instances are left out.
  std::vector<std::string> errors;
};

// Generation mode scores the first guess for best/best-mode/P@1 and the first
// ten for oot. Ranking mode drops multi-word gold substitutes, discards gold
// instances left empty, and averages GAP over the rest.
EvaluationReport EvaluateDataset(const std::vector<PredictionRecord>& rankings,
                                 const GoldSet& gold, EvaluationMode mode,
                                 const MetricOptions& options = {});

// `measure<TAB>value` lines.
void WriteReportText(const EvaluationReport& report, std::ostream& out);
// Single JSON object.
void WriteReportJson(const EvaluationReport& report, std::ostream& out);

}  // namespace lexsub

#endif  // LEXSUB_METRICS_H_
