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

#include "lexsub/augment.h"

#include <algorithm>
#include <fstream>
#include <optional>

#include "lexsub/parallel.h"

namespace lexsub {

bool IsEligibleToken(const std::string& token) {
  if (token.size() < 3) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  });
}

std::vector<double> SamplingDistribution(const std::vector<double>& scores) {
  if (scores.empty()) return {};
  std::vector<double> p = scores;
  const double min = *std::min_element(p.begin(), p.end());
  if (min < 0.0) {
    for (double& x : p) x -= min;
  }
  double total = 0.0;
  for (double x : p) total += x;
  if (!(total > 0.0)) {
    std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(p.size()));
    return p;
  }
  for (double& x : p) x /= total;
  return p;
}

std::size_t SampleIndex(const std::vector<double>& probabilities,
                        UniformSource& random) {
  if (probabilities.empty()) throw ValidationError("nothing to sample from");
  const double u = random.NextUniform();
  double cumulative = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    cumulative += probabilities[i];
    if (u < cumulative) return i;
  }
  // Rounding left the total just under 1; take the last non-zero entry.
  for (std::size_t i = probabilities.size(); i-- > 0;) {
    if (probabilities[i] > 0.0) return i;
  }
  return probabilities.size() - 1;
}

std::vector<std::string> AugmentSentence(const Pipeline& pipeline,
                                         const std::vector<std::string>& tokens,
                                         UniformSource& random) {
  if (tokens.empty()) throw ValidationError("cannot augment an empty sentence");
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (IsEligibleToken(tokens[i])) eligible.push_back(i);
  }
  if (eligible.empty()) return tokens;
  const double u = random.NextUniform();
  const std::size_t position = eligible[std::min(
      eligible.size() - 1,
      static_cast<std::size_t>(u * static_cast<double>(eligible.size())))];

  const TargetContext target{tokens, position, ToLower(tokens[position]),
                             std::nullopt};
  const std::vector<std::string> candidates =
      GenerateCandidates(pipeline.scorers.lexicon, pipeline.scorers.predictor,
                         target, pipeline.k, pipeline.scorers.strategy);
  if (candidates.empty()) return tokens;
  const std::vector<ScoredCandidate> ranked =
      Rank(pipeline.weights, pipeline.scorers, target, candidates);
  std::vector<double> finals;
  finals.reserve(ranked.size());
  for (const ScoredCandidate& c : ranked) finals.push_back(c.final);
  const std::size_t pick = SampleIndex(SamplingDistribution(finals), random);

  std::vector<std::string> out = tokens;
  out[position] = ranked[pick].word;
  return out;
}

std::vector<std::string> AugmentSentence(const Pipeline& pipeline,
                                         const std::vector<std::string>& tokens,
                                         std::uint64_t seed) {
  SeededRandom random(seed);
  return AugmentSentence(pipeline, tokens, random);
}

std::vector<LabeledText> ReadLabeledText(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::vector<LabeledText> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size() ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": expected 'label<TAB>text'");
    }
    rows.push_back({line.substr(0, tab), line.substr(tab + 1)});
    if (SplitTokens(rows.back().text).empty()) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": empty text");
    }
  }
  return rows;
}

AugmentStats AugmentDataset(const Pipeline& pipeline,
                            const std::filesystem::path& input,
                            const std::filesystem::path& output,
                            const AugmentOptions& options) {
  const std::vector<LabeledText> rows = ReadLabeledText(input);
  const std::size_t per = options.per_example;

  struct Slot {
    std::optional<std::string> text;
    std::string error;
  };
  std::vector<Slot> slots(rows.size() * per);
  ParallelFor(slots.size(), options.jobs, [&](std::size_t s) {
    const std::size_t line = s / per;
    const std::size_t variant = s % per;
    try {
      const std::vector<std::string> augmented =
          AugmentSentence(pipeline, SplitTokens(rows[line].text),
                          MixSeed(options.seed, line, variant));
      slots[s].text = JoinTokens(augmented);
    } catch (const std::exception& e) {
      slots[s].error = e.what();
    }
  });

  AugmentStats stats;
  stats.input_lines = rows.size();
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (!slots[s].text) {
      stats.failures.push_back("line " + std::to_string(s / per + 1) + ": " +
                               slots[s].error);
    }
  }
  if (options.strict && !stats.failures.empty()) {
    throw Error("augmentation failed: " + stats.failures.front());
  }

  std::ofstream out(output, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + output.string());
  for (std::size_t line = 0; line < rows.size(); ++line) {
    out << rows[line].label << '\t' << rows[line].text << '\n';
    for (std::size_t v = 0; v < per; ++v) {
      const Slot& slot = slots[line * per + v];
      if (!slot.text) continue;
      out << rows[line].label << '\t' << *slot.text << '\n';
      ++stats.written_variants;
    }
  }
  if (!out) throw ValidationError("write failed: " + output.string());
  return stats;
}

}  // namespace lexsub
