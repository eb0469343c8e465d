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

// Readers and writers for the benchmark file formats.
//
// Instance file, one per line:
//   key<TAB>id<TAB>target_index<TAB>space-tokenized sentence
// Gold file (SemEval-2007 scorer format):
//   key id :: sub1 w1;sub2 w2;
// Prediction files:
//   key id :: g1;g2;...     (best)
//   key id ::: g1;g2;...    (oot, at most 10 guesses)

#ifndef LEXSUB_DATASET_IO_H_
#define LEXSUB_DATASET_IO_H_

#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lexsub/types.h"

namespace lexsub {

// Identifies one evaluation item across files.
struct InstanceRef {
  std::string key;
  std::int64_t id = 0;

  friend auto operator<=>(const InstanceRef&, const InstanceRef&) = default;
  friend bool operator==(const InstanceRef&, const InstanceRef&) = default;
};

std::string ToString(const InstanceRef& ref);

struct LexSubInstance {
  std::string key;  // "lemma.pos"
  std::int64_t instance_id = 0;
  std::size_t target_index = 0;
  std::vector<std::string> tokens;

  InstanceRef ref() const { return {key, instance_id}; }
  std::string lemma() const;
  Pos pos() const;
  const std::string& target_word() const { return tokens[target_index]; }
};

// Throws ValidationError if the instance breaks a field invariant.
void ValidateInstance(const LexSubInstance& instance);

// Splits "lemma.pos"; throws ValidationError unless there is exactly one '.'
// and the tag is one of n, v, a, r.
std::pair<std::string, Pos> SplitKey(const std::string& key);

struct GoldAnnotations {
  std::string key;
  std::int64_t instance_id = 0;
  // Substitute -> annotator count. Multi-word substitutes keep their spaces.
  std::map<std::string, int> weights;

  int total_weight() const;
};

using GoldSet = std::map<InstanceRef, GoldAnnotations>;

struct PredictionRecord {
  std::string key;
  std::int64_t instance_id = 0;
  std::vector<std::string> guesses;

  friend bool operator==(const PredictionRecord&,
                         const PredictionRecord&) = default;
};

enum class PredictionMode { kBest, kOot };

inline constexpr std::size_t kOotMaxGuesses = 10;

std::vector<LexSubInstance> ParseInstances(const std::filesystem::path& path);
std::vector<LexSubInstance> ParseInstances(std::istream& in,
                                           const std::string& source_name);

GoldSet ParseGold(const std::filesystem::path& path);
GoldSet ParseGold(std::istream& in, const std::string& source_name);

void WritePredictions(const std::vector<PredictionRecord>& records,
                      PredictionMode mode, const std::filesystem::path& path);
void WritePredictions(const std::vector<PredictionRecord>& records,
                      PredictionMode mode, std::ostream& out);

// Reads either separator. `mode`, when non-null, receives the separator kind
// of the last parsed line (kBest for an empty file).
std::vector<PredictionRecord> ParsePredictions(
    const std::filesystem::path& path, PredictionMode* mode = nullptr);
std::vector<PredictionRecord> ParsePredictions(std::istream& in,
                                               const std::string& source_name,
                                               PredictionMode* mode = nullptr);

// Candidate pools for the ranking task: the union of single-word gold
// substitutes per key. Keys left empty are dropped.
std::map<std::string, std::set<std::string>> BuildCandidatePools(
    const GoldSet& gold);

}  // namespace lexsub

#endif  // LEXSUB_DATASET_IO_H_
