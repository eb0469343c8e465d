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

#include "lexsub/dataset_io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

namespace lexsub {
namespace {

std::string_view Trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string Where(const std::string& source, std::size_t line_no) {
  return source + ":" + std::to_string(line_no) + ": ";
}

template <typename Int>
bool ParseInt(std::string_view text, Int* out) {
  text = Trim(text);
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), *out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

std::vector<std::string_view> SplitOn(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = s.find(sep, start);
    if (end == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, end - start));
    start = end + 1;
  }
}

// Parses the "key id" head shared by gold and prediction lines.
InstanceRef ParseHead(std::string_view head, const std::string& where) {
  const std::vector<std::string> fields = SplitTokens(Trim(head));
  if (fields.size() != 2) {
    throw ParseError(where + "expected 'key id' before the separator");
  }
  InstanceRef ref{fields[0], 0};
  if (!ParseInt(fields[1], &ref.id) || ref.id <= 0) {
    throw ParseError(where + "instance id must be a positive integer, got '" +
                     fields[1] + "'");
  }
  try {
    SplitKey(ref.key);
  } catch (const ValidationError& e) {
    throw ParseError(where + e.what());
  }
  return ref;
}

std::ifstream OpenInput(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

}  // namespace

std::string ToString(const InstanceRef& ref) {
  return ref.key + " " + std::to_string(ref.id);
}

std::pair<std::string, Pos> SplitKey(const std::string& key) {
  const std::size_t dot = key.find('.');
  if (dot == std::string::npos || key.find('.', dot + 1) != std::string::npos) {
    throw ValidationError("key '" + key + "' must contain exactly one '.'");
  }
  const std::string lemma = key.substr(0, dot);
  if (lemma.empty()) throw ValidationError("key '" + key + "' has no lemma");
  const std::optional<Pos> pos = ParsePosTag(std::string_view(key).substr(dot + 1));
  if (!pos) {
    throw ValidationError("key '" + key + "' has a pos tag outside {n,v,a,r}");
  }
  return {lemma, *pos};
}

std::string LexSubInstance::lemma() const { return SplitKey(key).first; }
Pos LexSubInstance::pos() const { return SplitKey(key).second; }

void ValidateInstance(const LexSubInstance& instance) {
  SplitKey(instance.key);
  if (instance.instance_id <= 0) {
    throw ValidationError("instance id must be positive");
  }
  if (instance.tokens.empty()) throw ValidationError("instance has no tokens");
  for (const std::string& t : instance.tokens) {
    if (t.empty()) throw ValidationError("instance has an empty token");
  }
  if (instance.target_index >= instance.tokens.size()) {
    throw ValidationError("target_index out of range");
  }
}

int GoldAnnotations::total_weight() const {
  int total = 0;
  for (const auto& [sub, w] : weights) total += w;
  return total;
}

std::vector<LexSubInstance> ParseInstances(const std::filesystem::path& path) {
  std::ifstream in = OpenInput(path);
  return ParseInstances(in, path.string());
}

std::vector<LexSubInstance> ParseInstances(std::istream& in,
                                           const std::string& source_name) {
  std::vector<LexSubInstance> instances;
  std::set<InstanceRef> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const std::string where = Where(source_name, line_no);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string_view> fields = SplitOn(line, '\t');
    if (fields.size() != 4) {
      throw ParseError(where + "expected 4 tab-separated fields, got " +
                       std::to_string(fields.size()));
    }
    LexSubInstance instance;
    instance.key = std::string(Trim(fields[0]));
    if (!ParseInt(fields[1], &instance.instance_id) ||
        instance.instance_id <= 0) {
      throw ParseError(where + "instance id must be a positive integer");
    }
    if (!ParseInt(fields[2], &instance.target_index)) {
      throw ParseError(where + "target_index must be a non-negative integer");
    }
    instance.tokens = SplitTokens(fields[3]);
    try {
      ValidateInstance(instance);
    } catch (const ValidationError& e) {
      throw ValidationError(where + e.what());
    }
    if (!seen.insert(instance.ref()).second) {
      throw ValidationError(where + "duplicate instance " +
                            ToString(instance.ref()));
    }
    instances.push_back(std::move(instance));
  }
  return instances;
}

GoldSet ParseGold(const std::filesystem::path& path) {
  std::ifstream in = OpenInput(path);
  return ParseGold(in, path.string());
}

GoldSet ParseGold(std::istream& in, const std::string& source_name) {
  GoldSet gold;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const std::string where = Where(source_name, line_no);
    const std::size_t sep = line.find("::");
    if (sep == std::string::npos) throw ParseError(where + "missing '::'");
    const InstanceRef ref = ParseHead(std::string_view(line).substr(0, sep), where);

    GoldAnnotations entry{ref.key, ref.id, {}};
    for (std::string_view item :
         SplitOn(std::string_view(line).substr(sep + 2), ';')) {
      item = Trim(item);
      if (item.empty()) continue;
      const std::size_t space = item.find_last_of(' ');
      if (space == std::string_view::npos) {
        throw ParseError(where + "substitute '" + std::string(item) +
                         "' has no weight");
      }
      const std::string_view sub = Trim(item.substr(0, space));
      int weight = 0;
      if (!ParseInt(item.substr(space + 1), &weight) || weight < 1) {
        throw ParseError(where + "weight of '" + std::string(sub) +
                         "' must be a positive integer");
      }
      if (sub.empty()) throw ParseError(where + "empty substitute");
      entry.weights[std::string(sub)] += weight;
    }
    if (entry.weights.empty()) {
      throw ValidationError(where + "no gold substitutes for " + ToString(ref));
    }
    if (!gold.emplace(ref, std::move(entry)).second) {
      throw ValidationError(where + "duplicate gold entry for " + ToString(ref));
    }
  }
  return gold;
}

void WritePredictions(const std::vector<PredictionRecord>& records,
                      PredictionMode mode, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  WritePredictions(records, mode, out);
  if (!out) throw ValidationError("write failed: " + path.string());
}

void WritePredictions(const std::vector<PredictionRecord>& records,
                      PredictionMode mode, std::ostream& out) {
  // Validate everything before emitting anything.
  for (const PredictionRecord& r : records) {
    if (r.guesses.empty()) {
      throw ValidationError("prediction for " + r.key + " " +
                            std::to_string(r.instance_id) + " has no guesses");
    }
    if (mode == PredictionMode::kOot && r.guesses.size() > kOotMaxGuesses) {
      throw ValidationError("oot prediction for " + r.key + " " +
                            std::to_string(r.instance_id) + " has " +
                            std::to_string(r.guesses.size()) +
                            " guesses (max 10)");
    }
  }
  const char* separator = mode == PredictionMode::kBest ? " :: " : " ::: ";
  for (const PredictionRecord& r : records) {
    out << r.key << ' ' << r.instance_id << separator;
    for (std::size_t i = 0; i < r.guesses.size(); ++i) {
      if (i > 0) out << ';';
      out << r.guesses[i];
    }
    out << '\n';
  }
}

std::vector<PredictionRecord> ParsePredictions(const std::filesystem::path& path,
                                               PredictionMode* mode) {
  std::ifstream in = OpenInput(path);
  return ParsePredictions(in, path.string(), mode);
}

std::vector<PredictionRecord> ParsePredictions(std::istream& in,
                                               const std::string& source_name,
                                               PredictionMode* mode) {
  std::vector<PredictionRecord> records;
  if (mode != nullptr) *mode = PredictionMode::kBest;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const std::string where = Where(source_name, line_no);
    const std::size_t sep = line.find("::");
    if (sep == std::string::npos) throw ParseError(where + "missing '::'");
    std::size_t body = sep + 2;
    PredictionMode line_mode = PredictionMode::kBest;
    if (body < line.size() && line[body] == ':') {
      line_mode = PredictionMode::kOot;
      ++body;
    }
    if (mode != nullptr) *mode = line_mode;
    const InstanceRef ref = ParseHead(std::string_view(line).substr(0, sep), where);
    PredictionRecord record{ref.key, ref.id, {}};
    std::unordered_set<std::string> seen;
    for (std::string_view item :
         SplitOn(std::string_view(line).substr(body), ';')) {
      item = Trim(item);
      if (item.empty()) continue;
      if (!seen.emplace(item).second) {
        throw ValidationError(where + "duplicate guess '" + std::string(item) +
                              "'");
      }
      record.guesses.emplace_back(item);
    }
    if (record.guesses.empty()) throw ParseError(where + "no guesses");
    records.push_back(std::move(record));
  }
  return records;
}

std::map<std::string, std::set<std::string>> BuildCandidatePools(
    const GoldSet& gold) {
  std::map<std::string, std::set<std::string>> pools;
  for (const auto& [ref, entry] : gold) {
    std::set<std::string>& pool = pools[ref.key];
    for (const auto& [sub, weight] : entry.weights) {
      if (!ContainsWhitespace(sub)) pool.insert(sub);
    }
  }
  std::erase_if(pools, [](const auto& kv) { return kv.second.empty(); });
  return pools;
}

}  // namespace lexsub
