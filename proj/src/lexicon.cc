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

#include "lexsub/lexicon.h"

#include <algorithm>
#include <fstream>
#include <istream>

namespace lexsub {
namespace {

std::vector<std::string> SplitFields(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(sep, start);
    fields.push_back(line.substr(start, end - start));
    if (end == std::string::npos) return fields;
    start = end + 1;
  }
}

std::string Strip(std::string s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && s[i] == ' ') ++i;
  return s.substr(i);
}

std::set<std::string> ParseIdList(const std::string& field) {
  std::set<std::string> ids;
  if (field.empty()) return ids;
  for (std::string id : SplitFields(field, ',')) {
    id = Strip(std::move(id));
    if (!id.empty()) ids.insert(std::move(id));
  }
  return ids;
}

const std::vector<std::string>& EmptyIds() {
  static const std::vector<std::string> empty;
  return empty;
}

}  // namespace

void Lexicon::Add(SynsetRecord record) {
  if (record.lemmas.empty()) {
    throw ValidationError("synset " + record.synset_id + " has no lemmas");
  }
  if (record.gloss.empty()) {
    throw ValidationError("synset " + record.synset_id + " has no gloss");
  }
  if (records_.contains(record.synset_id)) {
    throw ValidationError("duplicate synset id " + record.synset_id);
  }
  for (const std::string& lemma : record.lemmas) {
    std::vector<std::string>& ids = index_[{ToLower(lemma), record.pos}];
    if (std::find(ids.begin(), ids.end(), record.synset_id) == ids.end()) {
      ids.push_back(record.synset_id);
    }
  }
  std::string id = record.synset_id;
  records_.emplace(std::move(id), std::move(record));
}

void Lexicon::Validate() const {
  std::vector<std::string> dangling;
  for (const auto& [id, record] : records_) {
    for (const auto* ids : {&record.hypernym_ids, &record.hyponym_ids}) {
      for (const std::string& rel : *ids) {
        if (!records_.contains(rel)) dangling.push_back(rel);
      }
    }
  }
  if (!dangling.empty()) {
    std::string msg = "dangling relation id(s):";
    for (const std::string& id : dangling) msg += " " + id;
    throw ValidationError(msg);
  }
}

const SynsetRecord* Lexicon::Find(const std::string& synset_id) const {
  const auto it = records_.find(synset_id);
  return it == records_.end() ? nullptr : &it->second;
}

const std::vector<std::string>& Lexicon::SynsetIds(const std::string& word,
                                                   Pos pos) const {
  const auto it = index_.find({ToLower(word), pos});
  return it == index_.end() ? EmptyIds() : it->second;
}

std::vector<std::string> Lexicon::SynsetIdsWithFallback(
    const std::string& word, std::optional<Pos> pos) const {
  if (pos) {
    const std::vector<std::string>& ids = SynsetIds(word, *pos);
    if (!ids.empty()) return ids;
  }
  std::vector<std::string> all;
  for (Pos p : kAllPos) {
    for (const std::string& id : SynsetIds(word, p)) {
      if (std::find(all.begin(), all.end(), id) == all.end()) all.push_back(id);
    }
  }
  return all;
}

Lexicon LoadLexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return LoadLexicon(in, path.string());
}

Lexicon LoadLexicon(std::istream& in, const std::string& source_name) {
  Lexicon lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = source_name + ":" + std::to_string(line_no) + ": ";
    std::vector<std::string> fields = SplitFields(line, '\t');
    // Trailing empty relation fields may be omitted.
    while (fields.size() < 6 && fields.size() >= 4) fields.emplace_back();
    if (fields.size() != 6) {
      throw ParseError(where + "expected 6 tab-separated fields");
    }
    SynsetRecord record;
    record.synset_id = Strip(fields[0]);
    if (record.synset_id.empty()) throw ParseError(where + "empty synset id");
    const std::optional<Pos> pos = ParsePosTag(Strip(fields[1]));
    if (!pos) throw ParseError(where + "pos must be one of n, v, a, r");
    record.pos = *pos;
    record.gloss = Strip(fields[2]);
    for (std::string lemma : SplitFields(fields[3], ',')) {
      std::replace(lemma.begin(), lemma.end(), '_', ' ');
      lemma = Strip(std::move(lemma));
      if (!lemma.empty()) record.lemmas.push_back(std::move(lemma));
    }
    record.hypernym_ids = ParseIdList(fields[4]);
    record.hyponym_ids = ParseIdList(fields[5]);
    try {
      lexicon.Add(std::move(record));
    } catch (const ValidationError& e) {
      throw ValidationError(where + e.what());
    }
  }
  lexicon.Validate();
  return lexicon;
}

std::set<std::string> AllSynonyms(const Lexicon& lexicon,
                                  const std::string& word) {
  const std::string self = ToLower(word);
  std::set<std::string> out;
  for (Pos pos : kAllPos) {
    for (const std::string& id : lexicon.SynsetIds(word, pos)) {
      for (const std::string& lemma : lexicon.Find(id)->lemmas) {
        std::string lower = ToLower(lemma);
        if (lower != self) out.insert(std::move(lower));
      }
    }
  }
  return out;
}

std::set<std::string> RelationCandidates(const Lexicon& lexicon,
                                         const std::string& lemma,
                                         std::optional<Pos> pos) {
  const std::string self = ToLower(lemma);
  std::set<std::string> out;
  const auto add_lemmas = [&](const SynsetRecord& record) {
    for (const std::string& l : record.lemmas) {
      std::string lower = ToLower(l);
      if (lower != self && !ContainsWhitespace(lower)) out.insert(std::move(lower));
    }
  };
  for (const std::string& id : lexicon.SynsetIdsWithFallback(lemma, pos)) {
    const SynsetRecord& record = *lexicon.Find(id);
    add_lemmas(record);
    for (const std::string& rel : record.hypernym_ids) add_lemmas(*lexicon.Find(rel));
    for (const std::string& rel : record.hyponym_ids) add_lemmas(*lexicon.Find(rel));
  }
  return out;
}

std::optional<SelectedSense> SelectSense(const Lexicon& lexicon,
                                         const GlossSelector& selector,
                                         std::span<const std::string> tokens,
                                         std::size_t target_index,
                                         const std::string& word,
                                         std::optional<Pos> pos) {
  const std::vector<std::string> ids = lexicon.SynsetIdsWithFallback(word, pos);
  if (ids.empty()) return std::nullopt;
  std::size_t choice = 0;
  if (ids.size() > 1) {
    std::vector<std::string> glosses;
    glosses.reserve(ids.size());
    for (const std::string& id : ids) glosses.push_back(lexicon.Find(id)->gloss);
    choice = selector.Choose(tokens, target_index, glosses);
    if (choice >= ids.size()) {
      throw BackendError("gloss selector returned index " +
                         std::to_string(choice) + " for " +
                         std::to_string(ids.size()) + " glosses");
    }
  }
  const SynsetRecord& record = *lexicon.Find(ids[choice]);
  return SelectedSense{record.synset_id, record.gloss};
}

std::optional<std::string> SelectGloss(const Lexicon& lexicon,
                                       const GlossSelector& selector,
                                       std::span<const std::string> tokens,
                                       std::size_t target_index,
                                       const std::string& word,
                                       std::optional<Pos> pos) {
  std::optional<SelectedSense> sense =
      SelectSense(lexicon, selector, tokens, target_index, word, pos);
  if (!sense) return std::nullopt;
  return std::move(sense->gloss);
}

}  // namespace lexsub
