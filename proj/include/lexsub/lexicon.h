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

// In-memory lexical knowledge base (synsets, glosses, one-level hypernym and
// hyponym links) loaded from a TSV export:
//
//   synset_id<TAB>pos<TAB>gloss<TAB>lemma,lemma,...<TAB>hypernyms<TAB>hyponyms
//
// Relation fields are comma-separated synset ids and may be empty. Lemma
// underscores are read as spaces. A WordNet export script only has to emit
// this format; nothing here depends on a particular WordNet release.

#ifndef LEXSUB_LEXICON_H_
#define LEXSUB_LEXICON_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lexsub/backends.h"
#include "lexsub/types.h"

namespace lexsub {

struct SynsetRecord {
  std::string synset_id;
  Pos pos = Pos::kNoun;
  std::vector<std::string> lemmas;  // file order, spaces for multi-words
  std::string gloss;
  std::set<std::string> hypernym_ids;
  std::set<std::string> hyponym_ids;
};

class Lexicon {
 public:
  Lexicon() = default;

  // Adds a record. Relation ids are not checked until Validate().
  void Add(SynsetRecord record);
  // Throws ValidationError naming any dangling relation id.
  void Validate() const;

  const SynsetRecord* Find(const std::string& synset_id) const;

  // Synsets indexed under (lowercased word, pos), in load order.
  const std::vector<std::string>& SynsetIds(const std::string& word,
                                            Pos pos) const;

  // SynsetIds for `pos`; when empty (or `pos` is absent), the concatenation
  // over n, v, a, r with duplicates removed.
  std::vector<std::string> SynsetIdsWithFallback(
      const std::string& word, std::optional<Pos> pos) const;

  std::size_t size() const { return records_.size(); }

 private:
  std::map<std::string, SynsetRecord> records_;
  std::map<std::pair<std::string, Pos>, std::vector<std::string>> index_;
};

Lexicon LoadLexicon(const std::filesystem::path& path);
Lexicon LoadLexicon(std::istream& in, const std::string& source_name);

// Lowercased lemmas of every synset of `word` under any pos, minus `word`.
std::set<std::string> AllSynonyms(const Lexicon& lexicon,
                                  const std::string& word);

// Lowercased single-word lemmas of the synsets of (lemma, pos) and of their
// direct hypernyms and hyponyms, minus `lemma`. Uses the pos fallback.
std::set<std::string> RelationCandidates(const Lexicon& lexicon,
                                         const std::string& lemma,
                                         std::optional<Pos> pos);

struct SelectedSense {
  std::string synset_id;
  std::string gloss;
};

// Context-selected synset for the word at tokens[target_index]. Returns
// nullopt when `word` has no synsets under any pos. The selector is consulted
// only when there is more than one candidate sense; its failures propagate as
// BackendError.
std::optional<SelectedSense> SelectSense(const Lexicon& lexicon,
                                         const GlossSelector& selector,
                                         std::span<const std::string> tokens,
                                         std::size_t target_index,
                                         const std::string& word,
                                         std::optional<Pos> pos);

std::optional<std::string> SelectGloss(const Lexicon& lexicon,
                                       const GlossSelector& selector,
                                       std::span<const std::string> tokens,
                                       std::size_t target_index,
                                       const std::string& word,
                                       std::optional<Pos> pos);

}  // namespace lexsub

#endif  // LEXSUB_LEXICON_H_
