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

#include "lexsub/sentence_scorer.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <set>

#include "lexsub/gloss_scorer.h"

namespace lexsub {
namespace {

// Sorted, lowercased lemmas of the target's context-selected synset,
// excluding the target itself.
std::set<std::string> SenseSynonyms(const Lexicon& lexicon,
                                    const GlossSelector& selector,
                                    const LexSubInstance& instance) {
  const std::string lemma = instance.lemma();
  std::optional<SelectedSense> sense =
      SelectSense(lexicon, selector, instance.tokens, instance.target_index,
                  lemma, instance.pos());
  if (!sense && instance.target_word() != lemma) {
    sense = SelectSense(lexicon, selector, instance.tokens,
                        instance.target_index, instance.target_word(),
                        instance.pos());
  }
  std::set<std::string> out;
  if (!sense) return out;
  const std::string self_lemma = ToLower(lemma);
  const std::string self_word = ToLower(instance.target_word());
  for (const std::string& l : lexicon.Find(sense->synset_id)->lemmas) {
    std::string lower = ToLower(l);
    if (lower != self_lemma && lower != self_word) out.insert(std::move(lower));
  }
  return out;
}

void AppendPairs(std::span<const std::string> tokens, std::size_t index,
                 const std::vector<std::pair<std::string, double>>& substitutes,
                 PairSource source, std::vector<SentencePairExample>* out) {
  const std::string original = JoinTokens(tokens);
  for (const auto& [substitute, label] : substitutes) {
    out->push_back({original, JoinTokens(Substitute(tokens, index, substitute)),
                    label, source});
  }
}

std::optional<PairSource> ParseSource(std::string_view name) {
  for (PairSource s : {PairSource::kGold, PairSource::kSynonym,
                       PairSource::kBacktranslatedGold,
                       PairSource::kBacktranslatedSynonym}) {
    if (PairSourceName(s) == name) return s;
  }
  return std::nullopt;
}

}  // namespace

double SentenceSimilarityScore(const PairSimilarityModel& model,
                               std::span<const std::string> tokens,
                               std::size_t target_index,
                               const std::string& candidate) {
  if (candidate.empty() || ContainsWhitespace(candidate)) {
    throw ValidationError("sentence similarity needs a single-word candidate");
  }
  return model.Score(JoinTokens(tokens),
                     JoinTokens(Substitute(tokens, target_index, candidate)));
}

std::string BackTranslate(const Translator& translator, const std::string& text,
                          const TranslationRoutes& routes) {
  const std::string forward = translator.Translate(text, routes.out);
  std::string round_trip = translator.Translate(forward, routes.back);
  if (round_trip != text) return round_trip;
  const std::string first_hop = translator.Translate(text, routes.out);
  const std::string second_hop = translator.Translate(first_hop, routes.mid);
  return translator.Translate(second_hop, routes.back);
}

std::vector<SentencePairExample> BuildStsPairs(
    const std::vector<LexSubInstance>& instances, const GoldSet& gold,
    const Lexicon& lexicon, const GlossSelector& selector,
    const Translator& translator, const StsPairOptions& options) {
  std::vector<SentencePairExample> pairs;
  for (const LexSubInstance& instance : instances) {
    const auto it = gold.find(instance.ref());
    if (it == gold.end()) {
      throw ValidationError("no gold entry for training instance " +
                            ToString(instance.ref()));
    }
    int max_weight = 0;
    for (const auto& [sub, w] : it->second.weights) max_weight = std::max(max_weight, w);

    std::vector<std::pair<std::string, double>> gold_subs;
    for (const auto& [sub, w] : it->second.weights) {
      gold_subs.emplace_back(sub, static_cast<double>(w) / max_weight);
    }
    std::vector<std::pair<std::string, double>> synonym_subs;
    for (const std::string& s : SenseSynonyms(lexicon, selector, instance)) {
      synonym_subs.emplace_back(s, 1.0);
    }

    AppendPairs(instance.tokens, instance.target_index, gold_subs,
                PairSource::kGold, &pairs);
    AppendPairs(instance.tokens, instance.target_index, synonym_subs,
                PairSource::kSynonym, &pairs);

    if (!options.backtranslated_gold && !options.backtranslated_synonym) continue;
    const std::string sentence = JoinTokens(instance.tokens);
    const std::string updated = BackTranslate(translator, sentence, options.routes);
    // An unchanged sentence would only duplicate the pairs above.
    if (updated == sentence) continue;
    const std::vector<std::string> updated_tokens = SplitTokens(updated);
    const std::string target = ToLower(instance.target_word());
    const auto pos = std::find_if(
        updated_tokens.begin(), updated_tokens.end(),
        [&](const std::string& t) { return ToLower(t) == target; });
    if (pos == updated_tokens.end()) continue;
    const auto index = static_cast<std::size_t>(pos - updated_tokens.begin());
    if (options.backtranslated_gold) {
      AppendPairs(updated_tokens, index, gold_subs,
                  PairSource::kBacktranslatedGold, &pairs);
    }
    if (options.backtranslated_synonym) {
      AppendPairs(updated_tokens, index, synonym_subs,
                  PairSource::kBacktranslatedSynonym, &pairs);
    }
  }
  return pairs;
}

void WriteStsPairs(const std::vector<SentencePairExample>& pairs,
                   std::ostream& out) {
  for (const SentencePairExample& p : pairs) {
    out << p.text_a << '\t' << p.text_b << '\t' << FormatDouble(p.label) << '\t'
        << PairSourceName(p.source) << '\n';
  }
}

void WriteStsPairs(const std::vector<SentencePairExample>& pairs,
                   const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  WriteStsPairs(pairs, out);
}

std::vector<SentencePairExample> ReadStsPairs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::vector<SentencePairExample> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(line_no) + ": ";
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 4) throw ParseError(where + "expected 4 fields");
    SentencePairExample p;
    p.text_a = fields[0];
    p.text_b = fields[1];
    const auto [ptr, ec] = std::from_chars(
        fields[2].data(), fields[2].data() + fields[2].size(), p.label);
    if (ec != std::errc() || ptr != fields[2].data() + fields[2].size() ||
        !(p.label >= 0.0 && p.label <= 1.0)) {
      throw ParseError(where + "label must be a number in [0,1]");
    }
    const std::optional<PairSource> source = ParseSource(fields[3]);
    if (!source) throw ParseError(where + "unknown source '" + fields[3] + "'");
    p.source = *source;
    if (p.text_a.empty() || p.text_b.empty()) {
      throw ParseError(where + "empty text");
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

void FinetuneSimilarity(PairSimilarityModel& model,
                        const std::vector<SentencePairExample>& pairs,
                        int epochs) {
  if (pairs.empty()) throw ValidationError("fine-tuning needs at least one pair");
  if (epochs < 0) throw ValidationError("epochs must be >= 0");
  model.Fit(pairs, epochs);
}

}  // namespace lexsub
