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

// JSON-over-HTTP adapters for externally hosted models. Each backend POSTs a
// JSON object to `<base_url><endpoint>` and reads a JSON object back:
//
//   /input_embedding  {word}                          -> {embedding}
//   /predict          {tokens, target_index,
//                      replacement, query_words}      -> {scores: {word: y}}
//   /encode           {text}                          -> {embedding}
//   /pair_score       {a, b}                          -> {score}
//   /fit              {pairs: [{text_a, text_b,
//                               label, source}], epochs} -> {}
//   /choose_gloss     {tokens, target_index, glosses} -> {index}
//   /translate        {text, route}                   -> {text}
//   /analyze          {tokens}                        -> {token_vectors,
//                                                          attention}
//
// Non-2xx responses and malformed bodies raise BackendError. A fresh
// connection is used per call, so the adapters are concurrency safe.

#ifndef LEXSUB_HTTP_BACKENDS_H_
#define LEXSUB_HTTP_BACKENDS_H_

#include <memory>
#include <string>

#include "lexsub/backends.h"

namespace lexsub {

std::shared_ptr<TargetWordPredictor> MakeHttpPredictor(std::string base_url);
std::shared_ptr<SentenceEncoder> MakeHttpSentenceEncoder(std::string base_url);
std::shared_ptr<PairSimilarityModel> MakeHttpPairModel(std::string base_url);
std::shared_ptr<GlossSelector> MakeHttpGlossSelector(std::string base_url);
std::shared_ptr<Translator> MakeHttpTranslator(std::string base_url);
std::shared_ptr<ContextualTokenEncoder> MakeHttpTokenEncoder(
    std::string base_url);

}  // namespace lexsub

#endif  // LEXSUB_HTTP_BACKENDS_H_
