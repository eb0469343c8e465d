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

#include "lexsub/http_backends.h"

#include "httplib.h"
#include "json.hpp"

namespace lexsub {
namespace {

using nlohmann::json;

class Endpoint {
 public:
  explicit Endpoint(std::string base_url) {
    const std::size_t scheme = base_url.find("://");
    if (scheme == std::string::npos) {
      throw ValidationError("backend url '" + base_url +
                            "' must start with http://");
    }
    const std::size_t path = base_url.find('/', scheme + 3);
    if (path == std::string::npos) {
      host_ = base_url;
    } else {
      host_ = base_url.substr(0, path);
      prefix_ = base_url.substr(path);
      while (!prefix_.empty() && prefix_.back() == '/') prefix_.pop_back();
    }
  }

  json Post(const std::string& route, const json& body) const {
    httplib::Client client(host_);
    client.set_read_timeout(600, 0);
    const auto res =
        client.Post(prefix_ + route, body.dump(), "application/json");
    if (!res) {
      throw BackendError("POST " + host_ + prefix_ + route + " failed: " +
                         httplib::to_string(res.error()));
    }
    if (res->status < 200 || res->status >= 300) {
      throw BackendError("POST " + host_ + prefix_ + route + " returned " +
                         std::to_string(res->status) + ": " + res->body);
    }
    try {
      return json::parse(res->body);
    } catch (const json::exception& e) {
      throw BackendError("bad JSON from " + route + ": " + e.what());
    }
  }

 private:
  std::string host_;
  std::string prefix_;
};

template <typename T>
T Field(const json& j, const char* name, const char* route) {
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw BackendError(std::string(route) + ": missing or bad field '" + name +
                       "': " + e.what());
  }
}

EmbeddingVector ToEmbedding(std::vector<double> values) {
  try {
    return EmbeddingVector(std::move(values));
  } catch (const ValidationError& e) {
    throw BackendError(e.what());
  }
}

std::vector<std::string> ToVector(std::span<const std::string> s) {
  return {s.begin(), s.end()};
}

class HttpPredictor : public TargetWordPredictor {
 public:
  explicit HttpPredictor(std::string url) : endpoint_(std::move(url)) {}

  EmbeddingVector InputEmbedding(const std::string& word) const override {
    const json r = endpoint_.Post("/input_embedding", {{"word", word}});
    return ToEmbedding(Field<std::vector<double>>(r, "embedding", "/input_embedding"));
  }

  VocabularyScores Predict(std::span<const std::string> tokens,
                           std::size_t target_index,
                           const EmbeddingVector& replacement,
                           std::span<const std::string> query_words)
      const override {
    const json body = {
        {"tokens", ToVector(tokens)},
        {"target_index", target_index},
        {"replacement", std::vector<double>(replacement.values().begin(),
                                            replacement.values().end())},
        {"query_words", ToVector(query_words)},
    };
    const json r = endpoint_.Post("/predict", body);
    VocabularyScores out;
    out.scores = Field<std::unordered_map<std::string, double>>(r, "scores",
                                                                "/predict");
    if (out.scores.empty()) throw BackendError("/predict returned no scores");
    return out;
  }

 private:
  Endpoint endpoint_;
};

class HttpSentenceEncoder : public SentenceEncoder {
 public:
  explicit HttpSentenceEncoder(std::string url) : endpoint_(std::move(url)) {}
  EmbeddingVector Encode(const std::string& text) const override {
    const json r = endpoint_.Post("/encode", {{"text", text}});
    return ToEmbedding(Field<std::vector<double>>(r, "embedding", "/encode"));
  }

 private:
  Endpoint endpoint_;
};

class HttpPairModel : public PairSimilarityModel {
 public:
  explicit HttpPairModel(std::string url) : endpoint_(std::move(url)) {}
  double Score(const std::string& a, const std::string& b) const override {
    const json r = endpoint_.Post("/pair_score", {{"a", a}, {"b", b}});
    const double s = Field<double>(r, "score", "/pair_score");
    if (!(s >= 0.0 && s <= 1.0)) {
      throw BackendError("/pair_score returned a value outside [0,1]");
    }
    return s;
  }
  void Fit(const std::vector<SentencePairExample>& pairs, int epochs) override {
    json list = json::array();
    for (const SentencePairExample& p : pairs) {
      list.push_back({{"text_a", p.text_a},
                      {"text_b", p.text_b},
                      {"label", p.label},
                      {"source", std::string(PairSourceName(p.source))}});
    }
    endpoint_.Post("/fit", {{"pairs", list}, {"epochs", epochs}});
  }

 private:
  Endpoint endpoint_;
};

class HttpGlossSelector : public GlossSelector {
 public:
  explicit HttpGlossSelector(std::string url) : endpoint_(std::move(url)) {}
  std::size_t Choose(std::span<const std::string> tokens,
                     std::size_t target_index,
                     std::span<const std::string> glosses) const override {
    const json r = endpoint_.Post("/choose_gloss",
                                  {{"tokens", ToVector(tokens)},
                                   {"target_index", target_index},
                                   {"glosses", ToVector(glosses)}});
    return Field<std::size_t>(r, "index", "/choose_gloss");
  }

 private:
  Endpoint endpoint_;
};

class HttpTranslator : public Translator {
 public:
  explicit HttpTranslator(std::string url) : endpoint_(std::move(url)) {}
  std::string Translate(const std::string& text,
                        const std::string& route) const override {
    const json r =
        endpoint_.Post("/translate", {{"text", text}, {"route", route}});
    return Field<std::string>(r, "text", "/translate");
  }

 private:
  Endpoint endpoint_;
};

class HttpTokenEncoder : public ContextualTokenEncoder {
 public:
  explicit HttpTokenEncoder(std::string url) : endpoint_(std::move(url)) {}
  TokenAnalysis Analyze(std::span<const std::string> tokens) const override {
    const json r = endpoint_.Post("/analyze", {{"tokens", ToVector(tokens)}});
    TokenAnalysis out;
    for (auto& v : Field<std::vector<std::vector<double>>>(r, "token_vectors",
                                                           "/analyze")) {
      out.token_vectors.push_back(ToEmbedding(std::move(v)));
    }
    out.attention =
        Field<std::vector<std::vector<double>>>(r, "attention", "/analyze");
    ValidateAnalysis(out, tokens.size());
    return out;
  }

 private:
  Endpoint endpoint_;
};

}  // namespace

std::shared_ptr<TargetWordPredictor> MakeHttpPredictor(std::string base_url) {
  return std::make_shared<HttpPredictor>(std::move(base_url));
}
std::shared_ptr<SentenceEncoder> MakeHttpSentenceEncoder(std::string base_url) {
  return std::make_shared<HttpSentenceEncoder>(std::move(base_url));
}
std::shared_ptr<PairSimilarityModel> MakeHttpPairModel(std::string base_url) {
  return std::make_shared<HttpPairModel>(std::move(base_url));
}
std::shared_ptr<GlossSelector> MakeHttpGlossSelector(std::string base_url) {
  return std::make_shared<HttpGlossSelector>(std::move(base_url));
}
std::shared_ptr<Translator> MakeHttpTranslator(std::string base_url) {
  return std::make_shared<HttpTranslator>(std::move(base_url));
}
std::shared_ptr<ContextualTokenEncoder> MakeHttpTokenEncoder(
    std::string base_url) {
  return std::make_shared<HttpTokenEncoder>(std::move(base_url));
}

}  // namespace lexsub
