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

#include <thread>

#include "gtest/gtest.h"
#include "httplib.h"
#include "json.hpp"
#include "lexsub/stub_backends.h"

namespace lexsub {
namespace {

using nlohmann::json;

std::vector<double> Values(const EmbeddingVector& v) {
  return {v.values().begin(), v.values().end()};
}

// Serves the stub backends over the adapter protocol.
class StubServer {
 public:
  StubServer() {
    Handle("/input_embedding", [this](const json& in) {
      return json{{"embedding", Values(predictor_.InputEmbedding(in.at("word")))}};
    });
    Handle("/predict", [this](const json& in) {
      const auto tokens = in.at("tokens").get<std::vector<std::string>>();
      const auto query = in.at("query_words").get<std::vector<std::string>>();
      const EmbeddingVector replacement(
          in.at("replacement").get<std::vector<double>>());
      return json{{"scores", predictor_
                                 .Predict(tokens, in.at("target_index"),
                                          replacement, query)
                                 .scores}};
    });
    Handle("/encode", [](const json& in) {
      return json{{"embedding", Values(StubEmbed(in.at("text").get<std::string>()))}};
    });
    Handle("/pair_score", [](const json& in) {
      return json{{"score", StubPairScore(in.at("a").get<std::string>(),
                                          in.at("b").get<std::string>())}};
    });
    Handle("/fit", [this](const json& in) {
      fit_pairs = in.at("pairs").size();
      fit_epochs = in.at("epochs");
      fit_source = in.at("pairs").at(0).at("source");
      return json::object();
    });
    Handle("/choose_gloss", [](const json& in) {
      const auto tokens = in.at("tokens").get<std::vector<std::string>>();
      const auto glosses = in.at("glosses").get<std::vector<std::string>>();
      return json{{"index", StubGlossSelector().Choose(tokens, in.at("target_index"),
                                                       glosses)}};
    });
    Handle("/translate", [this](const json& in) {
      return json{{"text", translator_.Translate(in.at("text"), in.at("route"))}};
    });
    Handle("/analyze", [](const json& in) {
      const auto tokens = in.at("tokens").get<std::vector<std::string>>();
      const TokenAnalysis a = StubTokenEncoder().Analyze(tokens);
      json vectors = json::array();
      for (const auto& v : a.token_vectors) vectors.push_back(Values(v));
      return json{{"token_vectors", vectors}, {"attention", a.attention}};
    });
    server_.Post("/api/broken", [](const httplib::Request&, httplib::Response& res) {
      res.status = 500;
      res.set_content("boom", "text/plain");
    });
    server_.Post("/api/garbage/encode",
                 [](const httplib::Request&, httplib::Response& res) {
                   res.set_content("{not json", "application/json");
                 });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~StubServer() {
    server_.stop();
    thread_.join();
  }

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/api"; }

  std::size_t fit_pairs = 0;
  int fit_epochs = -1;
  std::string fit_source;

 private:
  template <typename Fn>
  void Handle(const std::string& route, Fn fn) {
    server_.Post("/api" + route,
                 [fn](const httplib::Request& req, httplib::Response& res) {
                   try {
                     res.set_content(fn(json::parse(req.body)).dump(),
                                     "application/json");
                   } catch (const std::exception& e) {
                     res.status = 400;
                     res.set_content(e.what(), "text/plain");
                   }
                 });
  }

  StubPredictor predictor_{{"cat", "dog", "bird"}};
  StubTranslator translator_{{{"en-fr", {{"cat", "chat"}}}}};
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

class HttpBackendsTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { server_ = new StubServer(); }
  static void TearDownTestSuite() {
    delete server_;
    server_ = nullptr;
  }
  static StubServer* server_;
};

StubServer* HttpBackendsTest::server_ = nullptr;

TEST_F(HttpBackendsTest, PredictorMatchesStub) {
  const auto remote = MakeHttpPredictor(server_->url());
  const StubPredictor local({"cat", "dog", "bird"});
  EXPECT_EQ(remote->InputEmbedding("cat"), local.InputEmbedding("cat"));
  const std::vector<std::string> tokens = {"a", "cat"};
  const std::vector<std::string> query = {"kitten"};
  const auto r = remote->Predict(tokens, 1, StubEmbed("cat"), query);
  const auto l = local.Predict(tokens, 1, StubEmbed("cat"), query);
  EXPECT_EQ(r.scores, l.scores);
}

TEST_F(HttpBackendsTest, EncoderPairModelSelectorTranslator) {
  EXPECT_EQ(MakeHttpSentenceEncoder(server_->url())->Encode("abc"), StubEmbed("abc"));
  const auto pair = MakeHttpPairModel(server_->url());
  EXPECT_EQ(pair->Score("a cat", "a dog"), StubPairScore("a cat", "a dog"));
  pair->Fit({{"a", "b", 0.5, PairSource::kBacktranslatedGold}}, 4);
  EXPECT_EQ(server_->fit_pairs, 1u);
  EXPECT_EQ(server_->fit_epochs, 4);
  EXPECT_EQ(server_->fit_source, "backtranslated-gold");

  const std::vector<std::string> tokens = {"an", "apple"};
  const std::vector<std::string> glosses = {"zzzz", "aaaa"};
  EXPECT_EQ(MakeHttpGlossSelector(server_->url())->Choose(tokens, 1, glosses), 1u);
  const auto translator = MakeHttpTranslator(server_->url());
  EXPECT_EQ(translator->Translate("the cat", "en-fr"), "the chat");
  EXPECT_THROW(translator->Translate("the cat", "xx"), BackendError);
}

TEST_F(HttpBackendsTest, TokenEncoder) {
  const std::vector<std::string> tokens = {"aa", "b"};
  const TokenAnalysis a = MakeHttpTokenEncoder(server_->url())->Analyze(tokens);
  const TokenAnalysis l = StubTokenEncoder().Analyze(tokens);
  EXPECT_EQ(a.token_vectors, l.token_vectors);
  EXPECT_EQ(a.attention, l.attention);
}

TEST_F(HttpBackendsTest, Failures) {
  EXPECT_THROW(MakeHttpSentenceEncoder(server_->url() + "/garbage")->Encode("x"),
               BackendError);
  EXPECT_THROW(MakeHttpSentenceEncoder(server_->url() + "/missing")->Encode("x"),
               BackendError);
  EXPECT_THROW(MakeHttpSentenceEncoder("http://127.0.0.1:1")->Encode("x"),
               BackendError);
  EXPECT_THROW(MakeHttpSentenceEncoder("localhost:80"), ValidationError);
}

}  // namespace
}  // namespace lexsub
