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


#include "lexsub/stub_backends.h"

#include <cmath>

#include "gtest/gtest.h"
#include "test_util.h"

namespace lexsub {
namespace {

TEST(StubEmbedTest, Examples) {
  const EmbeddingVector aa = StubEmbed("aa");
  ASSERT_EQ(aa.dim(), kStubDim);
  EXPECT_EQ(aa[0], 1.0);
  for (std::size_t i = 1; i < kStubDim; ++i) EXPECT_EQ(aa[i], 0.0);

  const EmbeddingVector ab = StubEmbed("ab");
  EXPECT_NEAR(ab[0], 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(ab[1], 1.0 / std::sqrt(2.0), 1e-15);

  EXPECT_TRUE(StubEmbed("").IsZero());
  EXPECT_TRUE(StubEmbed("123 !").IsZero());
  EXPECT_EQ(StubEmbed("AB"), StubEmbed("ab"));
}

TEST(StubPredictTest, ScoresAreNegativeDistances) {
  const std::vector<std::string> tokens = {"the", "cat"};
  const auto s = StubPredict(tokens, 1, StubEmbed("cat"), {"cat", "dog"});
  EXPECT_EQ(s.at("cat"), 0.0);
  EXPECT_LT(s.at("dog"), 0.0);
}

TEST(StubPredictTest, ZeroReplacement) {
  const std::vector<std::string> tokens = {"x"};
  const auto s = StubPredict(tokens, 0, EmbeddingVector(kStubDim), {"cat", "dog"});
  EXPECT_DOUBLE_EQ(s.at("cat"), -1.0);
  EXPECT_DOUBLE_EQ(s.at("dog"), -1.0);
}

TEST(StubPredictTest, EmptyVocabulary) {
  const std::vector<std::string> tokens = {"x"};
  EXPECT_THROW(StubPredict(tokens, 0, StubEmbed("x"), {}), ValidationError);
}

TEST(StubPredictorTest, ScoresQueryWordsOutsideVocabulary) {
  const StubPredictor predictor({"cat"});
  const std::vector<std::string> tokens = {"a", "cat"};
  const std::vector<std::string> query = {"feline"};
  const auto s = predictor.Predict(tokens, 1, StubEmbed("cat"), query);
  EXPECT_TRUE(s.scores.contains("cat"));
  EXPECT_TRUE(s.scores.contains("feline"));
  EXPECT_THROW(s.at("dog"), BackendError);
}

TEST(StubPairScoreTest, Examples) {
  EXPECT_EQ(StubPairScore("same words", "same words"), 1.0);
  EXPECT_EQ(StubPairScore("...", "..."), 1.0);
  EXPECT_DOUBLE_EQ(StubPairScore("ab", "cd"), 0.5);
  EXPECT_DOUBLE_EQ(StubPairScore("", "x"), 0.5);
}

TEST(StubPairModelTest, FitRecordsPairs) {
  StubPairModel model;
  const double before = model.Score("a cat", "a dog");
  const std::vector<SentencePairExample> pairs = {
      {"a", "b", 0.5, PairSource::kGold}};
  model.Fit(pairs, 4);
  ASSERT_EQ(model.fit_calls().size(), 1u);
  EXPECT_EQ(model.fit_calls()[0].first, pairs);
  EXPECT_EQ(model.fit_calls()[0].second, 4);
  EXPECT_EQ(model.Score("a cat", "a dog"), before);
}

TEST(StubTranslatorTest, Routes) {
  StubTranslator translator({{"id", {}}, {"en-x", {{"big", "large"}}}});
  EXPECT_EQ(translator.Translate("a big cat", "id"), "a big cat");
  EXPECT_EQ(translator.Translate("a big cat", "en-x"), "a large cat");
  EXPECT_THROW(translator.Translate("a big cat", "nope"), BackendError);
  const std::vector<TranslationCall> expected = {
      {"a big cat", "id"}, {"a big cat", "en-x"}, {"a big cat", "nope"}};
  EXPECT_EQ(translator.call_log(), expected);
  translator.ClearLog();
  EXPECT_TRUE(translator.call_log().empty());
}

TEST(StubTranslatorTest, ReadTable) {
  testing::TempDir dir;
  testing::WriteFile(dir / "t.tsv", "a-b\tbig\tlarge\nid\n");
  const auto table = StubTranslator::ReadTable(dir / "t.tsv");
  EXPECT_EQ(table.at("a-b").size(), 1u);
  EXPECT_TRUE(table.at("id").empty());
  testing::WriteFile(dir / "bad.tsv", "a\tb\n");
  EXPECT_THROW(StubTranslator::ReadTable(dir / "bad.tsv"), ParseError);
}

TEST(StubTokenEncoderTest, UniformAttention) {
  const StubTokenEncoder encoder;
  const std::vector<std::string> tokens = {"aa", "b", "c", "d"};
  const TokenAnalysis a = encoder.Analyze(tokens);
  ASSERT_EQ(a.attention.size(), 4u);
  for (const auto& row : a.attention) {
    EXPECT_EQ(row, (std::vector<double>{0.25, 0.25, 0.25, 0.25}));
  }
  EXPECT_EQ(a.token_vectors[0][0], 1.0);
  EXPECT_THROW(encoder.Analyze(std::vector<std::string>{}), ValidationError);
}

TEST(StubGlossSelectorTest, Examples) {
  const StubGlossSelector selector;
  const std::vector<std::string> tokens = {"an", "apple"};
  EXPECT_EQ(selector.Choose(tokens, 1, std::vector<std::string>{"only"}), 0u);
  EXPECT_EQ(selector.Choose(tokens, 1, std::vector<std::string>{"aaaa", "zzzz"}), 0u);
  EXPECT_EQ(selector.Choose(tokens, 1, std::vector<std::string>{"zzzz", "aaaa"}), 1u);
  EXPECT_EQ(selector.Choose(tokens, 1, std::vector<std::string>{"same", "same"}), 0u);
}

TEST(SerializeIfUnsafeTest, WrapsOnlyUnsafeBackends) {
  class Unsafe : public SentenceEncoder {
   public:
    EmbeddingVector Encode(const std::string& t) const override {
      return StubEmbed(t);
    }
    bool concurrency_safe() const override { return false; }
  };
  auto safe = std::make_shared<StubSentenceEncoder>();
  EXPECT_EQ(SerializeIfUnsafe(std::shared_ptr<SentenceEncoder>(safe)), safe);
  auto unsafe = std::make_shared<Unsafe>();
  auto wrapped = SerializeIfUnsafe(std::shared_ptr<SentenceEncoder>(unsafe));
  EXPECT_NE(wrapped, unsafe);
  EXPECT_TRUE(wrapped->concurrency_safe());
  EXPECT_EQ(wrapped->Encode("abc"), StubEmbed("abc"));
}

}  // namespace
}  // namespace lexsub
