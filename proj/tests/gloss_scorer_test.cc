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


#include "lexsub/gloss_scorer.h"

#include <sstream>

#include "gtest/gtest.h"
#include "lexsub/stub_backends.h"

namespace lexsub {
namespace {

class GlossScorerTest : public ::testing::Test {
 protected:
  Lexicon Load(const std::string& text) {
    std::istringstream in(text);
    return LoadLexicon(in, "lex");
  }
  StubGlossSelector selector_;
  StubSentenceEncoder encoder_;
  std::vector<std::string> tokens_ = {"a", "bright", "idea"};
};

TEST_F(GlossScorerTest, IdentityIsOne) {
  const Lexicon lex = Load(
      "s1\ta\tshining with light\tbright\n"
      "s2\ta\tquick to learn\tbright,smart\n");
  const TargetContext target{tokens_, 1, "bright", Pos::kAdjective};
  EXPECT_EQ(GlossScore(lex, selector_, encoder_, target, "bright"), 1.0);
}

TEST_F(GlossScorerTest, IdentityWithLetterlessGloss) {
  const Lexicon lex = Load("s1\ta\t...\tbright\n");
  const TargetContext target{tokens_, 1, "bright", Pos::kAdjective};
  EXPECT_EQ(GlossScore(lex, selector_, encoder_, target, "bright"), 1.0);
}

TEST_F(GlossScorerTest, UnknownCandidateIsZero) {
  const Lexicon lex = Load("s1\ta\tshining\tbright\n");
  const TargetContext target{tokens_, 1, "bright", Pos::kAdjective};
  EXPECT_EQ(GlossScore(lex, selector_, encoder_, target, "qwerty"), 0.0);
}

TEST_F(GlossScorerTest, UnknownTargetIsZero) {
  const Lexicon lex = Load("s1\ta\tshining\tsmart\n");
  const TargetContext target{tokens_, 1, "bright", Pos::kAdjective};
  EXPECT_EQ(GlossScore(lex, selector_, encoder_, target, "smart"), 0.0);
}

TEST_F(GlossScorerTest, LetterCosine) {
  // (1,1,0,...) . (0,1,1,...) / (sqrt2 * sqrt2) = 0.5
  const Lexicon lex = Load("s1\ta\tab\tbright\ns2\ta\tbc\tvivid\n");
  const TargetContext target{tokens_, 1, "bright", Pos::kAdjective};
  EXPECT_NEAR(GlossScore(lex, selector_, encoder_, target, "vivid"), 0.5, 1e-15);
}

TEST_F(GlossScorerTest, TargetFoundBySurfaceForm) {
  const std::vector<std::string> tokens = {"they", "ran", "home"};
  const Lexicon lex = Load("s1\tv\tab\tran\ns2\tv\tab\tsprinted\n");
  const TargetContext target{tokens, 1, "run", Pos::kVerb};
  EXPECT_EQ(GlossScore(lex, selector_, encoder_, target, "sprinted"), 1.0);
}

TEST(SubstituteTest, ReplacesOneToken) {
  const std::vector<std::string> tokens = {"a", "b", "c"};
  EXPECT_EQ(Substitute(tokens, 1, "x"), (std::vector<std::string>{"a", "x", "c"}));
  EXPECT_THROW(Substitute(tokens, 3, "x"), ValidationError);
}

}  // namespace
}  // namespace lexsub
