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


#include "lexsub/config.h"

#include "gtest/gtest.h"
#include "lexsub/stub_backends.h"
#include "test_util.h"

namespace lexsub {
namespace {

TEST(ConfigTest, DefaultsMatchReferenceSettings) {
  const RunConfig c = ConfigValues::FromString("", {}).Resolve();
  const auto* mixup = std::get_if<MixupStrategy>(&c.strategy);
  ASSERT_NE(mixup, nullptr);
  EXPECT_EQ(mixup->lambda, 0.25);
  EXPECT_EQ(mixup->fallback.mu, 0.0);
  EXPECT_EQ(mixup->fallback.sigma, 0.01);
  EXPECT_EQ(c.weights, (CombinationWeights{0.05, 0.05, 1.0, 0.5}));
  EXPECT_EQ(c.k, 30u);
  EXPECT_EQ(c.epochs, 4);
  EXPECT_EQ(c.sts.routes.out, "en-romance");
  EXPECT_EQ(c.sts.routes.mid, "fr-es");
  EXPECT_EQ(c.sts.routes.back, "romance-en");
  EXPECT_TRUE(c.validation.include_target);
}

TEST(ConfigTest, ParsesCommentsAndOverrides) {
  ConfigValues v = ConfigValues::FromString(
      "# comment\n\nproposal.strategy = dropout  # trailing\n"
      "proposal.dropout_p=0.4\n",
      {});
  v.Set("proposal.seed=7");
  const RunConfig c = v.Resolve();
  const auto* d = std::get_if<DropoutStrategy>(&c.strategy);
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->p, 0.4);
  EXPECT_EQ(d->seed, 7u);
}

TEST(ConfigTest, UnknownKeyIsError) {
  EXPECT_THROW(ConfigValues::FromString("proposal.lamda = 0.3\n", {}), ConfigError);
  ConfigValues v;
  EXPECT_THROW(v.Set("nope=1"), ConfigError);
  EXPECT_THROW(v.Set("missing equals"), ConfigError);
}

TEST(ConfigTest, SyntaxErrorNamesLine) {
  try {
    ConfigValues::FromString("candidates.k = 3\ngarbage\n", {});
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("2:", 0), 0u) << e.what();
  }
}

TEST(ConfigTest, RangeChecks) {
  for (const char* bad : {"proposal.lambda=1.5", "proposal.sigma=-1",
                          "weights.gloss=2", "candidates.k=0", "candidates.k=x",
                          "tune.grid_step=0", "proposal.strategy=shuffle",
                          "validation.include_target=maybe",
                          "backend.predictor=remote"}) {
    ConfigValues v;
    v.Set(bad);
    EXPECT_THROW(v.Resolve(), ConfigError) << bad;
  }
}

TEST(ConfigTest, PathsResolveAgainstConfigDirAndMustExist) {
  testing::TempDir dir;
  testing::WriteFile(dir / "lex.tsv", "s\ta\tg\tbig,large\n");
  testing::WriteFile(dir / "vocab.txt", "huge\nvast\n");
  testing::WriteFile(dir / "run.conf",
                     "lexicon.path = lex.tsv\nstub.vocabulary = vocab.txt\n");
  const RunConfig c = ConfigValues::FromFile(dir / "run.conf").Resolve();
  EXPECT_EQ(c.lexicon_path, dir / "lex.tsv");

  testing::WriteFile(dir / "bad.conf", "lexicon.path = missing.tsv\n");
  EXPECT_THROW(ConfigValues::FromFile(dir / "bad.conf").Resolve(), ConfigError);
  EXPECT_THROW(ConfigValues::FromFile(dir / "absent.conf"), ConfigError);
}

TEST(ConfigTest, BuildStubBackends) {
  testing::TempDir dir;
  testing::WriteFile(dir / "lex.tsv", "s\ta\tg\tbig,large\n");
  testing::WriteFile(dir / "vocab.txt", "huge\nvast\n");
  ConfigValues v = ConfigValues::FromString(
      "lexicon.path = lex.tsv\nstub.vocabulary = vocab.txt\n", dir.path());
  const RunConfig c = v.Resolve();
  const Backends b = BuildBackends(c);
  EXPECT_EQ(b.lexicon->size(), 1u);
  // No translation table: configured routes are identities.
  EXPECT_EQ(b.translator->Translate("a b", "fr-es"), "a b");
  EXPECT_THROW(b.translator->Translate("a b", "xx-yy"), BackendError);
  const Pipeline p = b.MakePipeline(c);
  EXPECT_EQ(p.k, 30u);
}

TEST(ConfigTest, BuildRequiresLexiconAndVocabulary) {
  EXPECT_THROW(BuildBackends(ConfigValues().Resolve()), ConfigError);
}

TEST(ConfigTest, KnownKeysAreUnique) {
  std::set<std::string_view> names;
  for (const ConfigKey& k : KnownConfigKeys()) {
    EXPECT_TRUE(names.insert(k.name).second) << k.name;
    EXPECT_FALSE(k.help.empty());
  }
}

}  // namespace
}  // namespace lexsub
