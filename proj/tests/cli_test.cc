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


#include "commands.h"

#include <sstream>

#include "gtest/gtest.h"
#include "lexsub/config.h"
#include "test_util.h"

namespace lexsub::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Fixture(const char* name) {
  return (testing::FixtureDir() / name).string();
}

TEST(CliTest, HelpListsEveryConfigKey) {
  const Result r = RunCli({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  for (const ConfigKey& k : KnownConfigKeys()) {
    EXPECT_NE(r.out.find(std::string(k.name)), std::string::npos) << k.name;
  }
  const Result sub = RunCli({"substitute", "--help"});
  EXPECT_EQ(sub.code, kExitOk);
  EXPECT_NE(sub.out.find("proposal.strategy"), std::string::npos);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(RunCli({}).code, kExitUsage);
  EXPECT_EQ(RunCli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"substitute", "--config", Fixture("stub.conf"),
                    "--instances", "/no/such/file", "--output", "x"})
                .code,
            kExitUsage);
  EXPECT_EQ(RunCli({"substitute", "--config", Fixture("stub.conf"),
                    "--instances", Fixture("instances.tsv"), "--output", "x",
                    "--set", "proposal.lamda=0.3"})
                .code,
            kExitUsage);
  EXPECT_EQ(RunCli({"substitute", "--config", Fixture("stub.conf"),
                    "--instances", Fixture("instances.tsv"), "--output", "x",
                    "--strategy", "shuffle"})
                .code,
            kExitUsage);
}

TEST(CliTest, SubstituteStrategiesDiffer) {
  testing::TempDir dir;
  for (const char* s : {"keep", "mixup"}) {
    const Result r = RunCli({"substitute", "--config", Fixture("stub.conf"),
                             "--instances", Fixture("instances.tsv"), "--output",
                             (dir / s).string(), "--strategy", s});
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }
  EXPECT_NE(testing::ReadFile(dir / "keep.oot"), testing::ReadFile(dir / "mixup.oot"));
}

TEST(CliTest, EvaluateExitReflectsErrors) {
  testing::TempDir dir;
  testing::WriteFile(dir / "good.best", "bright.a 1 :: sunny\n");
  Result r = RunCli({"evaluate", "--predictions", (dir / "good.best").string(),
                     "--gold", Fixture("gold.txt")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("best\t5.000000"), std::string::npos) << r.out;

  testing::WriteFile(dir / "bad.best", "bright.a 1 :: sunny\nnope.n 4 :: x\n");
  r = RunCli({"evaluate", "--predictions", (dir / "bad.best").string(), "--gold",
              Fixture("gold.txt")});
  EXPECT_EQ(r.code, kExitRunError);
  EXPECT_NE(r.err.find("nope.n 4"), std::string::npos) << r.err;
}

TEST(CliTest, EvaluateRankingAndCoverage) {
  testing::TempDir dir;
  testing::WriteFile(dir / "r.best", "big.a 3 :: large;huge\n");
  Result r = RunCli({"evaluate", "--predictions", (dir / "r.best").string(),
                     "--gold", Fixture("gold.txt"), "--mode", "ranking",
                     "--coverage-only", "--report-json",
                     (dir / "r.json").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("gap\t1.000000"), std::string::npos) << r.out;
  EXPECT_NE(testing::ReadFile(dir / "r.json").find("\"mode\": \"ranking\""),
            std::string::npos);
}

TEST(CliTest, BuildStsDataFinetuneAndTune) {
  testing::TempDir dir;
  const std::string pairs = (dir / "pairs.tsv").string();
  Result r = RunCli({"build-sts-data", "--config", Fixture("stub.conf"),
                     "--instances", Fixture("instances.tsv"), "--gold",
                     Fixture("gold.txt"), "--output", pairs});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_FALSE(testing::ReadFile(pairs).empty());

  r = RunCli({"finetune", "--config", Fixture("stub.conf"), "--pairs", pairs});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("epochs\t4"), std::string::npos);

  r = RunCli({"tune-weights", "--config", Fixture("stub.conf"), "--instances",
              Fixture("instances.tsv"), "--gold", Fixture("gold.txt"), "--set",
              "tune.grid_step=0.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("over 81 weight tuples"), std::string::npos) << r.out;
}

TEST(CliTest, AugmentIsSeeded) {
  testing::TempDir dir;
  for (const char* name : {"a.tsv", "b.tsv"}) {
    const Result r = RunCli({"augment", "--config", Fixture("stub.conf"),
                             "--input", Fixture("labeled.tsv"), "--output",
                             (dir / name).string(), "--per-example", "2",
                             "--seed", "11", "--jobs", "3"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }
  EXPECT_EQ(testing::ReadFile(dir / "a.tsv"), testing::ReadFile(dir / "b.tsv"));
}

}  // namespace
}  // namespace lexsub::cli
