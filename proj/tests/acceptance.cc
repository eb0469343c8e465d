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

// Acceptance checks. Prints one PASS/FAIL/SKIP line per criterion and exits
// nonzero when a gating criterion fails.
//
//   acceptance                       run every check
//   acceptance --update-golden       rewrite tests/golden from the current build

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.h"
#include "lexsub/augment.h"
#include "lexsub/config.h"
#include "lexsub/metrics.h"
#include "lexsub/proposal.h"
#include "lexsub/ranking.h"
#include "lexsub/sentence_scorer.h"
#include "lexsub/stub_backends.h"
#include "metric_oracle.h"
#include "test_util.h"

namespace lexsub {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Collects failure messages for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++count_;
  }
  bool ok() const { return count_ == 0; }
  std::string Summary() const {
    std::string s;
    for (const auto& f : failures_) s += "\n    " + f;
    if (count_ > failures_.size()) {
      s += "\n    ... " + std::to_string(count_ - failures_.size()) + " more";
    }
    return s;
  }

 private:
  std::vector<std::string> failures_;
  std::size_t count_ = 0;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Num(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

// 1. Metrics against the brute-force evaluator.
Check MetricOracle() {
  Check c;
  const auto start = Clock::now();
  std::mt19937_64 rng(1001);
  const std::vector<std::string> vocab = {"a", "b", "c", "d", "e", "f", "g", "h", "i"};
  for (int trial = 0; trial < 250; ++trial) {
    GoldSet gold;
    std::vector<oracle::Item> items;
    std::vector<PredictionRecord> preds;
    double gap_sum = 0.0;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 1; i <= n; ++i) {
      std::vector<std::string> words = vocab;
      std::shuffle(words.begin(), words.end(), rng);
      oracle::Item item;
      GoldAnnotations g{"w.n", i, {}};
      for (int j = 0, m = 1 + static_cast<int>(rng() % 5); j < m; ++j) {
        g.weights[words[j]] = 1 + static_cast<int>(rng() % 5);
      }
      item.gold = g.weights;
      gold[{"w.n", i}] = g;
      std::shuffle(words.begin(), words.end(), rng);
      if (rng() % 6 != 0) {
        item.guesses.assign(words.begin(), words.begin() + 1 + rng() % 6);
        preds.push_back({"w.n", i, item.guesses});
        const std::map<std::string, double> w(item.gold.begin(), item.gold.end());
        gap_sum += oracle::Gap(item.guesses, w);
      }
      items.push_back(item);
    }
    const std::string tag = "fixture " + std::to_string(trial) + ": ";
    const auto gen = EvaluateDataset(preds, gold, EvaluationMode::kGeneration);
    c.Expect(std::abs(gen.best - oracle::Best(items)) <= 1e-9, tag + "best");
    c.Expect(std::abs(gen.best_mode - oracle::BestMode(items)) <= 1e-9, tag + "best mode");
    c.Expect(std::abs(gen.oot - oracle::Oot(items)) <= 1e-9, tag + "oot");
    c.Expect(std::abs(gen.oot_mode - oracle::OotMode(items)) <= 1e-9, tag + "oot mode");
    c.Expect(std::abs(gen.p_at_1 - oracle::PAt1(items)) <= 1e-9, tag + "p@1");
    const auto rank = EvaluateDataset(preds, gold, EvaluationMode::kRanking);
    c.Expect(std::abs(rank.gap - gap_sum / n) <= 1e-9,
             tag + "gap " + Num(rank.gap) + " vs " + Num(gap_sum / n));
  }
  const double t = Seconds(start);
  c.Expect(t < 10.0, "took " + Num(t) + " s");
  return c;
}

// 2. GAP properties.
Check GapProperties() {
  Check c;
  const std::vector<std::string> ideal = {"a", "b", "c"};
  c.Expect(Gap(ideal, {{"a", 5}, {"b", 3}, {"c", 1}}) == 1.0, "ideal ranking != 1");
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  const std::vector<std::string> vocab = {"a", "b", "c", "d", "e", "f"};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> words = vocab;
    std::shuffle(words.begin(), words.end(), rng);
    std::map<std::string, double> w, scaled;
    const double s = scale(rng);
    for (int j = 0, m = 1 + static_cast<int>(rng() % 5); j < m; ++j) {
      w[words[j]] = 1 + static_cast<int>(rng() % 5);
      scaled[words[j]] = w[words[j]] * s;
    }
    std::shuffle(words.begin(), words.end(), rng);
    const std::vector<std::string> ranked(words.begin(), words.begin() + 4);
    c.Expect(std::abs(Gap(ranked, w) - Gap(ranked, scaled)) < 1e-12,
             "scale " + Num(s) + " changed GAP");
  }
  const std::vector<std::string> ranked = {"b", "a", "x"};
  const double g = Gap(ranked, {{"a", 3}, {"b", 1}});
  c.Expect(std::abs(g - 0.6) <= 1e-9, "worked example gave " + Num(g));
  return c;
}

// 3. Perturbation identities and the proposal distribution.
Check Perturbation() {
  Check c;
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal(0.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> t(8), s(8);
    for (auto& v : t) v = normal(rng);
    for (auto& v : s) v = normal(rng);
    const EmbeddingVector target(t);
    const std::vector<EmbeddingVector> syn = {EmbeddingVector(s)};
    const EmbeddingVector keep = PerturbEmbedding(KeepStrategy{}, target, syn);
    const std::uint64_t seed = rng();
    c.Expect(PerturbEmbedding(MixupStrategy{1.0, {}}, target, syn) == keep, "mixup lambda=1");
    c.Expect(PerturbEmbedding(GaussianNoise{0.0, 0.0, {}, seed}, target, syn) == keep,
             "gaussian sigma=0");
    c.Expect(PerturbEmbedding(DropoutStrategy{0.0, seed}, target, syn) == keep, "dropout p=0");
    c.Expect(PerturbEmbedding(DropoutStrategy{1.0, seed}, target, syn) ==
                 PerturbEmbedding(MaskStrategy{}, target, syn),
             "dropout p=1");

    VocabularyScores scores, shifted;
    std::vector<std::string> cands;
    const double shift = normal(rng) * 50.0;
    for (int j = 0, m = 1 + static_cast<int>(rng() % 8); j < m; ++j) {
      const std::string w = "w" + std::to_string(j);
      cands.push_back(w);
      scores.scores[w] = normal(rng) * 5.0;
      shifted.scores[w] = scores.scores[w] + shift;
    }
    const auto p = CandidateSoftmax(scores, cands);
    const auto q = CandidateSoftmax(shifted, cands);
    double sum = 0.0;
    for (const auto& [w, v] : p) {
      sum += v;
      c.Expect(std::abs(v - q.at(w)) <= 1e-9, "shift changed " + w);
    }
    c.Expect(std::abs(sum - 1.0) <= 1e-9, "sum " + Num(sum));
  }
  return c;
}

// 4. Scores of a word against itself.
Check Fixpoints() {
  Check c;
  const Lexicon lexicon = LoadLexicon(testing::FixtureDir() / "lexicon.tsv");
  const std::vector<std::string> tokens = {"the", "bright", "student", "passed"};
  const TargetContext target{tokens, 1, "bright", Pos::kAdjective};
  StubPairModel pair;
  StubSentenceEncoder encoder;
  StubGlossSelector selector;
  StubTokenEncoder token_encoder;
  const double s = SentenceSimilarityScore(pair, tokens, 1, "bright");
  const double g = GlossScore(lexicon, selector, encoder, target, "bright");
  const double v = ValidationScore(token_encoder, tokens, 1, "bright").score;
  c.Expect(s == 1.0, "sentence similarity " + Num(s));
  c.Expect(g == 1.0, "gloss " + Num(g));
  c.Expect(std::abs(v - 1.0) <= 1e-9, "validation " + Num(v));
  return c;
}

// 5. End-to-end runs against the golden files.

struct GoldenRun {
  std::map<std::string, std::string> files;  // name -> bytes
};

int Cli(std::vector<std::string> args, std::string* out) {
  std::ostringstream o, e;
  const int code = cli::Run(args, o, e);
  *out = o.str();
  if (code != 0) std::cerr << e.str();
  return code;
}

// Runs the three commands in `dir` and collects every output, stdout included.
GoldenRun RunCommands(const fs::path& dir, int jobs) {
  const fs::path fx = testing::FixtureDir();
  const std::string conf = (fx / "stub.conf").string();
  const std::string inst = (fx / "instances.tsv").string();
  const std::string gold = (fx / "gold.txt").string();
  const std::string j = std::to_string(jobs);
  GoldenRun run;
  std::string out;
  for (const std::string strategy : {"mixup", "keep"}) {
    const fs::path prefix = dir / ("substitute_" + strategy);
    if (Cli({"substitute", "--config", conf, "--instances", inst, "--output",
             prefix.string(), "--strategy", strategy, "--jobs", j},
            &out) != 0) {
      return {};
    }
    run.files["substitute_" + strategy + ".stdout"] = out;
    run.files["substitute_" + strategy + ".best"] =
        testing::ReadFile(prefix.string() + ".best");
    run.files["substitute_" + strategy + ".oot"] =
        testing::ReadFile(prefix.string() + ".oot");
  }
  for (const std::string kind : {"best", "oot"}) {
    const fs::path report = dir / ("evaluate_" + kind + ".report");
    if (Cli({"evaluate", "--config", conf, "--predictions",
             (dir / ("substitute_mixup." + kind)).string(), "--gold", gold,
             "--report", report.string()},
            &out) != 0) {
      return {};
    }
    run.files["evaluate_" + kind + ".stdout"] = out;
    run.files["evaluate_" + kind + ".report"] = testing::ReadFile(report);
  }
  const fs::path ranked = dir / "rank_candidates.best";
  const fs::path report = dir / "rank_candidates.report";
  if (Cli({"rank-candidates", "--config", conf, "--instances", inst, "--gold",
           gold, "--output", ranked.string(), "--report", report.string(),
           "--jobs", j},
          &out) != 0) {
    return {};
  }
  run.files["rank_candidates.stdout"] = out;
  run.files["rank_candidates.best"] = testing::ReadFile(ranked);
  run.files["rank_candidates.report"] = testing::ReadFile(report);
  return run;
}

Check EndToEnd() {
  Check c;
  const auto start = Clock::now();
  const fs::path golden = testing::GoldenDir();
  int index = 0;
  for (const int jobs : {1, 1, 4}) {
    testing::TempDir dir;
    const GoldenRun run = RunCommands(dir.path(), jobs);
    const std::string tag = "run " + std::to_string(++index) + " (--jobs " +
                            std::to_string(jobs) + "): ";
    c.Expect(!run.files.empty(), tag + "a command failed");
    for (const auto& [name, bytes] : run.files) {
      const fs::path want = golden / name;
      c.Expect(fs::exists(want), tag + "missing golden " + name);
      c.Expect(testing::ReadFile(want) == bytes, tag + name + " differs");
    }
  }

  // Independent check of the golden evaluate report: rescore the golden
  // substitute output with the brute-force evaluator.
  const GoldSet gold = ParseGold(testing::FixtureDir() / "gold.txt");
  const auto preds = ParsePredictions(golden / "substitute_mixup.oot");
  std::vector<oracle::Item> items;
  for (const auto& [ref, g] : gold) {
    oracle::Item item{g.weights, {}};
    for (const auto& p : preds) {
      if (p.key == ref.key && p.instance_id == ref.id) item.guesses = p.guesses;
    }
    items.push_back(item);
  }
  const auto report = EvaluateDataset(preds, gold, EvaluationMode::kGeneration);
  c.Expect(std::abs(report.oot - oracle::Oot(items)) <= 1e-9, "golden oot disagrees with oracle");

  const double t = Seconds(start);
  c.Expect(t < 30.0, "took " + Num(t) + " s");
  return c;
}

int UpdateGolden() {
  testing::TempDir dir;
  const GoldenRun run = RunCommands(dir.path(), 1);
  if (run.files.empty()) return 1;
  fs::create_directories(testing::GoldenDir());
  for (const auto& [name, bytes] : run.files) {
    testing::WriteFile(testing::GoldenDir() / name, bytes);
    std::cout << "wrote " << name << "\n";
  }
  return 0;
}

// 6. Ranking invariances on random component scores.
Check RankingInvariance() {
  Check c;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<ScoredCandidate> cands;
    for (int j = 0, m = 2 + static_cast<int>(rng() % 10); j < m; ++j) {
      cands.push_back({"c" + std::to_string(j), unit(rng), unit(rng), unit(rng), unit(rng), 0.0});
    }
    std::vector<ScoredCandidate> by_proposal = cands;
    ApplyWeights({1, 0, 0, 0}, &by_proposal);
    std::vector<ScoredCandidate> expect = cands;
    std::stable_sort(expect.begin(), expect.end(), [](const auto& a, const auto& b) {
      return a.proposal != b.proposal ? a.proposal > b.proposal : a.word < b.word;
    });
    for (std::size_t i = 0; i < cands.size(); ++i) {
      c.Expect(by_proposal[i].word == expect[i].word,
               "fixture " + std::to_string(trial) + ": proposal order");
    }

    const CombinationWeights w{unit(rng), unit(rng), unit(rng), unit(rng)};
    const CombinationWeights scaled{w.proposal * 7.3, w.gloss * 7.3,
                                    w.sentence * 7.3, w.validation * 7.3};
    std::vector<ScoredCandidate> a = cands, b = cands;
    ApplyWeights(w, &a);
    ApplyWeights(scaled, &b);
    for (std::size_t i = 0; i < cands.size(); ++i) {
      c.Expect(a[i].word == b[i].word, "fixture " + std::to_string(trial) + ": scaled order");
    }
  }
  return c;
}

// 7. Back-translation falls back to the second hop only when needed.
Check BackTranslationCalls() {
  Check c;
  StubTranslator translator(
      StubTranslator::ReadTable(testing::FixtureDir() / "translations.tsv"));
  const TranslationRoutes routes;
  const struct {
    std::string text;
    std::size_t calls;
  } cases[] = {{"bread and butter", 2}, {"the cat", 5}, {"xyz", 5}};
  for (const auto& k : cases) {
    translator.ClearLog();
    BackTranslate(translator, k.text, routes);
    const std::size_t n = translator.call_log().size();
    c.Expect(n == k.calls, "'" + k.text + "': " + std::to_string(n) + " calls");
  }
  return c;
}

// 8. Sampling uniformity and augmentation reproducibility.
Check Augmentation() {
  Check c;
  const std::vector<double> probs = SamplingDistribution({0.4, 0.4, 0.4, 0.4});
  SeededRandom random(8);
  std::vector<double> counts(4, 0.0);
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) counts[SampleIndex(probs, random)] += 1.0;
  double chi2 = 0.0;
  for (const double o : counts) chi2 += (o - draws / 4.0) * (o - draws / 4.0) / (draws / 4.0);
  // Critical value of chi-square with 3 degrees of freedom at p = 0.001.
  c.Expect(chi2 < 16.266, "chi2 " + Num(chi2));

  const RunConfig config =
      ConfigValues::FromFile(testing::FixtureDir() / "stub.conf").Resolve();
  const Backends backends = BuildBackends(config);
  const Pipeline pipeline = backends.MakePipeline(config);
  testing::TempDir dir;
  AugmentOptions options;
  options.per_example = 3;
  options.seed = 1234;
  const fs::path input = testing::FixtureDir() / "labeled.tsv";
  AugmentDataset(pipeline, input, dir / "a.tsv", options);
  options.jobs = 4;
  AugmentDataset(pipeline, input, dir / "b.tsv", options);
  const std::string a = testing::ReadFile(dir / "a.tsv");
  c.Expect(!a.empty(), "empty augmentation output");
  c.Expect(a == testing::ReadFile(dir / "b.tsv"), "fixed seed gave different files");
  return c;
}

// 9. Smoke run against externally served backends.
// LEXSUB_EXTERNAL_BACKEND=<url> routes every backend through that server.
std::optional<Check> ExternalSmoke() {
  const char* url = std::getenv("LEXSUB_EXTERNAL_BACKEND");
  if (url == nullptr || *url == '\0') return std::nullopt;
  Check c;
  const fs::path fx = testing::FixtureDir();
  testing::TempDir dir;
  std::vector<std::string> args = {
      "substitute", "--config", (fx / "stub.conf").string(), "--instances",
      (fx / "instances.tsv").string(), "--output", (dir / "out").string()};
  for (const char* key : {"predictor", "sentence_encoder", "pair_model",
                          "gloss_selector", "translator", "token_encoder"}) {
    args.push_back("--set");
    args.push_back(std::string("backend.") + key + "=external:" + url);
  }
  std::string out;
  c.Expect(Cli(args, &out) == 0, "substitute failed");
  c.Expect(!testing::ReadFile(dir / "out.best").empty(), "no predictions");
  return c;
}

int Main(int argc, char** argv) {
  if (argc > 1 && std::string(argv[1]) == "--update-golden") return UpdateGolden();

  const std::vector<std::pair<std::string, std::function<Check()>>> gating = {
      {"1 metric oracle", MetricOracle},
      {"2 gap properties", GapProperties},
      {"3 perturbation identities", Perturbation},
      {"4 identity fixpoints", Fixpoints},
      {"5 end-to-end determinism", EndToEnd},
      {"6 ranking invariances", RankingInvariance},
      {"7 back-translation calls", BackTranslationCalls},
      {"8 augmentation", Augmentation},
  };
  bool all_ok = true;
  for (const auto& [name, fn] : gating) {
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.Expect(false, std::string("exception: ") + e.what());
    }
    all_ok = all_ok && c.ok();
    std::cout << (c.ok() ? "PASS " : "FAIL ") << name << c.Summary() << std::endl;
  }
  std::optional<Check> smoke;
  try {
    smoke = ExternalSmoke();
  } catch (const std::exception& e) {
    smoke = Check();
    smoke->Expect(false, std::string("exception: ") + e.what());
  }
  if (!smoke) {
    std::cout << "SKIP 9 external backends (LEXSUB_EXTERNAL_BACKEND not set)\n";
  } else {
    std::cout << (smoke->ok() ? "PASS " : "FAIL ") << "9 external backends"
              << smoke->Summary() << " (not gating)\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace
}  // namespace lexsub

int main(int argc, char** argv) { return lexsub::Main(argc, argv); }
