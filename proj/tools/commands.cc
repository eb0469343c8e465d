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

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lexsub/augment.h"
#include "lexsub/config.h"
#include "lexsub/dataset_io.h"
#include "lexsub/metrics.h"
#include "lexsub/parallel.h"
#include "lexsub/ranking.h"
#include "lexsub/sentence_scorer.h"

namespace lexsub::cli {
namespace {

namespace fs = std::filesystem;

struct CommonFlags {
  std::string config;
  std::vector<std::string> overrides;
  std::string strategy;
  std::size_t jobs = 1;
  bool strict = false;
};

std::string ConfigKeyHelp() {
  std::ostringstream s;
  s << "Config keys (file lines `key = value`, or --set key=value):\n";
  for (const ConfigKey& k : KnownConfigKeys()) {
    s << "  " << k.name;
    for (std::size_t i = k.name.size(); i < 30; ++i) s << ' ';
    s << k.help;
    if (!k.default_value.empty()) s << " [default: " << k.default_value << "]";
    s << '\n';
  }
  return s.str();
}

void AddCommonFlags(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--config", flags->config, "key = value config file")
      ->check(CLI::ExistingFile);
  cmd->add_option("--set", flags->overrides, "override a config key (key=value)");
  cmd->add_option("--strategy", flags->strategy,
                  "proposal strategy: mixup | gaussian | dropout | mask | keep");
  cmd->add_option("--jobs", flags->jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--strict", flags->strict, "fail on the first instance error");
  cmd->footer(ConfigKeyHelp());
}

RunConfig LoadConfig(const CommonFlags& flags) {
  ConfigValues values = flags.config.empty()
                            ? ConfigValues::FromString("", fs::current_path())
                            : ConfigValues::FromFile(flags.config);
  for (const std::string& o : flags.overrides) values.Set(o);
  if (!flags.strategy.empty()) values.Set("proposal.strategy", flags.strategy);
  return values.Resolve();
}

void ReportFailures(const std::vector<std::string>& failures,
                    std::ostream& err) {
  for (const std::string& f : failures) err << "error: " << f << '\n';
}

// Ranks every instance's candidate list. Per-instance failures land in
// `failures` in input order; those instances are left out of the result.
std::vector<PredictionRecord> RankInstances(
    const Pipeline& pipeline, const std::vector<LexSubInstance>& instances,
    const std::map<std::string, std::set<std::string>>* pools, std::size_t jobs,
    std::vector<std::string>* failures) {
  struct Slot {
    std::optional<PredictionRecord> record;
    std::string error;
  };
  std::vector<Slot> slots(instances.size());
  ParallelFor(instances.size(), jobs, [&](std::size_t i) {
    const LexSubInstance& inst = instances[i];
    try {
      const TargetContext target = MakeTargetContext(inst);
      std::vector<std::string> candidates;
      if (pools == nullptr) {
        candidates = GenerateCandidates(pipeline.scorers.lexicon,
                                        pipeline.scorers.predictor, target,
                                        pipeline.k, pipeline.scorers.strategy);
      } else if (const auto it = pools->find(inst.key); it != pools->end()) {
        candidates.assign(it->second.begin(), it->second.end());
      }
      if (candidates.empty()) {
        slots[i].error = "no candidates";
        return;
      }
      PredictionRecord record{inst.key, inst.instance_id, {}};
      for (const ScoredCandidate& c :
           Rank(pipeline.weights, pipeline.scorers, target, candidates)) {
        record.guesses.push_back(c.word);
      }
      slots[i].record = std::move(record);
    } catch (const std::exception& e) {
      slots[i].error = e.what();
    }
  });
  std::vector<PredictionRecord> out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].record) {
      out.push_back(std::move(*slots[i].record));
    } else {
      failures->push_back(ToString(instances[i].ref()) + ": " + slots[i].error);
    }
  }
  return out;
}

void WriteReportFiles(const EvaluationReport& report, const std::string& text,
                      const std::string& json) {
  if (!text.empty()) {
    std::ofstream f(text, std::ios::binary);
    if (!f) throw ValidationError("cannot write " + text);
    WriteReportText(report, f);
  }
  if (!json.empty()) {
    std::ofstream f(json, std::ios::binary);
    if (!f) throw ValidationError("cannot write " + json);
    WriteReportJson(report, f);
  }
}

int Substitute(const CommonFlags& flags, const std::string& instances_path,
               const std::string& prefix, std::ostream& out,
               std::ostream& err) {
  const RunConfig config = LoadConfig(flags);
  const std::vector<LexSubInstance> instances = ParseInstances(instances_path);
  const Backends backends = BuildBackends(config);
  const Pipeline pipeline = backends.MakePipeline(config);

  std::vector<std::string> failures;
  const std::vector<PredictionRecord> ranked =
      RankInstances(pipeline, instances, nullptr, flags.jobs, &failures);
  ReportFailures(failures, err);
  if (flags.strict && !failures.empty()) return kExitRunError;

  std::vector<PredictionRecord> best, oot;
  for (const PredictionRecord& r : ranked) {
    best.push_back({r.key, r.instance_id, {r.guesses.front()}});
    PredictionRecord top = r;
    if (top.guesses.size() > kOotMaxGuesses) top.guesses.resize(kOotMaxGuesses);
    oot.push_back(std::move(top));
  }
  WritePredictions(best, PredictionMode::kBest, prefix + ".best");
  WritePredictions(oot, PredictionMode::kOot, prefix + ".oot");
  out << "instances\t" << instances.size() << "\npredicted\t" << ranked.size()
      << "\nfailed\t" << failures.size() << '\n';
  return kExitOk;
}

int Evaluate(const CommonFlags& flags, const std::string& predictions_path,
             const std::string& gold_path, const std::string& mode_name,
             bool coverage_only, const std::string& report_path,
             const std::string& json_path, std::ostream& out,
             std::ostream& err) {
  const RunConfig config = LoadConfig(flags);
  MetricOptions options = config.metrics;
  if (coverage_only) options.coverage_only = true;
  const EvaluationMode mode = mode_name == "ranking"
                                  ? EvaluationMode::kRanking
                                  : EvaluationMode::kGeneration;
  const EvaluationReport report = EvaluateDataset(
      ParsePredictions(predictions_path), ParseGold(gold_path), mode, options);
  ReportFailures(report.errors, err);
  WriteReportText(report, out);
  WriteReportFiles(report, report_path, json_path);
  return report.errors.empty() ? kExitOk : kExitRunError;
}

int RankCandidates(const CommonFlags& flags, const std::string& instances_path,
                   const std::string& gold_path, const std::string& output,
                   const std::string& report_path,
                   const std::string& json_path, std::ostream& out,
                   std::ostream& err) {
  const RunConfig config = LoadConfig(flags);
  const std::vector<LexSubInstance> instances = ParseInstances(instances_path);
  const GoldSet gold = ParseGold(gold_path);
  const Backends backends = BuildBackends(config);
  const Pipeline pipeline = backends.MakePipeline(config);
  const auto pools = BuildCandidatePools(gold);

  std::vector<std::string> failures;
  const std::vector<PredictionRecord> ranked =
      RankInstances(pipeline, instances, &pools, flags.jobs, &failures);
  ReportFailures(failures, err);
  if (flags.strict && !failures.empty()) return kExitRunError;
  WritePredictions(ranked, PredictionMode::kBest, output);

  const EvaluationReport report =
      EvaluateDataset(ranked, gold, EvaluationMode::kRanking, config.metrics);
  ReportFailures(report.errors, err);
  WriteReportText(report, out);
  WriteReportFiles(report, report_path, json_path);
  return kExitOk;
}

int BuildStsData(const CommonFlags& flags, const std::string& instances_path,
                 const std::string& gold_path, const std::string& output,
                 std::ostream& out) {
  const RunConfig config = LoadConfig(flags);
  const std::vector<LexSubInstance> instances = ParseInstances(instances_path);
  const GoldSet gold = ParseGold(gold_path);
  const Backends backends = BuildBackends(config);
  const std::vector<SentencePairExample> pairs =
      BuildStsPairs(instances, gold, *backends.lexicon, *backends.gloss_selector,
                    *backends.translator, config.sts);
  WriteStsPairs(pairs, fs::path(output));
  out << "pairs\t" << pairs.size() << '\n';
  return kExitOk;
}

int Finetune(const CommonFlags& flags, const std::string& pairs_path,
             std::ostream& out) {
  const RunConfig config = LoadConfig(flags);
  const std::vector<SentencePairExample> pairs = ReadStsPairs(pairs_path);
  const Backends backends = BuildBackends(config);
  FinetuneSimilarity(*backends.pair_model, pairs, config.epochs);
  out << "pairs\t" << pairs.size() << "\nepochs\t" << config.epochs << '\n';
  return kExitOk;
}

int Augment(const CommonFlags& flags, const std::string& input,
            const std::string& output, std::size_t per_example,
            std::uint64_t seed, std::ostream& out, std::ostream& err) {
  const RunConfig config = LoadConfig(flags);
  const Backends backends = BuildBackends(config);
  const Pipeline pipeline = backends.MakePipeline(config);
  AugmentOptions options;
  options.per_example = per_example;
  options.seed = seed;
  options.jobs = flags.jobs;
  options.strict = flags.strict;
  const AugmentStats stats = AugmentDataset(pipeline, input, output, options);
  ReportFailures(stats.failures, err);
  out << "lines\t" << stats.input_lines << "\nvariants\t"
      << stats.written_variants << "\nfailed\t" << stats.failures.size()
      << '\n';
  return kExitOk;
}

int Tune(const CommonFlags& flags, const std::string& instances_path,
         const std::string& gold_path, std::ostream& out) {
  const RunConfig config = LoadConfig(flags);
  const std::vector<LexSubInstance> instances = ParseInstances(instances_path);
  const GoldSet gold = ParseGold(gold_path);
  const Backends backends = BuildBackends(config);
  const TuneResult result = TuneWeights(
      instances, gold, backends.MakeScorers(config), config.grid_step, config.k);
  out << "weights.proposal = " << FormatDouble(result.weights.proposal)
      << "\nweights.gloss = " << FormatDouble(result.weights.gloss)
      << "\nweights.sentence = " << FormatDouble(result.weights.sentence)
      << "\nweights.validation = " << FormatDouble(result.weights.validation)
      << "\n# best = " << FormatFixed(result.best_score, 6)
      << " over " << result.tuples_evaluated << " weight tuples\n";
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Lexical substitution toolkit", "lexsub"};
  app.footer(ConfigKeyHelp());
  app.require_subcommand(1);

  CommonFlags flags;
  std::string instances, gold, output, predictions, report, report_json,
      pairs, input;
  std::string mode = "generation";
  bool coverage_only = false;
  std::size_t per_example = 1;
  std::uint64_t seed = 0;

  auto* substitute =
      app.add_subcommand("substitute", "generate and rank substitutes");
  AddCommonFlags(substitute, &flags);
  substitute->add_option("--instances", instances)->required()->check(CLI::ExistingFile);
  substitute->add_option("--output", output, "writes OUTPUT.best and OUTPUT.oot")
      ->required();

  auto* evaluate = app.add_subcommand("evaluate", "score a prediction file");
  AddCommonFlags(evaluate, &flags);
  evaluate->add_option("--predictions", predictions)->required()->check(CLI::ExistingFile);
  evaluate->add_option("--gold", gold)->required()->check(CLI::ExistingFile);
  evaluate->add_option("--mode", mode)
      ->check(CLI::IsMember({"generation", "ranking"}));
  evaluate->add_flag("--coverage-only", coverage_only,
                     "average over predicted instances only");
  evaluate->add_option("--report", report, "also write the text report here");
  evaluate->add_option("--report-json", report_json, "write a JSON report");

  auto* rank = app.add_subcommand("rank-candidates",
                                  "rank the gold candidate pool of each instance");
  AddCommonFlags(rank, &flags);
  rank->add_option("--instances", instances)->required()->check(CLI::ExistingFile);
  rank->add_option("--gold", gold)->required()->check(CLI::ExistingFile);
  rank->add_option("--output", output)->required();
  rank->add_option("--report", report, "also write the text report here");
  rank->add_option("--report-json", report_json, "write a JSON report");

  auto* sts = app.add_subcommand("build-sts-data",
                                 "build sentence-pair fine-tuning data");
  AddCommonFlags(sts, &flags);
  sts->add_option("--instances", instances)->required()->check(CLI::ExistingFile);
  sts->add_option("--gold", gold)->required()->check(CLI::ExistingFile);
  sts->add_option("--output", output)->required();

  auto* finetune =
      app.add_subcommand("finetune", "fine-tune the sentence-pair model");
  AddCommonFlags(finetune, &flags);
  finetune->add_option("--pairs", pairs)->required()->check(CLI::ExistingFile);

  auto* augment = app.add_subcommand("augment", "augment labeled text");
  AddCommonFlags(augment, &flags);
  augment->add_option("--input", input)->required()->check(CLI::ExistingFile);
  augment->add_option("--output", output)->required();
  augment->add_option("--per-example", per_example)->check(CLI::NonNegativeNumber);
  augment->add_option("--seed", seed);

  auto* tune = app.add_subcommand("tune-weights",
                                  "grid-search the combination weights");
  AddCommonFlags(tune, &flags);
  tune->add_option("--instances", instances)->required()->check(CLI::ExistingFile);
  tune->add_option("--gold", gold)->required()->check(CLI::ExistingFile);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (substitute->parsed()) return Substitute(flags, instances, output, out, err);
    if (evaluate->parsed()) {
      return Evaluate(flags, predictions, gold, mode, coverage_only, report,
                      report_json, out, err);
    }
    if (rank->parsed()) {
      return RankCandidates(flags, instances, gold, output, report,
                            report_json, out, err);
    }
    if (sts->parsed()) return BuildStsData(flags, instances, gold, output, out);
    if (finetune->parsed()) return Finetune(flags, pairs, out);
    if (augment->parsed()) {
      return Augment(flags, input, output, per_example, seed, out, err);
    }
    if (tune->parsed()) return Tune(flags, instances, gold, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRunError;
  }
  return kExitUsage;
}

}  // namespace lexsub::cli
