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

#include "lexsub/metrics.h"

#include <algorithm>
#include <functional>
#include <ostream>
#include <set>
#include <unordered_set>

#include "json.hpp"

namespace lexsub {
namespace {

// Gold weights merged under lowercase keys.
struct NormalizedGold {
  std::map<std::string, double> weights;
  double total = 0.0;
  std::optional<std::string> mode;
};

NormalizedGold Normalize(const GoldAnnotations& gold) {
  NormalizedGold out;
  for (const auto& [sub, w] : gold.weights) {
    out.weights[ToLower(sub)] += w;
    out.total += w;
  }
  double top = 0.0;
  std::size_t count = 0;
  for (const auto& [sub, w] : out.weights) {
    if (w > top) {
      top = w;
      count = 1;
      out.mode = sub;
    } else if (w == top) {
      ++count;
    }
  }
  if (count != 1) out.mode.reset();
  return out;
}

double WeightOf(const NormalizedGold& gold, const std::string& lowered) {
  const auto it = gold.weights.find(lowered);
  return it == gold.weights.end() ? 0.0 : it->second;
}

std::vector<std::string> LowerGuesses(const PredictionRecord& p) {
  std::vector<std::string> out;
  out.reserve(p.guesses.size());
  std::unordered_set<std::string> seen;
  for (const std::string& g : p.guesses) {
    std::string lower = ToLower(g);
    if (!seen.insert(lower).second) {
      throw ValidationError("duplicate guess '" + g + "' for " + p.key + " " +
                            std::to_string(p.instance_id));
    }
    out.push_back(std::move(lower));
  }
  return out;
}

const GoldAnnotations& GoldFor(const GoldSet& gold, const PredictionRecord& p) {
  const auto it = gold.find({p.key, p.instance_id});
  if (it == gold.end()) {
    throw ValidationError("prediction for " + p.key + " " +
                          std::to_string(p.instance_id) + " has no gold entry");
  }
  return it->second;
}

void CheckUniqueRefs(const std::vector<PredictionRecord>& records) {
  std::set<InstanceRef> seen;
  for (const PredictionRecord& p : records) {
    if (!seen.insert({p.key, p.instance_id}).second) {
      throw ValidationError("more than one prediction for " + p.key + " " +
                            std::to_string(p.instance_id));
    }
  }
}

std::size_t ModeBearing(const GoldSet& gold) {
  std::size_t n = 0;
  for (const auto& [ref, entry] : gold) n += GoldMode(entry).has_value();
  return n;
}

double Percent(double sum, std::size_t denominator) {
  return denominator == 0 ? 0.0 : 100.0 * sum / static_cast<double>(denominator);
}

// Shared driver for best and oot: item(guesses, gold) gives the per-item
// score and mode_hit(guesses, mode) the mode credit.
template <typename ItemFn, typename ModeFn>
std::pair<double, double> Aggregate(
    const std::vector<PredictionRecord>& predictions, const GoldSet& gold,
    const MetricOptions& options, std::size_t* instances,
    std::size_t* mode_instances, ItemFn item, ModeFn mode_hit) {
  CheckUniqueRefs(predictions);
  double item_sum = 0.0;
  double mode_sum = 0.0;
  std::size_t predicted_modes = 0;
  for (const PredictionRecord& p : predictions) {
    const NormalizedGold g = Normalize(GoldFor(gold, p));
    if (p.guesses.empty()) {
      throw ValidationError("prediction for " + p.key + " " +
                            std::to_string(p.instance_id) + " has no guesses");
    }
    const std::vector<std::string> guesses = LowerGuesses(p);
    item_sum += item(guesses, g);
    if (g.mode) {
      ++predicted_modes;
      mode_sum += mode_hit(guesses, *g.mode) ? 1.0 : 0.0;
    }
  }
  *instances = options.coverage_only ? predictions.size() : gold.size();
  *mode_instances = options.coverage_only ? predicted_modes : ModeBearing(gold);
  return {Percent(item_sum, *instances), Percent(mode_sum, *mode_instances)};
}

}  // namespace

std::optional<std::string> GoldMode(const GoldAnnotations& gold) {
  return Normalize(gold).mode;
}

BestScores ComputeBestScores(const std::vector<PredictionRecord>& predictions,
                             const GoldSet& gold, const MetricOptions& options) {
  BestScores out;
  std::tie(out.best, out.best_mode) = Aggregate(
      predictions, gold, options, &out.instances, &out.mode_instances,
      [](const std::vector<std::string>& guesses, const NormalizedGold& g) {
        double credit = 0.0;
        for (const std::string& guess : guesses) credit += WeightOf(g, guess);
        return credit / (static_cast<double>(guesses.size()) * g.total);
      },
      [](const std::vector<std::string>& guesses, const std::string& mode) {
        return guesses.front() == mode;
      });
  return out;
}

OotScores ComputeOotScores(const std::vector<PredictionRecord>& predictions,
                           const GoldSet& gold, const MetricOptions& options) {
  for (const PredictionRecord& p : predictions) {
    if (p.guesses.size() > kOotMaxGuesses) {
      throw ValidationError("oot prediction for " + p.key + " " +
                            std::to_string(p.instance_id) + " has " +
                            std::to_string(p.guesses.size()) + " guesses");
    }
  }
  OotScores out;
  std::tie(out.oot, out.oot_mode) = Aggregate(
      predictions, gold, options, &out.instances, &out.mode_instances,
      [](const std::vector<std::string>& guesses, const NormalizedGold& g) {
        double credit = 0.0;
        for (const std::string& guess : guesses) credit += WeightOf(g, guess);
        return credit / g.total;
      },
      [](const std::vector<std::string>& guesses, const std::string& mode) {
        return std::find(guesses.begin(), guesses.end(), mode) != guesses.end();
      });
  return out;
}

double PrecisionAt1(const std::vector<PredictionRecord>& rankings,
                    const GoldSet& gold, const MetricOptions& options) {
  CheckUniqueRefs(rankings);
  double hits = 0.0;
  for (const PredictionRecord& r : rankings) {
    const NormalizedGold g = Normalize(GoldFor(gold, r));
    if (!r.guesses.empty() && WeightOf(g, ToLower(r.guesses.front())) > 0.0) {
      hits += 1.0;
    }
  }
  return Percent(hits, options.coverage_only ? rankings.size() : gold.size());
}

double Gap(std::span<const std::string> ranked,
           const std::map<std::string, double>& gold_weights) {
  if (gold_weights.empty()) throw ValidationError("GAP needs gold weights");
  std::vector<double> ideal;
  ideal.reserve(gold_weights.size());
  for (const auto& [word, w] : gold_weights) {
    if (!(w > 0.0)) throw ValidationError("GAP gold weights must be positive");
    ideal.push_back(w);
  }
  std::sort(ideal.begin(), ideal.end(), std::greater<>());
  double denominator = 0.0;
  double cumulative = 0.0;
  for (std::size_t r = 0; r < ideal.size(); ++r) {
    cumulative += ideal[r];
    denominator += cumulative / static_cast<double>(r + 1);
  }

  std::unordered_set<std::string> seen;
  double numerator = 0.0;
  cumulative = 0.0;
  for (std::size_t k = 0; k < ranked.size(); ++k) {
    if (!seen.insert(ranked[k]).second) {
      throw ValidationError("duplicate candidate '" + ranked[k] +
                            "' in GAP ranking");
    }
    const auto it = gold_weights.find(ranked[k]);
    if (it == gold_weights.end()) continue;
    cumulative += it->second;
    numerator += cumulative / static_cast<double>(k + 1);
  }
  return numerator / denominator;
}

EvaluationReport EvaluateDataset(const std::vector<PredictionRecord>& rankings,
                                 const GoldSet& gold, EvaluationMode mode,
                                 const MetricOptions& options) {
  EvaluationReport report;
  report.mode = mode;

  // Screen out records that cannot be scored; keep the rest.
  std::vector<PredictionRecord> clean;
  std::set<InstanceRef> seen;
  for (const PredictionRecord& r : rankings) {
    const InstanceRef ref{r.key, r.instance_id};
    const std::string name = ToString(ref);
    if (!gold.contains(ref)) {
      report.errors.push_back(name + ": no gold entry");
    } else if (!seen.insert(ref).second) {
      report.errors.push_back(name + ": duplicate prediction");
    } else if (r.guesses.empty()) {
      report.errors.push_back(name + ": empty ranking");
    } else {
      try {
        LowerGuesses(r);
        clean.push_back(r);
      } catch (const ValidationError& e) {
        report.errors.push_back(name + ": " + e.what());
      }
    }
  }

  if (mode == EvaluationMode::kGeneration) {
    std::vector<PredictionRecord> best_guess;
    std::vector<PredictionRecord> top_ten;
    for (const PredictionRecord& r : clean) {
      best_guess.push_back({r.key, r.instance_id, {r.guesses.front()}});
      PredictionRecord oot = r;
      if (oot.guesses.size() > kOotMaxGuesses) oot.guesses.resize(kOotMaxGuesses);
      top_ten.push_back(std::move(oot));
    }
    const BestScores best = ComputeBestScores(best_guess, gold, options);
    const OotScores oot = ComputeOotScores(top_ten, gold, options);
    report.best = best.best;
    report.best_mode = best.best_mode;
    report.oot = oot.oot;
    report.oot_mode = oot.oot_mode;
    report.p_at_1 = PrecisionAt1(best_guess, gold, options);
    report.instances = best.instances;
    report.mode_instances = best.mode_instances;
    return report;
  }

  std::map<InstanceRef, const PredictionRecord*> by_ref;
  for (const PredictionRecord& r : clean) by_ref[{r.key, r.instance_id}] = &r;
  double gap_sum = 0.0;
  std::size_t retained = 0;
  std::size_t predicted = 0;
  for (const auto& [ref, entry] : gold) {
    std::map<std::string, double> weights;
    for (const auto& [sub, w] : entry.weights) {
      if (!ContainsWhitespace(sub)) weights[ToLower(sub)] += w;
    }
    if (weights.empty()) continue;
    ++retained;
    const auto it = by_ref.find(ref);
    if (it == by_ref.end()) continue;
    ++predicted;
    std::vector<std::string> ranked;
    for (const std::string& c : it->second->guesses) ranked.push_back(ToLower(c));
    gap_sum += Gap(ranked, weights);
  }
  report.instances = options.coverage_only ? predicted : retained;
  report.gap = report.instances == 0
                   ? 0.0
                   : gap_sum / static_cast<double>(report.instances);
  return report;
}

void WriteReportText(const EvaluationReport& report, std::ostream& out) {
  const auto line = [&](const char* name, double value) {
    out << name << '\t' << FormatFixed(value, 6) << '\n';
  };
  if (report.mode == EvaluationMode::kGeneration) {
    line("best", report.best);
    line("best_mode", report.best_mode);
    line("oot", report.oot);
    line("oot_mode", report.oot_mode);
    line("p_at_1", report.p_at_1);
    out << "instances\t" << report.instances << '\n';
    out << "mode_instances\t" << report.mode_instances << '\n';
  } else {
    line("gap", report.gap);
    line("gap_percent", 100.0 * report.gap);
    out << "instances\t" << report.instances << '\n';
  }
  out << "errors\t" << report.errors.size() << '\n';
}

void WriteReportJson(const EvaluationReport& report, std::ostream& out) {
  nlohmann::ordered_json j;
  if (report.mode == EvaluationMode::kGeneration) {
    j["mode"] = "generation";
    j["best"] = report.best;
    j["best_mode"] = report.best_mode;
    j["oot"] = report.oot;
    j["oot_mode"] = report.oot_mode;
    j["p_at_1"] = report.p_at_1;
    j["instances"] = report.instances;
    j["mode_instances"] = report.mode_instances;
  } else {
    j["mode"] = "ranking";
    j["gap"] = report.gap;
    j["gap_percent"] = 100.0 * report.gap;
    j["instances"] = report.instances;
  }
  j["errors"] = report.errors;
  out << j.dump(2) << '\n';
}

}  // namespace lexsub
