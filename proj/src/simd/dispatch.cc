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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "lexsub/simd/kernels.h"

namespace lexsub::simd {
namespace {

const KernelTable& SelectKernels() {
  const char* forced = std::getenv("LEXSUB_SIMD");
  if (forced != nullptr && std::string(forced) == "scalar") {
    return ScalarKernels();
  }
  if (const KernelTable* t = Avx2Kernels()) return *t;
  if (const KernelTable* t = NeonKernels()) return *t;
  return ScalarKernels();
}

void CheckSameLength(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("vector length mismatch: " + std::to_string(a) +
                                " vs " + std::to_string(b));
  }
}

}  // namespace

std::string_view IsaName(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

std::vector<const KernelTable*> AvailableKernels() {
  std::vector<const KernelTable*> tables{&ScalarKernels()};
  if (const KernelTable* t = Avx2Kernels()) tables.push_back(t);
  if (const KernelTable* t = NeonKernels()) tables.push_back(t);
  return tables;
}

const KernelTable& Active() {
  static const KernelTable& table = SelectKernels();
  return table;
}

double Dot(std::span<const double> a, std::span<const double> b) {
  CheckSameLength(a.size(), b.size());
  return Active().dot(a.data(), b.data(), a.size());
}

double SquaredNorm(std::span<const double> a) {
  return Active().dot(a.data(), a.data(), a.size());
}

double Norm(std::span<const double> a) { return std::sqrt(SquaredNorm(a)); }

double Distance(std::span<const double> a, std::span<const double> b) {
  CheckSameLength(a.size(), b.size());
  return std::sqrt(Active().squared_distance(a.data(), b.data(), a.size()));
}

double Cosine(std::span<const double> a, std::span<const double> b) {
  CheckSameLength(a.size(), b.size());
  const PairMoments m = Active().moments(a.data(), b.data(), a.size());
  if (m.norm_a == 0.0 || m.norm_b == 0.0) return 0.0;
  const double c = m.dot / (std::sqrt(m.norm_a) * std::sqrt(m.norm_b));
  return std::clamp(c, -1.0, 1.0);
}

void Axpby(double alpha, std::span<const double> x, double beta,
           std::span<const double> y, std::span<double> out) {
  CheckSameLength(x.size(), y.size());
  CheckSameLength(x.size(), out.size());
  Active().axpby(alpha, x.data(), beta, y.data(), out.data(), x.size());
}

void Accumulate(std::span<const double> x, std::span<double> acc) {
  CheckSameLength(x.size(), acc.size());
  Active().accumulate(x.data(), acc.data(), x.size());
}

void Scale(double alpha, std::span<double> x) {
  Active().scale(alpha, x.data(), x.size());
}

void SoftmaxInPlace(std::span<double> logits) {
  if (logits.empty()) return;
  const double max = *std::max_element(logits.begin(), logits.end());
  double total = 0.0;
  for (double& v : logits) {
    v = std::exp(v - max);
    total += v;
  }
  Scale(1.0 / total, logits);
}

}  // namespace lexsub::simd
