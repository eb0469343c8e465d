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

#include "lexsub/simd/kernels.h"

#include <cmath>

namespace lexsub::simd {
namespace {

// Reductions keep four running lanes (element i of a full block of four goes
// to lane i % 4), fold them as (l0 + l2) + (l1 + l3), then add the tail in
// order. Every multiply-add is fused. The vector variants follow the same
// order, so all tables return identical bits.
inline double Fold(const double lane[4]) {
  return (lane[0] + lane[2]) + (lane[1] + lane[3]);
}

double DotScalar(const double* a, const double* b, std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int j = 0; j < 4; ++j) lane[j] = std::fma(a[i + j], b[i + j], lane[j]);
  }
  double sum = Fold(lane);
  for (; i < n; ++i) sum = std::fma(a[i], b[i], sum);
  return sum;
}

double SquaredDistanceScalar(const double* a, const double* b, std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int j = 0; j < 4; ++j) {
      const double d = a[i + j] - b[i + j];
      lane[j] = std::fma(d, d, lane[j]);
    }
  }
  double sum = Fold(lane);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    sum = std::fma(d, d, sum);
  }
  return sum;
}

PairMoments MomentsScalar(const double* a, const double* b, std::size_t n) {
  double dot[4] = {0.0, 0.0, 0.0, 0.0};
  double na[4] = {0.0, 0.0, 0.0, 0.0};
  double nb[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int j = 0; j < 4; ++j) {
      dot[j] = std::fma(a[i + j], b[i + j], dot[j]);
      na[j] = std::fma(a[i + j], a[i + j], na[j]);
      nb[j] = std::fma(b[i + j], b[i + j], nb[j]);
    }
  }
  PairMoments m{Fold(dot), Fold(na), Fold(nb)};
  for (; i < n; ++i) {
    m.dot = std::fma(a[i], b[i], m.dot);
    m.norm_a = std::fma(a[i], a[i], m.norm_a);
    m.norm_b = std::fma(b[i], b[i], m.norm_b);
  }
  return m;
}

void AxpbyScalar(double alpha, const double* x, double beta, const double* y,
                 double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::fma(alpha, x[i], beta * y[i]);
}

void AccumulateScalar(const double* x, double* acc, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += x[i];
}

void ScaleScalar(double alpha, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

}  // namespace

const KernelTable& ScalarKernels() {
  static const KernelTable table{
      Isa::kScalar,     DotScalar,        SquaredDistanceScalar,
      MomentsScalar,    AxpbyScalar,      AccumulateScalar,
      ScaleScalar,
  };
  return table;
}

}  // namespace lexsub::simd
