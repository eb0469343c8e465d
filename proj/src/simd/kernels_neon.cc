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

// NEON kernels for aarch64, where Advanced SIMD is architecturally
// guaranteed and needs no runtime check.

#include "lexsub/simd/kernels.h"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>

namespace lexsub::simd {
namespace {

// Two accumulators hold lanes (l0, l1) and (l2, l3) of each block of four, so
// the fold (l0 + l2) + (l1 + l3) matches the scalar reference.
inline double Fold(float64x2_t lo, float64x2_t hi) {
  return vaddvq_f64(vaddq_f64(lo, hi));
}

double DotNeon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double sum = Fold(acc0, acc1);
  for (; i < n; ++i) sum = std::fma(a[i], b[i], sum);
  return sum;
}

double SquaredDistanceNeon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float64x2_t d0 = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
    const float64x2_t d1 = vsubq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    acc0 = vfmaq_f64(acc0, d0, d0);
    acc1 = vfmaq_f64(acc1, d1, d1);
  }
  double sum = Fold(acc0, acc1);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    sum = std::fma(d, d, sum);
  }
  return sum;
}

PairMoments MomentsNeon(const double* a, const double* b, std::size_t n) {
  float64x2_t dot0 = vdupq_n_f64(0.0), dot1 = vdupq_n_f64(0.0);
  float64x2_t na0 = vdupq_n_f64(0.0), na1 = vdupq_n_f64(0.0);
  float64x2_t nb0 = vdupq_n_f64(0.0), nb1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float64x2_t a0 = vld1q_f64(a + i), a1 = vld1q_f64(a + i + 2);
    const float64x2_t b0 = vld1q_f64(b + i), b1 = vld1q_f64(b + i + 2);
    dot0 = vfmaq_f64(dot0, a0, b0);
    dot1 = vfmaq_f64(dot1, a1, b1);
    na0 = vfmaq_f64(na0, a0, a0);
    na1 = vfmaq_f64(na1, a1, a1);
    nb0 = vfmaq_f64(nb0, b0, b0);
    nb1 = vfmaq_f64(nb1, b1, b1);
  }
  PairMoments m{Fold(dot0, dot1), Fold(na0, na1), Fold(nb0, nb1)};
  for (; i < n; ++i) {
    m.dot = std::fma(a[i], b[i], m.dot);
    m.norm_a = std::fma(a[i], a[i], m.norm_a);
    m.norm_b = std::fma(b[i], b[i], m.norm_b);
  }
  return m;
}

void AxpbyNeon(double alpha, const double* x, double beta, const double* y,
               double* out, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  const float64x2_t vb = vdupq_n_f64(beta);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t by = vmulq_f64(vb, vld1q_f64(y + i));
    vst1q_f64(out + i, vfmaq_f64(by, va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) out[i] = std::fma(alpha, x[i], beta * y[i]);
}

void AccumulateNeon(const double* x, double* acc, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(acc + i, vaddq_f64(vld1q_f64(acc + i), vld1q_f64(x + i)));
  }
  for (; i < n; ++i) acc[i] += x[i];
}

void ScaleNeon(double alpha, double* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(x + i, vmulq_n_f64(vld1q_f64(x + i), alpha));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

}  // namespace

const KernelTable* NeonKernels() {
  static const KernelTable table{
      Isa::kNeon,  DotNeon,        SquaredDistanceNeon, MomentsNeon,
      AxpbyNeon,   AccumulateNeon, ScaleNeon,
  };
  return &table;
}

}  // namespace lexsub::simd

#else

namespace lexsub::simd {
const KernelTable* NeonKernels() { return nullptr; }
}  // namespace lexsub::simd

#endif
