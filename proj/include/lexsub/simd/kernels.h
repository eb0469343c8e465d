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

// Dense double-precision vector kernels used by every embedding-consuming
// scorer. Each kernel has a scalar reference implementation plus optional
// AVX2/FMA (x86-64) and NEON (aarch64) variants; one variant is selected
// per process on first use. All variants use the same summation order and
// fused multiply-adds, so they return identical bits.
//
// Set LEXSUB_SIMD=scalar in the environment to force the reference kernels.

#ifndef LEXSUB_SIMD_KERNELS_H_
#define LEXSUB_SIMD_KERNELS_H_

#include <span>
#include <string_view>
#include <vector>

namespace lexsub::simd {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view IsaName(Isa isa);

// Dot product, squared norms and squared distance computed in one pass.
struct PairMoments {
  double dot = 0.0;
  double norm_a = 0.0;  // squared
  double norm_b = 0.0;  // squared
};

// Function table for one instruction set. All lengths must match; callers
// check dimensions before dispatching.
struct KernelTable {
  Isa isa;
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*squared_distance)(const double* a, const double* b, std::size_t n);
  PairMoments (*moments)(const double* a, const double* b, std::size_t n);
  // out[i] = alpha * x[i] + beta * y[i]
  void (*axpby)(double alpha, const double* x, double beta, const double* y,
                double* out, std::size_t n);
  // acc[i] += x[i]
  void (*accumulate)(const double* x, double* acc, std::size_t n);
  // x[i] *= alpha
  void (*scale)(double alpha, double* x, std::size_t n);
};

const KernelTable& ScalarKernels();
// Null when the variant is not compiled in or the CPU lacks support.
const KernelTable* Avx2Kernels();
const KernelTable* NeonKernels();

// Every kernel table usable on this machine, scalar first.
std::vector<const KernelTable*> AvailableKernels();

// The table chosen for this process.
const KernelTable& Active();

// Convenience wrappers over Active().

double Dot(std::span<const double> a, std::span<const double> b);
double SquaredNorm(std::span<const double> a);
double Norm(std::span<const double> a);
double Distance(std::span<const double> a, std::span<const double> b);

// Cosine similarity clamped to [-1, 1]. Defined as 0 when either vector is
// all zeros.
double Cosine(std::span<const double> a, std::span<const double> b);

void Axpby(double alpha, std::span<const double> x, double beta,
           std::span<const double> y, std::span<double> out);
void Accumulate(std::span<const double> x, std::span<double> acc);
void Scale(double alpha, std::span<double> x);

// Max-shifted softmax of `logits`, written in place.
void SoftmaxInPlace(std::span<double> logits);

}  // namespace lexsub::simd

#endif  // LEXSUB_SIMD_KERNELS_H_
