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

// Seeded random streams with fully specified output. std::mt19937_64's
// sequence is fixed by the standard, but the std:: distributions are not, so
// the conversions to uniform/normal/index draws live here.

#ifndef LEXSUB_RANDOM_H_
#define LEXSUB_RANDOM_H_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace lexsub {

// Source of uniform doubles in [0, 1). Injectable for sampling tests.
class UniformSource {
 public:
  virtual ~UniformSource() = default;
  virtual double NextUniform() = 0;
};

class SeededRandom : public UniformSource {
 public:
  explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}

  // 53 random mantissa bits.
  double NextUniform() override {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Box-Muller; the second variate is discarded.
  double NextNormal(double mean, double stddev) {
    double u1 = NextUniform();
    while (u1 == 0.0) u1 = NextUniform();
    const double u2 = NextUniform();
    const double z =
        std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    return mean + stddev * z;
  }

  bool NextBernoulli(double p) { return NextUniform() < p; }

  // Uniform index in [0, n), n > 0.
  std::size_t NextIndex(std::size_t n) {
    const auto i = static_cast<std::size_t>(NextUniform() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

 private:
  std::mt19937_64 engine_;
};

// Derives independent stream seeds from one base seed.
inline std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t a,
                             std::uint64_t b = 0) {
  std::uint64_t z = seed ^ (a * 0x9E3779B97F4A7C15ull) ^ (b * 0xC2B2AE3D27D4EB4Full);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace lexsub

#endif  // LEXSUB_RANDOM_H_
