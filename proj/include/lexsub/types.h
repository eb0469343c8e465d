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

// Shared vocabulary types and the error hierarchy.

#ifndef LEXSUB_TYPES_H_
#define LEXSUB_TYPES_H_

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lexsub {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. The message carries the path and line number.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a domain invariant or precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Failure inside a model backend (stub or adapter).
class BackendError : public Error {
 public:
  using Error::Error;
};

// A component scorer failed while ranking; names the scorer.
class ScorerError : public Error {
 public:
  ScorerError(std::string scorer, const std::string& what)
      : Error(scorer + ": " + what), scorer_(std::move(scorer)) {}
  const std::string& scorer() const { return scorer_; }

 private:
  std::string scorer_;
};

enum class Pos { kNoun, kVerb, kAdjective, kAdverb };

inline constexpr std::array<Pos, 4> kAllPos = {Pos::kNoun, Pos::kVerb,
                                               Pos::kAdjective, Pos::kAdverb};

// Single-letter tag: n, v, a, r.
char PosTag(Pos pos);
std::optional<Pos> ParsePosTag(std::string_view tag);

// Dense real vector with finite entries.
class EmbeddingVector {
 public:
  EmbeddingVector() = default;
  explicit EmbeddingVector(std::size_t dim) : values_(dim, 0.0) {}
  // Throws ValidationError on non-finite entries.
  explicit EmbeddingVector(std::vector<double> values);

  std::size_t dim() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  std::span<double> mutable_values() { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  bool IsZero() const;

  friend bool operator==(const EmbeddingVector&,
                         const EmbeddingVector&) = default;

 private:
  std::vector<double> values_;
};

// Cosine with the zero-vector convention (0 when either side is zero).
double Cosine(const EmbeddingVector& a, const EmbeddingVector& b);

// ASCII lowercase.
std::string ToLower(std::string_view s);
bool ContainsWhitespace(std::string_view s);
std::string JoinTokens(std::span<const std::string> tokens);
std::vector<std::string> SplitTokens(std::string_view text);

// Shortest round-trip decimal form of `value`, locale-independent.
std::string FormatDouble(double value);
// Fixed-point with `digits` fractional digits, locale-independent.
std::string FormatFixed(double value, int digits);

}  // namespace lexsub

#endif  // LEXSUB_TYPES_H_
