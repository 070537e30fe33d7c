// Copyright 2026 The phonocorrect Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phonocorrect/distances.hpp"
#include "phonocorrect/normalizer.hpp"
#include "phonocorrect/phonetics.hpp"

namespace phonocorrect {

// Inclusive token range [first, last].
struct TokenSpan {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t size() const { return last - first + 1; }
  bool overlaps(const TokenSpan& o) const {
    return first <= o.last && o.first <= last;
  }
  friend auto operator<=>(const TokenSpan&, const TokenSpan&) = default;
};

// Ordered, duplicate-free domain phrases.
class Context {
 public:
  Context() = default;
  // Drops repeated phrases, keeping the first occurrence. Throws Error on an
  // empty phrase.
  explicit Context(std::vector<NormText> phrases);
  static Context from_strings(std::span<const std::string> phrases);

  const std::vector<NormText>& phrases() const { return phrases_; }
  const NormText& operator[](std::size_t i) const { return phrases_[i]; }
  std::size_t size() const { return phrases_.size(); }
  bool empty() const { return phrases_.empty(); }

 private:
  std::vector<NormText> phrases_;
};

struct CandidatePair {
  TokenSpan span;
  std::size_t context_index = 0;
  double distance = 0.0;

  friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

enum class GeneratorKind { kWindow, kLetters, kSyllables };

inline constexpr GeneratorKind kAllGenerators[] = {
    GeneratorKind::kWindow, GeneratorKind::kLetters, GeneratorKind::kSyllables};

std::string_view to_string(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator(std::string_view name);

enum class LengthUnit { kLetters, kSyllables };

// Context phrases encoded once for a representation, with their lengths.
class PreparedContext {
 public:
  PreparedContext(Context context, Representation rep);

  const Context& context() const { return context_; }
  Representation representation() const { return rep_; }
  std::size_t size() const { return context_.size(); }
  std::u32string_view encoded(std::size_t i) const { return encoded_[i]; }
  std::size_t length(std::size_t i, LengthUnit unit) const {
    return unit == LengthUnit::kLetters ? letters_[i] : syllables_[i];
  }

 private:
  Context context_;
  Representation rep_;
  std::vector<std::u32string> encoded_;
  std::vector<std::size_t> letters_;
  std::vector<std::size_t> syllables_;
};

struct SearchStats {
  std::size_t comparisons = 0;
};

// Grows a segment from every start word and compares it with the phrases
// whose length is within the threshold's reach. Output is sorted by span,
// then context index.
std::vector<CandidatePair> incremental_search(const PreparedContext& context,
                                              const NormText& transcript,
                                              Threshold u, Metric metric,
                                              LengthUnit unit,
                                              SearchStats* stats = nullptr);
std::vector<CandidatePair> incremental_search(const Context& context,
                                              const NormText& transcript,
                                              Threshold u, Metric metric,
                                              Representation rep,
                                              LengthUnit unit,
                                              SearchStats* stats = nullptr);

// Sub-phrases around a 0-based pivot with a window of one word:
// p, (p-1 p), (p p+1), (p-1 p p+1), skipping those that fall off the ends.
std::vector<TokenSpan> pivot_subphrases(std::size_t token_count,
                                        std::size_t pivot);

// Every pivot's sub-phrases against every phrase, without a length filter.
std::vector<CandidatePair> pivot_window(const PreparedContext& context,
                                        const NormText& transcript,
                                        Threshold u, Metric metric,
                                        SearchStats* stats = nullptr);
std::vector<CandidatePair> pivot_window(const Context& context,
                                        const NormText& transcript,
                                        Threshold u, Metric metric,
                                        Representation rep,
                                        SearchStats* stats = nullptr);

std::vector<CandidatePair> generate_candidates(const PreparedContext& context,
                                               const NormText& transcript,
                                               GeneratorKind kind, Threshold u,
                                               Metric metric,
                                               SearchStats* stats = nullptr);

// Length window a phrase must fall in to be compared with a segment.
bool within_length_filter(std::size_t segment_length,
                          std::size_t phrase_length, Threshold u);

}  // namespace phonocorrect
