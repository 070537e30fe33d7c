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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phonocorrect/candidates.hpp"

namespace phonocorrect {

struct CorrectionConfig {
  Representation representation = Representation::kIpa;
  GeneratorKind generator = GeneratorKind::kLetters;
  Metric metric = Metric::kLevenshtein;
  Threshold threshold{0.4};
};

// "rep/generator/metric/threshold", e.g. "ipa/let/lev/0.4".
std::string to_string(const CorrectionConfig& config);
CorrectionConfig parse_config(std::string_view text);

struct CorrectionResult {
  NormText original;
  NormText corrected;
  // Substitutions that changed the text, in transcript order. Spans index
  // `original`.
  std::vector<CandidatePair> applied;
};

// Greedy non-overlapping choice: ascending distance, then longer span, then
// earlier span, then context order. Result is in transcript order.
std::vector<CandidatePair> select_non_overlapping(
    std::vector<CandidatePair> candidates);

// Replaces each selected span by its phrase. Selections equal to their
// replacement are dropped from `applied`.
CorrectionResult apply_substitutions(const NormText& transcript,
                                     std::span<const CandidatePair> selected,
                                     const Context& context);

CorrectionResult correct(const NormText& transcript,
                         const PreparedContext& context,
                         const CorrectionConfig& config);
CorrectionResult correct(const NormText& transcript, const Context& context,
                         const CorrectionConfig& config);

struct WerBreakdown {
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  std::size_t reference_words = 0;
  double wer = 0.0;

  std::size_t edits() const { return substitutions + deletions + insertions; }
};

// Word-level alignment; ties between equal-cost paths prefer substitution.
// Throws Error on an empty reference.
WerBreakdown wer(const NormText& reference, const NormText& hypothesis);

struct TranscriptPair {
  NormText reference;
  NormText hypothesis;
};

// Sum of edits over sum of reference words. Throws Error on an empty corpus.
double corpus_wer(std::span<const TranscriptPair> pairs);
double corpus_wer(std::span<const WerBreakdown> scores);

}  // namespace phonocorrect
