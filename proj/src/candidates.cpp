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

#include "phonocorrect/candidates.hpp"

#include <algorithm>
#include <set>

#include "phonocorrect/error.hpp"

namespace phonocorrect {

namespace {

// Encoded tokens of one transcript; segments are joined on demand.
struct EncodedTranscript {
  std::vector<std::u32string> tokens;
  std::vector<std::size_t> letters;
  std::vector<std::size_t> syllables;

  EncodedTranscript(const NormText& text, Representation rep) {
    for (const std::string& t : text.tokens()) {
      tokens.push_back(encode_token(t, rep));
      letters.push_back(letter_length(std::span(&t, 1)));
      syllables.push_back(syllable_length(std::span(&t, 1)));
    }
  }

  std::u32string segment(TokenSpan span) const {
    std::u32string out = tokens[span.first];
    for (std::size_t k = span.first + 1; k <= span.last; ++k) {
      out.push_back(U' ');
      out += tokens[k];
    }
    return out;
  }
};

struct Scratch {
  std::vector<std::size_t> indices;
  std::vector<std::u32string_view> targets;
  std::vector<std::uint32_t> distances;
};

// Compares one encoded segment with the listed phrases and keeps the pairs
// under the threshold. Pairs whose encodings are both empty carry no
// phonetic evidence and are skipped.
void compare_segment(const PreparedContext& context, TokenSpan span,
                     std::u32string_view segment, Threshold u, Metric metric,
                     Scratch& scratch, std::vector<CandidatePair>& out,
                     SearchStats* stats) {
  scratch.targets.clear();
  for (std::size_t c : scratch.indices) {
    scratch.targets.push_back(context.encoded(c));
  }
  scratch.distances.resize(scratch.targets.size());
  edit_distance_batch(segment, scratch.targets, metric, scratch.distances);
  if (stats) stats->comparisons += scratch.targets.size();
  for (std::size_t k = 0; k < scratch.indices.size(); ++k) {
    const std::size_t longest =
        std::max(segment.size(), scratch.targets[k].size());
    if (longest == 0) continue;
    const double d =
        static_cast<double>(scratch.distances[k]) / static_cast<double>(longest);
    if (d < u.value()) out.push_back({span, scratch.indices[k], d});
  }
}

void sort_candidates(std::vector<CandidatePair>& r) {
  std::sort(r.begin(), r.end(), [](const CandidatePair& a, const CandidatePair& b) {
    if (a.span != b.span) return a.span < b.span;
    return a.context_index < b.context_index;
  });
}

}  // namespace

Context::Context(std::vector<NormText> phrases) {
  std::set<std::string> seen;
  for (NormText& p : phrases) {
    if (p.empty()) throw Error("context phrase is empty");
    if (seen.insert(p.joined()).second) phrases_.push_back(std::move(p));
  }
}

Context Context::from_strings(std::span<const std::string> phrases) {
  std::vector<NormText> out;
  out.reserve(phrases.size());
  for (const auto& p : phrases) out.push_back(normalize(p));
  return Context(std::move(out));
}

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kWindow: return "win";
    case GeneratorKind::kLetters: return "let";
    case GeneratorKind::kSyllables: return "syl";
  }
  return "?";
}

std::optional<GeneratorKind> parse_generator(std::string_view name) {
  for (GeneratorKind g : kAllGenerators) {
    if (name == to_string(g)) return g;
  }
  return std::nullopt;
}

PreparedContext::PreparedContext(Context context, Representation rep)
    : context_(std::move(context)), rep_(rep) {
  for (const NormText& p : context_.phrases()) {
    std::u32string e;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) e.push_back(U' ');
      e += encode_token(p.tokens()[k], rep);
    }
    encoded_.push_back(std::move(e));
    letters_.push_back(letter_length(p.tokens()));
    syllables_.push_back(syllable_length(p.tokens()));
  }
}

bool within_length_filter(std::size_t segment_length,
                          std::size_t phrase_length, Threshold u) {
  const double keep = 1.0 - u.value();
  const auto s = static_cast<double>(segment_length);
  const auto c = static_cast<double>(phrase_length);
  return s * keep <= c && c <= s / keep;
}

std::vector<CandidatePair> incremental_search(const PreparedContext& context,
                                              const NormText& transcript,
                                              Threshold u, Metric metric,
                                              LengthUnit unit,
                                              SearchStats* stats) {
  std::vector<CandidatePair> r;
  if (transcript.empty() || context.size() == 0) return r;
  const EncodedTranscript enc(transcript, context.representation());
  const auto& unit_lengths =
      unit == LengthUnit::kLetters ? enc.letters : enc.syllables;

  std::size_t longest_phrase = 0;
  for (std::size_t c = 0; c < context.size(); ++c) {
    longest_phrase = std::max(longest_phrase, context.length(c, unit));
  }
  const double reach = static_cast<double>(longest_phrase) / (1.0 - u.value());

  Scratch scratch;
  const std::size_t m = transcript.size();
  for (std::size_t i = 0; i < m; ++i) {
    std::u32string segment = enc.tokens[i];
    std::size_t length = unit_lengths[i];
    for (std::size_t j = i; j < m;) {
      if (static_cast<double>(length) > reach) break;
      scratch.indices.clear();
      for (std::size_t c = 0; c < context.size(); ++c) {
        if (within_length_filter(length, context.length(c, unit), u)) {
          scratch.indices.push_back(c);
        }
      }
      compare_segment(context, {i, j}, segment, u, metric, scratch, r, stats);
      if (++j == m) break;
      segment.push_back(U' ');
      segment += enc.tokens[j];
      // Letters count the joining space.
      length += unit_lengths[j] + (unit == LengthUnit::kLetters ? 1 : 0);
    }
  }
  sort_candidates(r);
  return r;
}

std::vector<CandidatePair> incremental_search(const Context& context,
                                              const NormText& transcript,
                                              Threshold u, Metric metric,
                                              Representation rep,
                                              LengthUnit unit,
                                              SearchStats* stats) {
  return incremental_search(PreparedContext(context, rep), transcript, u,
                            metric, unit, stats);
}

std::vector<TokenSpan> pivot_subphrases(std::size_t token_count,
                                        std::size_t pivot) {
  if (pivot >= token_count) throw Error("pivot out of range");
  std::vector<TokenSpan> out{{pivot, pivot}};
  const bool has_left = pivot > 0;
  const bool has_right = pivot + 1 < token_count;
  if (has_left) out.push_back({pivot - 1, pivot});
  if (has_right) out.push_back({pivot, pivot + 1});
  if (has_left && has_right) out.push_back({pivot - 1, pivot + 1});
  return out;
}

std::vector<CandidatePair> pivot_window(const PreparedContext& context,
                                        const NormText& transcript,
                                        Threshold u, Metric metric,
                                        SearchStats* stats) {
  std::vector<CandidatePair> r;
  if (transcript.empty() || context.size() == 0) return r;
  const EncodedTranscript enc(transcript, context.representation());

  std::set<TokenSpan> spans;
  for (std::size_t p = 0; p < transcript.size(); ++p) {
    for (TokenSpan s : pivot_subphrases(transcript.size(), p)) spans.insert(s);
  }
  Scratch scratch;
  scratch.indices.resize(context.size());
  for (std::size_t c = 0; c < context.size(); ++c) scratch.indices[c] = c;
  for (TokenSpan s : spans) {
    compare_segment(context, s, enc.segment(s), u, metric, scratch, r, stats);
  }
  sort_candidates(r);
  return r;
}

std::vector<CandidatePair> pivot_window(const Context& context,
                                        const NormText& transcript,
                                        Threshold u, Metric metric,
                                        Representation rep,
                                        SearchStats* stats) {
  return pivot_window(PreparedContext(context, rep), transcript, u, metric,
                      stats);
}

std::vector<CandidatePair> generate_candidates(const PreparedContext& context,
                                               const NormText& transcript,
                                               GeneratorKind kind, Threshold u,
                                               Metric metric,
                                               SearchStats* stats) {
  switch (kind) {
    case GeneratorKind::kWindow:
      return pivot_window(context, transcript, u, metric, stats);
    case GeneratorKind::kLetters:
      return incremental_search(context, transcript, u, metric,
                                LengthUnit::kLetters, stats);
    case GeneratorKind::kSyllables:
      return incremental_search(context, transcript, u, metric,
                                LengthUnit::kSyllables, stats);
  }
  return {};
}

}  // namespace phonocorrect
