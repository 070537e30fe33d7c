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

#include "phonocorrect/corrector.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "phonocorrect/error.hpp"

namespace phonocorrect {

std::string to_string(const CorrectionConfig& config) {
  char number[32];
  const auto res = std::to_chars(number, number + sizeof number,
                                 config.threshold.value());
  std::string out;
  out += to_string(config.representation);
  out += '/';
  out += to_string(config.generator);
  out += '/';
  out += to_string(config.metric);
  out += '/';
  out.append(number, res.ptr);
  return out;
}

CorrectionConfig parse_config(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t slash = text.find('/', start);
    parts.push_back(text.substr(start, slash - start));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  if (parts.size() != 4) {
    throw Error("config must be rep/generator/metric/threshold, got '" +
                std::string(text) + "'");
  }
  const auto rep = parse_representation(parts[0]);
  if (!rep) throw Error("unknown representation '" + std::string(parts[0]) + "'");
  const auto gen = parse_generator(parts[1]);
  if (!gen) throw Error("unknown generator '" + std::string(parts[1]) + "'");
  const auto metric = parse_metric(parts[2]);
  if (!metric) throw Error("unknown metric '" + std::string(parts[2]) + "'");
  double u = 0.0;
  const auto res =
      std::from_chars(parts[3].data(), parts[3].data() + parts[3].size(), u);
  if (res.ec != std::errc() || res.ptr != parts[3].data() + parts[3].size()) {
    throw Error("bad threshold '" + std::string(parts[3]) + "'");
  }
  return CorrectionConfig{*rep, *gen, *metric, Threshold(u)};
}

std::vector<CandidatePair> select_non_overlapping(
    std::vector<CandidatePair> candidates) {
  std::sort(candidates.begin(), candidates.end(),
            [](const CandidatePair& a, const CandidatePair& b) {
              if (a.distance != b.distance) return a.distance < b.distance;
              if (a.span.size() != b.span.size()) {
                return a.span.size() > b.span.size();
              }
              if (a.span.first != b.span.first) {
                return a.span.first < b.span.first;
              }
              return a.context_index < b.context_index;
            });
  std::vector<CandidatePair> chosen;
  for (const CandidatePair& c : candidates) {
    const bool clash = std::any_of(
        chosen.begin(), chosen.end(),
        [&](const CandidatePair& k) { return k.span.overlaps(c.span); });
    if (!clash) chosen.push_back(c);
  }
  std::sort(chosen.begin(), chosen.end(),
            [](const CandidatePair& a, const CandidatePair& b) {
              return a.span.first < b.span.first;
            });
  return chosen;
}

CorrectionResult apply_substitutions(const NormText& transcript,
                                     std::span<const CandidatePair> selected,
                                     const Context& context) {
  CorrectionResult result{transcript, transcript, {}};
  std::vector<std::string> tokens = transcript.tokens();
  // Right to left keeps earlier spans valid.
  for (auto it = selected.rbegin(); it != selected.rend(); ++it) {
    const CandidatePair& c = *it;
    if (c.span.last >= transcript.size() || c.context_index >= context.size()) {
      throw Error("substitution out of range");
    }
    const auto& replacement = context[c.context_index].tokens();
    const auto first = tokens.begin() + static_cast<std::ptrdiff_t>(c.span.first);
    const auto last = tokens.begin() + static_cast<std::ptrdiff_t>(c.span.last) + 1;
    if (std::equal(first, last, replacement.begin(), replacement.end())) continue;
    tokens.insert(tokens.erase(first, last), replacement.begin(),
                  replacement.end());
    result.applied.push_back(c);
  }
  std::reverse(result.applied.begin(), result.applied.end());
  result.corrected = NormText::from_tokens(std::move(tokens));
  return result;
}

CorrectionResult correct(const NormText& transcript,
                         const PreparedContext& context,
                         const CorrectionConfig& config) {
  if (context.representation() != config.representation) {
    throw Error("prepared context encoded for a different representation");
  }
  auto selected = select_non_overlapping(generate_candidates(
      context, transcript, config.generator, config.threshold, config.metric));
  return apply_substitutions(transcript, selected, context.context());
}

CorrectionResult correct(const NormText& transcript, const Context& context,
                         const CorrectionConfig& config) {
  return correct(transcript, PreparedContext(context, config.representation),
                 config);
}

WerBreakdown wer(const NormText& reference, const NormText& hypothesis) {
  const auto& ref = reference.tokens();
  const auto& hyp = hypothesis.tokens();
  if (ref.empty()) throw Error("WER of an empty reference");
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  const std::size_t width = m + 1;
  std::vector<std::size_t> cost((n + 1) * width);
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& {
    return cost[i * width + j];
  };
  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = i;
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t sub = at(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      at(i, j) = std::min({sub, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  WerBreakdown out;
  out.reference_words = n;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool same = ref[i - 1] == hyp[j - 1];
      if (at(i, j) == at(i - 1, j - 1) + (same ? 0 : 1)) {
        if (!same) ++out.substitutions;
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      ++out.deletions;
      --i;
    } else {
      ++out.insertions;
      --j;
    }
  }
  out.wer = static_cast<double>(out.edits()) / static_cast<double>(n);
  return out;
}

double corpus_wer(std::span<const WerBreakdown> scores) {
  if (scores.empty()) throw Error("corpus WER of an empty corpus");
  std::size_t edits = 0;
  std::size_t words = 0;
  for (const WerBreakdown& s : scores) {
    edits += s.edits();
    words += s.reference_words;
  }
  return static_cast<double>(edits) / static_cast<double>(words);
}

double corpus_wer(std::span<const TranscriptPair> pairs) {
  std::vector<WerBreakdown> scores;
  scores.reserve(pairs.size());
  for (const TranscriptPair& p : pairs) {
    scores.push_back(wer(p.reference, p.hypothesis));
  }
  return corpus_wer(scores);
}

}  // namespace phonocorrect
