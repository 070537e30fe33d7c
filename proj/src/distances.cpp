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

#include "phonocorrect/distances.hpp"

#include <algorithm>
#include <string>

#include "phonocorrect/error.hpp"
#include "phonocorrect/kernels.hpp"
#include "phonocorrect/utf8.hpp"

namespace phonocorrect {

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::kLevenshtein: return "lev";
    case Metric::kOsa: return "osa";
    case Metric::kDamerauLevenshtein: return "dl";
  }
  return "?";
}

std::optional<Metric> parse_metric(std::string_view name) {
  if (name == "lev" || name == "levenshtein") return Metric::kLevenshtein;
  if (name == "osa") return Metric::kOsa;
  if (name == "dl" || name == "damerau" || name == "damerau-levenshtein") {
    return Metric::kDamerauLevenshtein;
  }
  return std::nullopt;
}

Threshold::Threshold(double u) : u_(u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw Error("threshold must lie in (0, 1), got " + std::to_string(u));
  }
}

std::size_t edit_distance(std::u32string_view a, std::u32string_view b,
                          Metric metric) {
  switch (metric) {
    case Metric::kLevenshtein: return kernels::scalar::levenshtein(a, b);
    case Metric::kOsa: return kernels::scalar::osa(a, b);
    case Metric::kDamerauLevenshtein:
      return kernels::scalar::damerau_levenshtein(a, b);
  }
  return 0;
}

std::size_t edit_distance(std::string_view a, std::string_view b,
                          Metric metric) {
  return edit_distance(utf8::decode(a), utf8::decode(b), metric);
}

double normalized_distance(std::u32string_view a, std::u32string_view b,
                           Metric metric) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) throw Error("normalized distance of two empty strings");
  if (a == b) return 0.0;
  return static_cast<double>(edit_distance(a, b, metric)) /
         static_cast<double>(longest);
}

double normalized_distance(std::string_view a, std::string_view b,
                           Metric metric) {
  return normalized_distance(utf8::decode(a), utf8::decode(b), metric);
}

void edit_distance_batch(std::u32string_view query,
                         std::span<const std::u32string_view> targets,
                         Metric metric, std::span<std::uint32_t> out) {
  kernels::batch(kernels::active_isa(), query, targets, metric, out);
}

}  // namespace phonocorrect
