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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace phonocorrect {

enum class Metric { kLevenshtein, kOsa, kDamerauLevenshtein };

inline constexpr Metric kAllMetrics[] = {
    Metric::kLevenshtein, Metric::kOsa, Metric::kDamerauLevenshtein};

std::string_view to_string(Metric metric);
std::optional<Metric> parse_metric(std::string_view name);

// Distance threshold u, strictly inside (0, 1).
class Threshold {
 public:
  explicit Threshold(double u);
  double value() const { return u_; }

 private:
  double u_;
};

// Distances count code points, not bytes.
std::size_t edit_distance(std::u32string_view a, std::u32string_view b,
                          Metric metric);
std::size_t edit_distance(std::string_view a, std::string_view b,
                          Metric metric);

// edit_distance / max(|a|, |b|). Throws Error when both are empty.
double normalized_distance(std::u32string_view a, std::u32string_view b,
                           Metric metric);
double normalized_distance(std::string_view a, std::string_view b,
                           Metric metric);

// Distances from one query to many targets through the active kernel.
// `out` must be at least as long as `targets`.
void edit_distance_batch(std::u32string_view query,
                         std::span<const std::u32string_view> targets,
                         Metric metric, std::span<std::uint32_t> out);

}  // namespace phonocorrect
