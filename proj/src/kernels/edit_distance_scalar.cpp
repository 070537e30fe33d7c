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

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "phonocorrect/kernels.hpp"

namespace phonocorrect::kernels::scalar {

std::uint32_t levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t n = b.size();
  std::vector<std::uint32_t> row(n + 1);
  for (std::size_t j = 0; j <= n; ++j) row[j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::uint32_t diag = row[0];
    row[0] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j <= n; ++j) {
      const std::uint32_t up = row[j];
      const std::uint32_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({diag + cost, up + 1, row[j - 1] + 1});
      diag = up;
    }
  }
  return row[n];
}

std::uint32_t osa(std::u32string_view a, std::u32string_view b) {
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  std::vector<std::uint32_t> prev2(n + 1), prev(n + 1), cur(n + 1);
  for (std::size_t j = 0; j <= n; ++j) prev[j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    cur[0] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j <= n; ++j) {
      const std::uint32_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      std::uint32_t v = std::min({prev[j - 1] + cost, prev[j] + 1, cur[j - 1] + 1});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
        v = std::min(v, prev2[j - 2] + 1);
      }
      cur[j] = v;
    }
    std::swap(prev2, prev);
    std::swap(prev, cur);
  }
  return prev[n];
}

// Lowrance-Wagner: unrestricted adjacent transpositions.
std::uint32_t damerau_levenshtein(std::u32string_view a,
                                  std::u32string_view b) {
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  const auto maxdist = static_cast<std::uint32_t>(m + n);
  const std::size_t width = n + 2;
  std::vector<std::uint32_t> d((m + 2) * width);
  auto cell = [&](std::size_t i, std::size_t j) -> std::uint32_t& {
    return d[i * width + j];
  };
  cell(0, 0) = maxdist;
  for (std::size_t i = 0; i <= m; ++i) {
    cell(i + 1, 0) = maxdist;
    cell(i + 1, 1) = static_cast<std::uint32_t>(i);
  }
  for (std::size_t j = 0; j <= n; ++j) {
    cell(0, j + 1) = maxdist;
    cell(1, j + 1) = static_cast<std::uint32_t>(j);
  }
  // Symbols of `a` get dense ids; symbols of `b` absent from `a` never
  // start a transposition.
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::unordered_map<char32_t, std::size_t> ids;
  std::vector<std::size_t> a_ids(m);
  for (std::size_t i = 0; i < m; ++i) {
    a_ids[i] = ids.try_emplace(a[i], ids.size()).first->second;
  }
  std::vector<std::size_t> b_ids(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto it = ids.find(b[j]);
    b_ids[j] = it == ids.end() ? kAbsent : it->second;
  }
  // Last row (1-based) in which each symbol of `a` was seen.
  std::vector<std::size_t> last_row(ids.size(), 0);
  for (std::size_t i = 1; i <= m; ++i) {
    std::size_t last_col = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t k = b_ids[j - 1] == kAbsent ? 0 : last_row[b_ids[j - 1]];
      const std::size_t l = last_col;
      std::uint32_t cost = 1;
      if (a[i - 1] == b[j - 1]) {
        cost = 0;
        last_col = j;
      }
      const std::uint32_t transpose =
          cell(k, l) + static_cast<std::uint32_t>((i - k - 1) + 1 + (j - l - 1));
      cell(i + 1, j + 1) = std::min({cell(i, j) + cost, cell(i + 1, j) + 1,
                                     cell(i, j + 1) + 1, transpose});
    }
    last_row[a_ids[i - 1]] = i;
  }
  return cell(m + 1, n + 1);
}

void batch(std::u32string_view query,
           std::span<const std::u32string_view> targets, Metric metric,
           std::span<std::uint32_t> out) {
  for (std::size_t t = 0; t < targets.size(); ++t) {
    switch (metric) {
      case Metric::kLevenshtein:
        out[t] = levenshtein(query, targets[t]);
        break;
      case Metric::kOsa:
        out[t] = osa(query, targets[t]);
        break;
      case Metric::kDamerauLevenshtein:
        out[t] = damerau_levenshtein(query, targets[t]);
        break;
    }
  }
}

}  // namespace phonocorrect::kernels::scalar
