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

// Inter-sequence AVX2 kernel: eight targets per pass, one per 32-bit lane.
// Targets are transposed column-major so that column j of every lane loads
// with a single instruction. A lane's answer is captured from the last DP
// row when the column index reaches that lane's length.

#include <immintrin.h>

#include <algorithm>
#include <vector>

#include "phonocorrect/kernels.hpp"

namespace phonocorrect::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 8;

struct Row {
  __m256i v;
};

struct Workspace {
  std::vector<std::int32_t> columns;
  std::vector<Row> prev2, prev, cur;
};

Workspace& workspace() {
  thread_local Workspace ws;
  return ws;
}

}  // namespace

void batch(std::u32string_view query,
           std::span<const std::u32string_view> targets, bool osa,
           std::span<std::uint32_t> out) {
  const std::size_t m = query.size();
  Workspace& ws = workspace();
  ws.prev2.resize(m + 1);
  ws.prev.resize(m + 1);
  ws.cur.resize(m + 1);
  const __m256i one = _mm256_set1_epi32(1);

  for (std::size_t base = 0; base < targets.size(); base += kLanes) {
    const std::size_t lanes = std::min(kLanes, targets.size() - base);
    alignas(32) std::int32_t lengths[kLanes] = {};
    std::size_t max_len = 0;
    for (std::size_t l = 0; l < lanes; ++l) {
      lengths[l] = static_cast<std::int32_t>(targets[base + l].size());
      max_len = std::max(max_len, targets[base + l].size());
    }
    if (m == 0) {
      for (std::size_t l = 0; l < lanes; ++l) {
        out[base + l] = static_cast<std::uint32_t>(lengths[l]);
      }
      continue;
    }

    // -1 never equals a code point.
    ws.columns.assign(max_len * kLanes, -1);
    for (std::size_t l = 0; l < lanes; ++l) {
      const std::u32string_view t = targets[base + l];
      for (std::size_t j = 0; j < t.size(); ++j) {
        ws.columns[j * kLanes + l] = static_cast<std::int32_t>(t[j]);
      }
    }

    __m256i* prev2 = &ws.prev2.data()->v;
    __m256i* prev = &ws.prev.data()->v;
    __m256i* cur = &ws.cur.data()->v;
    for (std::size_t i = 0; i <= m; ++i) {
      prev[i] = _mm256_set1_epi32(static_cast<std::int32_t>(i));
    }
    const __m256i len_v =
        _mm256_load_si256(reinterpret_cast<const __m256i*>(lengths));
    __m256i result = _mm256_set1_epi32(static_cast<std::int32_t>(m));
    __m256i t_prev = _mm256_set1_epi32(-1);

    for (std::size_t j = 1; j <= max_len; ++j) {
      const __m256i t_j = _mm256_loadu_si256(
          reinterpret_cast<const __m256i*>(&ws.columns[(j - 1) * kLanes]));
      cur[0] = _mm256_set1_epi32(static_cast<std::int32_t>(j));
      __m256i q_before = _mm256_set1_epi32(-1);
      for (std::size_t i = 1; i <= m; ++i) {
        const __m256i q_i =
            _mm256_set1_epi32(static_cast<std::int32_t>(query[i - 1]));
        const __m256i cost = _mm256_andnot_si256(_mm256_cmpeq_epi32(q_i, t_j), one);
        __m256i v = _mm256_min_epi32(
            _mm256_add_epi32(prev[i - 1], cost),
            _mm256_add_epi32(_mm256_min_epi32(prev[i], cur[i - 1]), one));
        if (osa && i > 1 && j > 1) {
          const __m256i swapped =
              _mm256_and_si256(_mm256_cmpeq_epi32(q_i, t_prev),
                               _mm256_cmpeq_epi32(q_before, t_j));
          const __m256i via = _mm256_add_epi32(prev2[i - 2], one);
          v = _mm256_blendv_epi8(v, _mm256_min_epi32(v, via), swapped);
        }
        cur[i] = v;
        q_before = q_i;
      }
      const __m256i done = _mm256_cmpeq_epi32(
          len_v, _mm256_set1_epi32(static_cast<std::int32_t>(j)));
      result = _mm256_blendv_epi8(result, cur[m], done);
      __m256i* recycled = prev2;
      prev2 = prev;
      prev = cur;
      cur = recycled;
      t_prev = t_j;
    }

    alignas(32) std::int32_t lanes_out[kLanes];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes_out), result);
    for (std::size_t l = 0; l < lanes; ++l) {
      out[base + l] = static_cast<std::uint32_t>(lanes_out[l]);
    }
  }
}

}  // namespace phonocorrect::kernels::avx2
