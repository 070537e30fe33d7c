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

// NEON counterpart of the AVX2 kernel: four targets per pass.

#include <arm_neon.h>

#include <algorithm>
#include <vector>

#include "phonocorrect/kernels.hpp"

namespace phonocorrect::kernels::neon {

namespace {

constexpr std::size_t kLanes = 4;

struct Workspace {
  std::vector<std::uint32_t> columns;
  std::vector<uint32x4_t> prev2, prev, cur;
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
  const uint32x4_t one = vdupq_n_u32(1);

  for (std::size_t base = 0; base < targets.size(); base += kLanes) {
    const std::size_t lanes = std::min(kLanes, targets.size() - base);
    std::uint32_t lengths[kLanes] = {};
    std::size_t max_len = 0;
    for (std::size_t l = 0; l < lanes; ++l) {
      lengths[l] = static_cast<std::uint32_t>(targets[base + l].size());
      max_len = std::max(max_len, targets[base + l].size());
    }
    if (m == 0) {
      for (std::size_t l = 0; l < lanes; ++l) out[base + l] = lengths[l];
      continue;
    }

    ws.columns.assign(max_len * kLanes, 0xFFFFFFFFu);
    for (std::size_t l = 0; l < lanes; ++l) {
      const std::u32string_view t = targets[base + l];
      for (std::size_t j = 0; j < t.size(); ++j) {
        ws.columns[j * kLanes + l] = static_cast<std::uint32_t>(t[j]);
      }
    }

    uint32x4_t* prev2 = ws.prev2.data();
    uint32x4_t* prev = ws.prev.data();
    uint32x4_t* cur = ws.cur.data();
    for (std::size_t i = 0; i <= m; ++i) {
      prev[i] = vdupq_n_u32(static_cast<std::uint32_t>(i));
    }
    const uint32x4_t len_v = vld1q_u32(lengths);
    uint32x4_t result = vdupq_n_u32(static_cast<std::uint32_t>(m));
    uint32x4_t t_prev = vdupq_n_u32(0xFFFFFFFFu);

    for (std::size_t j = 1; j <= max_len; ++j) {
      const uint32x4_t t_j = vld1q_u32(&ws.columns[(j - 1) * kLanes]);
      cur[0] = vdupq_n_u32(static_cast<std::uint32_t>(j));
      uint32x4_t q_before = vdupq_n_u32(0xFFFFFFFFu);
      for (std::size_t i = 1; i <= m; ++i) {
        const uint32x4_t q_i =
            vdupq_n_u32(static_cast<std::uint32_t>(query[i - 1]));
        const uint32x4_t cost = vbicq_u32(one, vceqq_u32(q_i, t_j));
        uint32x4_t v = vminq_u32(vaddq_u32(prev[i - 1], cost),
                                 vaddq_u32(vminq_u32(prev[i], cur[i - 1]), one));
        if (osa && i > 1 && j > 1) {
          const uint32x4_t swapped =
              vandq_u32(vceqq_u32(q_i, t_prev), vceqq_u32(q_before, t_j));
          const uint32x4_t via = vaddq_u32(prev2[i - 2], one);
          v = vbslq_u32(swapped, vminq_u32(v, via), v);
        }
        cur[i] = v;
        q_before = q_i;
      }
      const uint32x4_t done =
          vceqq_u32(len_v, vdupq_n_u32(static_cast<std::uint32_t>(j)));
      result = vbslq_u32(done, cur[m], result);
      uint32x4_t* recycled = prev2;
      prev2 = prev;
      prev = cur;
      cur = recycled;
      t_prev = t_j;
    }

    std::uint32_t lanes_out[kLanes];
    vst1q_u32(lanes_out, result);
    for (std::size_t l = 0; l < lanes; ++l) out[base + l] = lanes_out[l];
  }
}

}  // namespace phonocorrect::kernels::neon
