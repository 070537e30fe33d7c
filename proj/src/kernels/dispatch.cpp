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

#include <atomic>
#include <cstdlib>
#include <string>

#include "phonocorrect/error.hpp"
#include "phonocorrect/kernels.hpp"

namespace phonocorrect::kernels {

namespace {

constexpr int kUnset = -1;
std::atomic<int> g_override{kUnset};

Isa best_available() {
  if (isa_available(Isa::kAvx2)) return Isa::kAvx2;
  if (isa_available(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

Isa from_environment() {
  const char* env = std::getenv("PHONOCORRECT_ISA");
  if (env == nullptr) return best_available();
  const std::string_view name(env);
  for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
    if (name == to_string(isa) && isa_available(isa)) return isa;
  }
  return best_available();
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "?";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(PHONOCORRECT_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(PHONOCORRECT_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa detected = from_environment();
  const int forced = g_override.load(std::memory_order_relaxed);
  return forced == kUnset ? detected : static_cast<Isa>(forced);
}

void set_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw Error("kernel ISA not available: " + std::string(to_string(isa)));
  }
  g_override.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() { g_override.store(kUnset, std::memory_order_relaxed); }

void batch(Isa isa, std::u32string_view query,
           std::span<const std::u32string_view> targets, Metric metric,
           std::span<std::uint32_t> out) {
  if (out.size() < targets.size()) throw Error("batch output too small");
  // Unrestricted Damerau-Levenshtein needs per-symbol history; scalar only.
  if (metric == Metric::kDamerauLevenshtein) isa = Isa::kScalar;
  const bool osa = metric == Metric::kOsa;
  switch (isa) {
#if defined(PHONOCORRECT_HAVE_AVX2)
    case Isa::kAvx2:
      avx2::batch(query, targets, osa, out);
      return;
#endif
#if defined(PHONOCORRECT_HAVE_NEON)
    case Isa::kNeon:
      neon::batch(query, targets, osa, out);
      return;
#endif
    default:
      scalar::batch(query, targets, metric, out);
      return;
  }
}

}  // namespace phonocorrect::kernels
