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

// Edit-distance kernels. The scalar kernels are the reference; vector
// kernels compute Levenshtein and OSA for several targets at once, one
// target per lane, and must agree with the scalar kernels exactly.

#include <cstdint>
#include <span>
#include <string_view>

#include "phonocorrect/distances.hpp"

namespace phonocorrect::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view to_string(Isa isa);

// Compiled in and supported by the running CPU.
bool isa_available(Isa isa);

// Best available ISA unless overridden by set_isa() or by the
// PHONOCORRECT_ISA environment variable (scalar, avx2, neon).
Isa active_isa();
void set_isa(Isa isa);
void reset_isa();

void batch(Isa isa, std::u32string_view query,
           std::span<const std::u32string_view> targets, Metric metric,
           std::span<std::uint32_t> out);

namespace scalar {

std::uint32_t levenshtein(std::u32string_view a, std::u32string_view b);
std::uint32_t osa(std::u32string_view a, std::u32string_view b);
std::uint32_t damerau_levenshtein(std::u32string_view a,
                                  std::u32string_view b);

void batch(std::u32string_view query,
           std::span<const std::u32string_view> targets, Metric metric,
           std::span<std::uint32_t> out);

}  // namespace scalar

#if defined(PHONOCORRECT_HAVE_AVX2)
namespace avx2 {
// Levenshtein, or OSA when `osa` is set.
void batch(std::u32string_view query,
           std::span<const std::u32string_view> targets, bool osa,
           std::span<std::uint32_t> out);
}  // namespace avx2
#endif

#if defined(PHONOCORRECT_HAVE_NEON)
namespace neon {
void batch(std::u32string_view query,
           std::span<const std::u32string_view> targets, bool osa,
           std::span<std::uint32_t> out);
}  // namespace neon
#endif

}  // namespace phonocorrect::kernels
