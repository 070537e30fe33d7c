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

#include <optional>
#include <string>
#include <string_view>

#include "phonocorrect/normalizer.hpp"

namespace phonocorrect {

enum class Representation { kPlain, kIpa, kDm, kDmv };

inline constexpr Representation kAllRepresentations[] = {
    Representation::kPlain, Representation::kIpa, Representation::kDm,
    Representation::kDmv};

std::string_view to_string(Representation rep);
std::optional<Representation> parse_representation(std::string_view name);

struct PhoneticForm {
  NormText source;
  // Per-token encodings joined by single spaces; one group per token.
  std::string encoded;
};

PhoneticForm encode(const NormText& text, Representation rep);

// Encoding of a single normalized token, as code points.
std::u32string encode_token(std::string_view token, Representation rep);

// Drops accents from vowels (á→a ... ü→u). ñ is kept.
std::string fold_accents(std::string_view word);

// Latin-American Spanish grapheme-to-phoneme rules (seseo, yeísmo).
// Stress is not marked.
std::string to_ipa(std::string_view word);

// Primary Double Metaphone code, without the four-character truncation of
// the original implementation. Accents and ñ are folded first.
std::string to_dm(std::string_view word);

// Double Metaphone with the source vowels the code would otherwise drop
// emitted in lowercase at the point where they are consumed.
std::string to_dmv(std::string_view word);

}  // namespace phonocorrect
