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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace phonocorrect {

// Canonical token stream: lowercase Spanish letters (accents and ñ kept) and
// digits, no punctuation, tokens joined by single spaces.
class NormText {
 public:
  NormText() = default;

  // Throws Error if a token is empty or contains a character outside
  // [a-z áéíóúüñ 0-9].
  static NormText from_tokens(std::vector<std::string> tokens);

  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::string& joined() const { return joined_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }

  // Tokens [first, last], inclusive.
  NormText slice(std::size_t first, std::size_t last) const;

  friend bool operator==(const NormText& a, const NormText& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  std::string joined_;
};

NormText normalize(std::string_view raw);

// True when every code point of `token` may appear in a normalized token.
bool is_normalized_token(std::string_view token);

// Number of syllable nuclei. Throws Error when the word has neither a vowel
// nor a digit.
std::size_t syllable_count(std::string_view word);

// Sum of syllable_count over tokens; tokens without a nucleus count as one.
std::size_t syllable_length(std::span<const std::string> tokens);

// Code points of the joined form, spaces included.
std::size_t letter_length(std::span<const std::string> tokens);

}  // namespace phonocorrect
