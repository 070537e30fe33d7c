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

#include "phonocorrect/normalizer.hpp"

#include "phonocorrect/error.hpp"
#include "phonocorrect/utf8.hpp"

namespace phonocorrect {

namespace {

bool is_allowed(char32_t c) {
  if ((c >= U'a' && c <= U'z') || (c >= U'0' && c <= U'9')) return true;
  switch (c) {
    case U'á': case U'é': case U'í': case U'ó': case U'ú': case U'ü':
    case U'ñ':
      return true;
    default:
      return false;
  }
}

// Characters deleted outright; they never split a token.
bool is_removed_punctuation(char32_t c) {
  switch (c) {
    case U'.': case U',': case U';': case U':': case U'¿': case U'?':
    case U'¡': case U'!': case U'"': case U'\'': case U'(': case U')':
    case U'-': case U'…':
      return true;
    default:
      return false;
  }
}

char32_t to_lower(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + (U'a' - U'A');
  switch (c) {
    case U'Á': return U'á';
    case U'É': return U'é';
    case U'Í': return U'í';
    case U'Ó': return U'ó';
    case U'Ú': return U'ú';
    case U'Ü': return U'ü';
    case U'Ñ': return U'ñ';
    default: return c;
  }
}

void join_into(const std::vector<std::string>& tokens, std::string& out) {
  out.clear();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
}

bool is_strong(char32_t c) {
  switch (c) {
    case U'a': case U'e': case U'o':
    case U'á': case U'é': case U'í': case U'ó': case U'ú':
      return true;
    default:
      return false;
  }
}

bool is_vowel_letter(char32_t c) {
  return is_strong(c) || c == U'i' || c == U'u' || c == U'ü';
}

bool is_front(char32_t c) {
  return c == U'e' || c == U'i' || c == U'é' || c == U'í';
}

enum class Sound { kConsonant, kStrong, kWeak, kDigit };

std::vector<Sound> classify(const std::u32string& w) {
  std::vector<Sound> out(w.size(), Sound::kConsonant);
  for (std::size_t k = 0; k < w.size(); ++k) {
    const char32_t c = w[k];
    if (c >= U'0' && c <= U'9') {
      out[k] = Sound::kDigit;
    } else if (is_strong(c)) {
      out[k] = Sound::kStrong;
    } else if (c == U'i' || c == U'ü') {
      out[k] = Sound::kWeak;
    } else if (c == U'u') {
      // Mute u in "qu" and "gue"/"gui".
      const bool after_q = k > 0 && w[k - 1] == U'q';
      const bool after_g = k > 0 && w[k - 1] == U'g' && k + 1 < w.size() &&
                           is_front(w[k + 1]);
      out[k] = (after_q || after_g) ? Sound::kConsonant : Sound::kWeak;
    } else if (c == U'y') {
      // y is a vowel unless it starts a syllable before another vowel.
      const bool before_vowel = k + 1 < w.size() && is_vowel_letter(w[k + 1]);
      out[k] = before_vowel ? Sound::kConsonant : Sound::kWeak;
    }
  }
  return out;
}

}  // namespace

bool is_normalized_token(std::string_view token) {
  if (token.empty()) return false;
  for (char32_t c : utf8::decode(token)) {
    if (!is_allowed(c)) return false;
  }
  return true;
}

NormText NormText::from_tokens(std::vector<std::string> tokens) {
  for (const auto& t : tokens) {
    if (!is_normalized_token(t)) {
      throw Error("not a normalized token: '" + t + "'");
    }
  }
  NormText out;
  out.tokens_ = std::move(tokens);
  join_into(out.tokens_, out.joined_);
  return out;
}

NormText NormText::slice(std::size_t first, std::size_t last) const {
  if (first > last || last >= tokens_.size()) {
    throw Error("token slice out of range");
  }
  NormText out;
  out.tokens_.assign(tokens_.begin() + static_cast<std::ptrdiff_t>(first),
                     tokens_.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  join_into(out.tokens_, out.joined_);
  return out;
}

NormText normalize(std::string_view raw) {
  std::vector<std::string> tokens;
  std::string current;
  for (char32_t c : utf8::decode(raw)) {
    c = to_lower(c);
    if (is_allowed(c)) {
      utf8::append(current, c);
    } else if (is_removed_punctuation(c)) {
      continue;
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return NormText::from_tokens(std::move(tokens));
}

namespace {

std::size_t count_nuclei(std::string_view word) {
  const std::u32string w = utf8::decode(word);
  const std::vector<Sound> sounds = classify(w);
  std::size_t nuclei = 0;
  bool in_group = false;
  Sound prev = Sound::kConsonant;
  for (Sound s : sounds) {
    switch (s) {
      case Sound::kDigit:
        ++nuclei;
        in_group = false;
        break;
      case Sound::kConsonant:
        in_group = false;
        break;
      case Sound::kStrong:
      case Sound::kWeak:
        if (!in_group) {
          ++nuclei;
          in_group = true;
        } else if (s == Sound::kStrong && prev == Sound::kStrong) {
          ++nuclei;  // hiatus
        }
        break;
    }
    prev = s;
  }
  return nuclei;
}

}  // namespace

std::size_t syllable_count(std::string_view word) {
  const std::size_t nuclei = count_nuclei(word);
  if (nuclei == 0) {
    throw Error("cannot syllabify '" + std::string(word) + "'");
  }
  return nuclei;
}

std::size_t syllable_length(std::span<const std::string> tokens) {
  std::size_t total = 0;
  for (const auto& t : tokens) {
    const std::size_t n = count_nuclei(t);
    total += n == 0 ? 1 : n;
  }
  return total;
}

std::size_t letter_length(std::span<const std::string> tokens) {
  if (tokens.empty()) return 0;
  std::size_t total = tokens.size() - 1;
  for (const auto& t : tokens) total += utf8::length(t);
  return total;
}

}  // namespace phonocorrect
