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

#include <string>

#include "phonocorrect/phonetics.hpp"
#include "phonocorrect/utf8.hpp"

namespace phonocorrect {

namespace {

bool is_vowel(char32_t c) {
  switch (c) {
    case U'a': case U'e': case U'i': case U'o': case U'u':
    case U'á': case U'é': case U'í': case U'ó': case U'ú': case U'ü':
      return true;
    default:
      return false;
  }
}

bool is_front_vowel(char32_t c) {
  return c == U'e' || c == U'i' || c == U'é' || c == U'í';
}

char32_t bare_vowel(char32_t c) {
  switch (c) {
    case U'á': return U'a';
    case U'é': return U'e';
    case U'í': return U'i';
    case U'ó': return U'o';
    case U'ú': return U'u';
    case U'ü': return U'u';
    default: return c;
  }
}

// Doubled consonants in loanwords ("pizza") are pronounced once; rr, ll and
// cc carry their own rules.
bool is_geminate_skip(const std::u32string& w, std::size_t k) {
  if (k == 0 || w[k] != w[k - 1] || is_vowel(w[k])) return false;
  const char32_t c = w[k];
  return !(c == U'r' || c == U'l' || c == U'c');
}

}  // namespace

std::string to_ipa(std::string_view word) {
  const std::u32string w = utf8::decode(word);
  const std::size_t n = w.size();
  auto at = [&](std::size_t k) -> char32_t { return k < n ? w[k] : U'\0'; };

  std::u32string out;
  out.reserve(n * 2);
  for (std::size_t k = 0; k < n; ++k) {
    const char32_t c = w[k];
    if (is_geminate_skip(w, k)) continue;
    const char32_t next = at(k + 1);
    switch (c) {
      case U'á': case U'é': case U'ó': case U'í': case U'ú':
      case U'a': case U'e': case U'o':
        out.push_back(bare_vowel(c));
        break;
      case U'i':
        out.push_back(is_vowel(next) ? U'j' : U'i');
        break;
      case U'u':
        out.push_back(is_vowel(next) ? U'w' : U'u');
        break;
      case U'ü':
        out.push_back(U'w');
        break;
      case U'b': case U'v':
        out.push_back(U'b');
        break;
      case U'c':
        if (next == U'h') {
          out += U"tʃ";
          ++k;
        } else if (is_front_vowel(next)) {
          out.push_back(U's');
        } else {
          out.push_back(U'k');
        }
        break;
      case U'q':
        out.push_back(U'k');
        if (next == U'u') ++k;
        break;
      case U'g':
        if (next == U'u' && is_front_vowel(at(k + 2))) {
          out.push_back(U'g');
          ++k;
        } else if (is_front_vowel(next)) {
          out.push_back(U'x');
        } else {
          out.push_back(U'g');
        }
        break;
      case U'j':
        out.push_back(U'x');
        break;
      case U'l':
        if (next == U'l') {
          out.push_back(U'ʝ');
          ++k;
        } else {
          out.push_back(U'l');
        }
        break;
      case U'y':
        // Word-final y after a vowel, and the conjunction "y", are vowels.
        if (k + 1 == n && (n == 1 || is_vowel(w[k - 1]))) {
          out.push_back(U'i');
        } else {
          out.push_back(U'ʝ');
        }
        break;
      case U'ñ':
        out.push_back(U'ɲ');
        break;
      case U'r': {
        const char32_t prev = k > 0 ? w[k - 1] : U'\0';
        if (next == U'r') {
          out.push_back(U'r');
          ++k;
        } else if (k == 0 || prev == U'l' || prev == U'n' || prev == U's') {
          out.push_back(U'r');
        } else {
          out.push_back(U'ɾ');
        }
        break;
      }
      case U'h':
        break;
      case U'x':
        out += U"ks";
        break;
      case U'z':
        out.push_back(U's');
        break;
      default:
        out.push_back(c);
        break;
    }
  }
  return utf8::encode(out);
}

}  // namespace phonocorrect
