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

#include "phonocorrect/phonetics.hpp"

#include "phonocorrect/utf8.hpp"

namespace phonocorrect {

std::string_view to_string(Representation rep) {
  switch (rep) {
    case Representation::kPlain: return "plain";
    case Representation::kIpa: return "ipa";
    case Representation::kDm: return "dm";
    case Representation::kDmv: return "dmv";
  }
  return "?";
}

std::optional<Representation> parse_representation(std::string_view name) {
  for (Representation r : kAllRepresentations) {
    if (name == to_string(r)) return r;
  }
  if (name == "text") return Representation::kPlain;
  return std::nullopt;
}

std::string fold_accents(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (char32_t c : utf8::decode(word)) {
    switch (c) {
      case U'á': c = U'a'; break;
      case U'é': c = U'e'; break;
      case U'í': c = U'i'; break;
      case U'ó': c = U'o'; break;
      case U'ú': case U'ü': c = U'u'; break;
      default: break;
    }
    utf8::append(out, c);
  }
  return out;
}

std::u32string encode_token(std::string_view token, Representation rep) {
  switch (rep) {
    case Representation::kPlain: return utf8::decode(fold_accents(token));
    case Representation::kIpa: return utf8::decode(to_ipa(token));
    case Representation::kDm: return utf8::decode(to_dm(token));
    case Representation::kDmv: return utf8::decode(to_dmv(token));
  }
  return {};
}

PhoneticForm encode(const NormText& text, Representation rep) {
  PhoneticForm form{text, {}};
  std::u32string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i) out.push_back(U' ');
    out += encode_token(text.tokens()[i], rep);
  }
  form.encoded = utf8::encode(out);
  return form;
}

}  // namespace phonocorrect
