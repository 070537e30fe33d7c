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

// Double Metaphone after Lawrence Philips' reference implementation, primary
// code only. The encoder optionally re-emits the vowels the algorithm drops.

#include <initializer_list>
#include <string>

#include "phonocorrect/phonetics.hpp"
#include "phonocorrect/utf8.hpp"

namespace phonocorrect {

namespace {

class DoubleMetaphone {
 public:
  DoubleMetaphone(std::string word, bool keep_vowels)
      : word_(std::move(word)),
        length_(static_cast<int>(word_.size())),
        last_(length_ - 1),
        keep_vowels_(keep_vowels) {
    // Pad so lookahead past the end reads spaces.
    padded_ = word_ + "     ";
  }

  std::string run();

 private:
  char at(int pos) const {
    if (pos < 0 || pos >= static_cast<int>(padded_.size())) return '\0';
    return padded_[static_cast<std::size_t>(pos)];
  }

  bool string_at(int start, int len,
                 std::initializer_list<std::string_view> options) const {
    if (start < 0 || start >= static_cast<int>(padded_.size())) return false;
    const std::string_view window =
        std::string_view(padded_).substr(static_cast<std::size_t>(start),
                                         static_cast<std::size_t>(len));
    for (std::string_view o : options) {
      if (window == o) return true;
    }
    return false;
  }

  bool is_vowel(int pos) const {
    if (pos < 0 || pos >= length_) return false;
    switch (word_[static_cast<std::size_t>(pos)]) {
      case 'A': case 'E': case 'I': case 'O': case 'U': case 'Y':
        return true;
      default:
        return false;
    }
  }

  bool slavo_germanic() const {
    return word_.find('W') != std::string::npos ||
           word_.find('K') != std::string::npos ||
           word_.find("CZ") != std::string::npos ||
           word_.find("WITZ") != std::string::npos;
  }

  void add(std::string_view code) { code_ += code; }

  // Emits the vowels swallowed by the step that started at `from`.
  void flush_vowels(int from, int to) {
    if (!keep_vowels_) return;
    for (int p = from; p < to && p < length_; ++p) {
      if (is_vowel(p)) {
        code_.push_back(static_cast<char>(
            word_[static_cast<std::size_t>(p)] - 'A' + 'a'));
      }
    }
  }

  int step_c(int current);
  int step_g(int current);
  int step_j(int current);
  int step_l(int current);
  int step_s(int current);
  int step_t(int current);
  int step_w(int current);

  std::string word_;
  std::string padded_;
  int length_;
  int last_;
  bool keep_vowels_;
  std::string code_;
};

int DoubleMetaphone::step_c(int current) {
  // Various Germanic.
  if (current > 1 && !is_vowel(current - 2) &&
      string_at(current - 1, 3, {"ACH"}) && at(current + 2) != 'I' &&
      (at(current + 2) != 'E' ||
       string_at(current - 2, 6, {"BACHER", "MACHER"}))) {
    add("K");
    return current + 2;
  }
  if (current == 0 && string_at(current, 6, {"CAESAR"})) {
    add("S");
    return current + 2;
  }
  if (string_at(current, 4, {"CHIA"})) {
    add("K");
    return current + 2;
  }
  if (string_at(current, 2, {"CH"})) {
    if (current > 0 && string_at(current, 4, {"CHAE"})) {
      add("K");
      return current + 2;
    }
    // Greek roots, e.g. "chemistry", "chorus".
    if (current == 0 &&
        (string_at(current + 1, 5, {"HARAC", "HARIS"}) ||
         string_at(current + 1, 3, {"HOR", "HYM", "HIA", "HEM"})) &&
        !string_at(0, 5, {"CHORE"})) {
      add("K");
      return current + 2;
    }
    if (string_at(0, 4, {"VAN ", "VON "}) || string_at(0, 3, {"SCH"}) ||
        string_at(current - 2, 6, {"ORCHES", "ARCHIT", "ORCHID"}) ||
        string_at(current + 2, 1, {"T", "S"}) ||
        ((string_at(current - 1, 1, {"A", "O", "U", "E"}) || current == 0) &&
         string_at(current + 2, 1,
                   {"L", "R", "N", "M", "B", "H", "F", "V", "W", " "}))) {
      add("K");
    } else if (current > 0) {
      add(string_at(0, 2, {"MC"}) ? "K" : "X");
    } else {
      add("X");
    }
    return current + 2;
  }
  if (string_at(current, 2, {"CZ"}) && !string_at(current - 2, 4, {"WICZ"})) {
    add("S");
    return current + 2;
  }
  if (string_at(current + 1, 3, {"CIA"})) {
    add("X");
    return current + 3;
  }
  if (string_at(current, 2, {"CC"}) && !(current == 1 && at(0) == 'M')) {
    if (string_at(current + 2, 1, {"I", "E", "H"}) &&
        !string_at(current + 2, 2, {"HU"})) {
      if ((current == 1 && at(current - 1) == 'A') ||
          string_at(current - 1, 5, {"UCCEE", "UCCES"})) {
        add("KS");
      } else {
        add("X");
      }
      return current + 3;
    }
    add("K");
    return current + 2;
  }
  if (string_at(current, 2, {"CK", "CG", "CQ"})) {
    add("K");
    return current + 2;
  }
  if (string_at(current, 2, {"CI", "CE", "CY"})) {
    add("S");
    return current + 2;
  }
  add("K");
  if (string_at(current + 1, 2, {" C", " Q", " G"})) return current + 3;
  if (string_at(current + 1, 1, {"C", "K", "Q"}) &&
      !string_at(current + 1, 2, {"CE", "CI"})) {
    return current + 2;
  }
  return current + 1;
}

int DoubleMetaphone::step_g(int current) {
  if (at(current + 1) == 'H') {
    if (current > 0 && !is_vowel(current - 1)) {
      add("K");
      return current + 2;
    }
    if (current == 0) {
      add(at(current + 2) == 'I' ? "J" : "K");
      return current + 2;
    }
    // Parker's rule, e.g. "hugh".
    if ((current > 1 && string_at(current - 2, 1, {"B", "H", "D"})) ||
        (current > 2 && string_at(current - 3, 1, {"B", "H", "D"})) ||
        (current > 3 && string_at(current - 4, 1, {"B", "H"}))) {
      return current + 2;
    }
    if (current > 2 && at(current - 1) == 'U' &&
        string_at(current - 3, 1, {"C", "G", "L", "R", "T"})) {
      add("F");
    } else if (current > 0 && at(current - 1) != 'I') {
      add("K");
    }
    return current + 2;
  }
  if (at(current + 1) == 'N') {
    if (current == 1 && is_vowel(0) && !slavo_germanic()) {
      add("KN");
    } else if (!string_at(current + 2, 2, {"EY"}) && at(current + 1) != 'Y' &&
               !slavo_germanic()) {
      add("N");
    } else {
      add("KN");
    }
    return current + 2;
  }
  if (string_at(current + 1, 2, {"LI"}) && !slavo_germanic()) {
    add("KL");
    return current + 2;
  }
  if (current == 0 &&
      (at(current + 1) == 'Y' ||
       string_at(current + 1, 2,
                 {"ES", "EP", "EB", "EL", "EY", "IB", "IL", "IN", "IE", "EI",
                  "ER"}))) {
    add("K");
    return current + 2;
  }
  if ((string_at(current + 1, 2, {"ER"}) || at(current + 1) == 'Y') &&
      !string_at(0, 6, {"DANGER", "RANGER", "MANGER"}) &&
      !string_at(current - 1, 1, {"E", "I"}) &&
      !string_at(current - 1, 3, {"RGY", "OGY"})) {
    add("K");
    return current + 2;
  }
  if (string_at(current + 1, 1, {"E", "I", "Y"}) ||
      string_at(current - 1, 4, {"AGGI", "OGGI"})) {
    if (string_at(0, 4, {"VAN ", "VON "}) || string_at(0, 3, {"SCH"}) ||
        string_at(current + 1, 2, {"ET"})) {
      add("K");
    } else {
      add("J");
    }
    return current + 2;
  }
  add("K");
  return at(current + 1) == 'G' ? current + 2 : current + 1;
}

int DoubleMetaphone::step_j(int current) {
  if (string_at(current, 4, {"JOSE"}) || string_at(0, 4, {"SAN "})) {
    if ((current == 0 && at(current + 4) == ' ') ||
        string_at(0, 4, {"SAN "})) {
      add("H");
    } else {
      add("J");
    }
    return current + 1;
  }
  if (current == 0 && !string_at(current, 4, {"JOSE"})) {
    add("J");
  } else if (is_vowel(current - 1) && !slavo_germanic() &&
             (at(current + 1) == 'A' || at(current + 1) == 'O')) {
    add("J");
  } else if (current == last_) {
    add("J");
  } else if (!string_at(current + 1, 1,
                        {"L", "T", "K", "S", "N", "M", "B", "Z"}) &&
             !string_at(current - 1, 1, {"S", "K", "L"})) {
    add("J");
  }
  return at(current + 1) == 'J' ? current + 2 : current + 1;
}

int DoubleMetaphone::step_l(int current) {
  if (at(current + 1) == 'L') {
    // Spanish "cabrillo", "gallegos": primary keeps the L.
    add("L");
    return current + 2;
  }
  add("L");
  return current + 1;
}

int DoubleMetaphone::step_s(int current) {
  if (string_at(current - 1, 3, {"ISL", "YSL"})) return current + 1;
  if (current == 0 && string_at(current, 5, {"SUGAR"})) {
    add("X");
    return current + 1;
  }
  if (string_at(current, 2, {"SH"})) {
    add(string_at(current + 1, 4, {"HEIM", "HOEK", "HOLM", "HOLZ"}) ? "S"
                                                                   : "X");
    return current + 2;
  }
  if (string_at(current, 3, {"SIO", "SIA"}) || string_at(current, 4, {"SIAN"})) {
    add("S");
    return current + 3;
  }
  if ((current == 0 && string_at(current + 1, 1, {"M", "N", "L", "W"})) ||
      string_at(current + 1, 1, {"Z"})) {
    add("S");
    return string_at(current + 1, 1, {"Z"}) ? current + 2 : current + 1;
  }
  if (string_at(current, 2, {"SC"})) {
    if (at(current + 2) == 'H') {
      if (string_at(current + 3, 2, {"OO", "ER", "EN", "UY", "ED", "EM"})) {
        add(string_at(current + 3, 2, {"ER", "EN"}) ? "X" : "SK");
      } else {
        add("X");
      }
      return current + 3;
    }
    add(string_at(current + 2, 1, {"I", "E", "Y"}) ? "S" : "SK");
    return current + 3;
  }
  if (!(current == last_ && string_at(current - 2, 2, {"AI", "OI"}))) {
    add("S");
  }
  return string_at(current + 1, 1, {"S", "Z"}) ? current + 2 : current + 1;
}

int DoubleMetaphone::step_t(int current) {
  if (string_at(current, 4, {"TION"})) {
    add("X");
    return current + 3;
  }
  if (string_at(current, 3, {"TIA", "TCH"})) {
    add("X");
    return current + 3;
  }
  if (string_at(current, 2, {"TH"}) || string_at(current, 3, {"TTH"})) {
    if (string_at(current + 2, 2, {"OM", "AM"}) ||
        string_at(0, 4, {"VAN ", "VON "}) || string_at(0, 3, {"SCH"})) {
      add("T");
    } else {
      add("0");
    }
    return current + 2;
  }
  add("T");
  return string_at(current + 1, 1, {"T", "D"}) ? current + 2 : current + 1;
}

int DoubleMetaphone::step_w(int current) {
  if (string_at(current, 2, {"WR"})) {
    add("R");
    return current + 2;
  }
  if (current == 0 && (is_vowel(current + 1) || string_at(current, 2, {"WH"}))) {
    add("A");
  }
  if ((current == last_ && is_vowel(current - 1)) ||
      string_at(current - 1, 5, {"EWSKI", "EWSKY", "OWSKI", "OWSKY"}) ||
      string_at(0, 3, {"SCH"})) {
    return current + 1;
  }
  if (string_at(current, 4, {"WICZ", "WITZ"})) {
    add("TS");
    return current + 4;
  }
  return current + 1;
}

std::string DoubleMetaphone::run() {
  if (length_ < 1) return {};
  int current = 0;
  if (string_at(0, 2, {"GN", "KN", "PN", "WR", "PS"})) current += 1;
  if (at(0) == 'X') {
    add("S");
    current += 1;
  }

  while (current < length_) {
    const int from = current;
    const char c = at(current);
    int next = current + 1;
    bool consonant = true;
    switch (c) {
      case 'A': case 'E': case 'I': case 'O': case 'U': case 'Y':
        consonant = false;
        if (current == 0) {
          add("A");
        } else if (keep_vowels_) {
          code_.push_back(static_cast<char>(c - 'A' + 'a'));
        }
        break;
      case 'B':
        add("P");
        next = at(current + 1) == 'B' ? current + 2 : current + 1;
        break;
      case 'C':
        next = step_c(current);
        break;
      case 'D':
        if (string_at(current, 2, {"DG"})) {
          if (string_at(current + 2, 1, {"I", "E", "Y"})) {
            add("J");
            next = current + 3;
          } else {
            add("TK");
            next = current + 2;
          }
        } else if (string_at(current, 2, {"DT", "DD"})) {
          add("T");
          next = current + 2;
        } else {
          add("T");
        }
        break;
      case 'F':
        add("F");
        next = at(current + 1) == 'F' ? current + 2 : current + 1;
        break;
      case 'G':
        next = step_g(current);
        break;
      case 'H':
        if ((current == 0 || is_vowel(current - 1)) && is_vowel(current + 1)) {
          add("H");
          next = current + 2;
        }
        break;
      case 'J':
        next = step_j(current);
        break;
      case 'K':
        add("K");
        next = at(current + 1) == 'K' ? current + 2 : current + 1;
        break;
      case 'L':
        next = step_l(current);
        break;
      case 'M':
        add("M");
        if ((string_at(current - 1, 3, {"UMB"}) &&
             (current + 1 == last_ || string_at(current + 2, 2, {"ER"}))) ||
            at(current + 1) == 'M') {
          next = current + 2;
        }
        break;
      case 'N':
        add("N");
        next = at(current + 1) == 'N' ? current + 2 : current + 1;
        break;
      case 'P':
        if (at(current + 1) == 'H') {
          add("F");
          next = current + 2;
        } else {
          add("P");
          next = string_at(current + 1, 1, {"P", "B"}) ? current + 2
                                                       : current + 1;
        }
        break;
      case 'Q':
        add("K");
        next = at(current + 1) == 'Q' ? current + 2 : current + 1;
        break;
      case 'R':
        if (!(current == last_ && !slavo_germanic() &&
              string_at(current - 2, 2, {"IE"}) &&
              !string_at(current - 4, 2, {"ME", "MA"}))) {
          add("R");
        }
        next = at(current + 1) == 'R' ? current + 2 : current + 1;
        break;
      case 'S':
        next = step_s(current);
        break;
      case 'T':
        next = step_t(current);
        break;
      case 'V':
        add("F");
        next = at(current + 1) == 'V' ? current + 2 : current + 1;
        break;
      case 'W':
        next = step_w(current);
        break;
      case 'X':
        if (!(current == last_ && (string_at(current - 3, 3, {"IAU", "EAU"}) ||
                                   string_at(current - 2, 2, {"AU", "OU"})))) {
          add("KS");
        }
        next = string_at(current + 1, 1, {"C", "X"}) ? current + 2
                                                     : current + 1;
        break;
      case 'Z':
        if (at(current + 1) == 'H') {
          add("J");
          next = current + 2;
        } else {
          add("S");
          next = at(current + 1) == 'Z' ? current + 2 : current + 1;
        }
        break;
      default:
        break;
    }
    if (consonant) flush_vowels(from + 1, next);
    current = next;
  }
  return code_;
}

std::string dm_input(std::string_view word) {
  std::string out;
  for (char32_t c : utf8::decode(word)) {
    switch (c) {
      case U'á': case U'Á': c = U'a'; break;
      case U'é': case U'É': c = U'e'; break;
      case U'í': case U'Í': c = U'i'; break;
      case U'ó': case U'Ó': c = U'o'; break;
      case U'ú': case U'Ú': case U'ü': case U'Ü': c = U'u'; break;
      case U'ñ': case U'Ñ': c = U'n'; break;
      case U'ç': case U'Ç': c = U's'; break;
      default: break;
    }
    if (c >= U'a' && c <= U'z') c -= U'a' - U'A';
    if (c < 0x80) out.push_back(static_cast<char>(c));
  }
  return out;
}

}  // namespace

std::string to_dm(std::string_view word) {
  return DoubleMetaphone(dm_input(word), false).run();
}

std::string to_dmv(std::string_view word) {
  return DoubleMetaphone(dm_input(word), true).run();
}

}  // namespace phonocorrect
