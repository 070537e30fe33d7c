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

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "phonocorrect/corrector.hpp"
#include "phonocorrect/error.hpp"

using phonocorrect::CandidatePair;
using phonocorrect::Context;
using phonocorrect::CorrectionConfig;
using phonocorrect::GeneratorKind;
using phonocorrect::Metric;
using phonocorrect::normalize;
using phonocorrect::NormText;
using phonocorrect::Representation;
using phonocorrect::Threshold;
using phonocorrect::TokenSpan;

namespace {

Context ctx(std::vector<std::string> phrases) {
  return Context::from_strings(phrases);
}

CandidatePair cand(std::size_t first, std::size_t last, std::size_t index,
                   double distance) {
  return CandidatePair{TokenSpan{first, last}, index, distance};
}

}  // namespace

TEST_CASE("config strings") {
  const CorrectionConfig c = phonocorrect::parse_config("ipa/let/lev/0.4");
  CHECK(c.representation == Representation::kIpa);
  CHECK(c.generator == GeneratorKind::kLetters);
  CHECK(c.metric == Metric::kLevenshtein);
  CHECK(c.threshold.value() == 0.4);
  CHECK(phonocorrect::to_string(c) == "ipa/let/lev/0.4");
  CHECK(phonocorrect::to_string(phonocorrect::parse_config("dmv/syl/dl/0.05")) ==
        "dmv/syl/dl/0.05");
  for (const char* bad : {"ipa/let/lev", "ipa/let/lev/0.4/x", "xyz/let/lev/0.4",
                          "ipa/abc/lev/0.4", "ipa/let/abc/0.4", "ipa/let/lev/1.5",
                          "ipa/let/lev/0.4x", ""}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(phonocorrect::parse_config(bad), phonocorrect::Error);
  }
}

TEST_CASE("correct examples") {
  const auto cfg = phonocorrect::parse_config("plain/let/lev/0.45");
  const auto r = phonocorrect::correct(normalize("quiero una pista"),
                                       ctx({"pizza"}), cfg);
  CHECK(r.corrected.joined() == "quiero una pizza");
  REQUIRE(r.applied.size() == 1);
  CHECK(r.applied[0].span == TokenSpan{2, 2});
  CHECK(r.original.joined() == "quiero una pista");

  const auto none = phonocorrect::correct(
      normalize("hola"), ctx({"una pizza grande con queso y jamón"}), cfg);
  CHECK(none.corrected.joined() == "hola");
  CHECK(none.applied.empty());

  const auto empty_context =
      phonocorrect::correct(normalize("hola mundo"), Context{}, cfg);
  CHECK(empty_context.corrected.joined() == "hola mundo");
}

TEST_CASE("greedy selection") {
  auto picked = phonocorrect::select_non_overlapping(
      {cand(2, 3, 0, 0.20), cand(1, 2, 1, 0.10)});
  CHECK(picked == std::vector<CandidatePair>{cand(1, 2, 1, 0.10)});

  // Equal distance: longer span, then earlier span, then context order.
  picked = phonocorrect::select_non_overlapping(
      {cand(0, 0, 0, 0.1), cand(0, 1, 1, 0.1)});
  CHECK(picked == std::vector<CandidatePair>{cand(0, 1, 1, 0.1)});
  picked = phonocorrect::select_non_overlapping(
      {cand(1, 2, 0, 0.1), cand(0, 1, 0, 0.1)});
  CHECK(picked == std::vector<CandidatePair>{cand(0, 1, 0, 0.1)});
  picked = phonocorrect::select_non_overlapping(
      {cand(3, 3, 2, 0.1), cand(3, 3, 1, 0.1)});
  CHECK(picked == std::vector<CandidatePair>{cand(3, 3, 1, 0.1)});

  // Output is in transcript order.
  picked = phonocorrect::select_non_overlapping(
      {cand(4, 4, 0, 0.0), cand(0, 1, 0, 0.3)});
  CHECK(picked == std::vector<CandidatePair>{cand(0, 1, 0, 0.3), cand(4, 4, 0, 0.0)});
}

TEST_CASE("substitutions apply right to left") {
  const Context c = ctx({"x", "y z", "b"});
  const NormText t = normalize("a b c d");
  const std::vector<CandidatePair> sel = {cand(0, 1, 0, 0.1), cand(3, 3, 1, 0.1)};
  const auto r = phonocorrect::apply_substitutions(t, sel, c);
  CHECK(r.corrected.joined() == "x c y z");
  CHECK(r.applied == sel);

  // A no-op keeps its place but is not reported.
  const std::vector<CandidatePair> noop = {cand(1, 1, 2, 0.0), cand(3, 3, 0, 0.2)};
  const auto r2 = phonocorrect::apply_substitutions(t, noop, c);
  CHECK(r2.corrected.joined() == "a b c x");
  CHECK(r2.applied == std::vector<CandidatePair>{cand(3, 3, 0, 0.2)});

  CHECK_THROWS_AS(
      phonocorrect::apply_substitutions(t, std::vector{cand(2, 4, 0, 0.1)}, c),
      phonocorrect::Error);
}

TEST_CASE("wer examples") {
  auto w = phonocorrect::wer(normalize("hola mundo"), normalize("hola mundo"));
  CHECK(w.edits() == 0);
  CHECK(w.reference_words == 2);
  CHECK(w.wer == 0.0);

  w = phonocorrect::wer(normalize("quiero una pizza grande"),
                        normalize("quiero la pizza"));
  CHECK(w.substitutions == 1);
  CHECK(w.deletions == 1);
  CHECK(w.insertions == 0);
  CHECK(w.reference_words == 4);
  CHECK(w.wer == 0.5);

  w = phonocorrect::wer(normalize("si"), normalize("si no no"));
  CHECK(w.insertions == 2);
  CHECK(w.substitutions + w.deletions == 0);
  CHECK(w.wer == 2.0);

  w = phonocorrect::wer(normalize("a b"), NormText{});
  CHECK(w.deletions == 2);

  CHECK_THROWS_AS(phonocorrect::wer(NormText{}, normalize("a")), phonocorrect::Error);
}

TEST_CASE("corpus wer sums edits over words") {
  const std::vector<phonocorrect::TranscriptPair> pairs = {
      {normalize("a b c d"), normalize("a b c e")},
      {normalize("a b c d e f"), normalize("a b c d e f")}};
  CHECK(phonocorrect::corpus_wer(pairs) == doctest::Approx(0.1).epsilon(1e-15));
  const std::vector<phonocorrect::TranscriptPair> one = {
      {normalize("quiero una pizza grande"), normalize("quiero la pizza")}};
  CHECK(phonocorrect::corpus_wer(one) == 0.5);
  CHECK_THROWS_AS(phonocorrect::corpus_wer(std::vector<phonocorrect::TranscriptPair>{}),
                  phonocorrect::Error);
}

TEST_CASE("wer matches the recursive oracle") {
  std::mt19937_64 rng(17);
  const std::vector<std::string> words = {"a", "b", "c", "d"};
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::string> ref(1 + rng() % 7);
    std::vector<std::string> hyp(rng() % 8);
    for (auto& w : ref) w = words[rng() % words.size()];
    for (auto& w : hyp) w = words[rng() % words.size()];
    const auto r = NormText::from_tokens(ref);
    const auto h = NormText::from_tokens(hyp);
    const auto w = phonocorrect::wer(r, h);
    CHECK(w.edits() == oracle::word_edits(ref, hyp));
    CHECK(ref.size() - w.deletions + w.insertions == hyp.size());
    CHECK(phonocorrect::wer(r, r).edits() == 0);

    auto ref2 = ref;
    auto hyp2 = hyp;
    ref2.push_back("tail");
    hyp2.push_back("tail");
    CHECK(phonocorrect::wer(NormText::from_tokens(ref2), NormText::from_tokens(hyp2))
              .edits() == w.edits());
  }
}

TEST_CASE("clean input is left unchanged") {
  std::mt19937_64 rng(4);
  const std::vector<std::string> words = {"mesa", "para", "dos", "pollo", "frito",
                                          "con", "papas", "sopa", "de", "arroz"};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::string> tokens(1 + rng() % 6);
    for (auto& w : tokens) w = words[rng() % words.size()];
    const auto text = NormText::from_tokens(tokens);
    std::vector<NormText> phrases;
    for (int k = 0; k < 3; ++k) {
      const std::size_t a = rng() % tokens.size();
      const std::size_t b = a + rng() % (tokens.size() - a);
      phrases.push_back(text.slice(a, b));
    }
    const Context c(phrases);
    for (GeneratorKind g : phonocorrect::kAllGenerators) {
      for (Metric m : phonocorrect::kAllMetrics) {
        const CorrectionConfig cfg{Representation::kPlain, g, m, Threshold(0.01)};
        const auto r = phonocorrect::correct(text, c, cfg);
        CHECK(r.corrected == text);
        CHECK(r.applied.empty());
      }
    }
  }
}

TEST_CASE("applied substitutions never overlap") {
  std::mt19937_64 rng(6);
  const std::vector<std::string> words = {"una", "pisa", "pizza", "con", "kezo",
                                          "queso", "y", "ola", "hola"};
  const Context c = ctx({"una pizza", "con queso", "hola", "pizza"});
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::string> tokens(1 + rng() % 8);
    for (auto& w : tokens) w = words[rng() % words.size()];
    for (Representation rep : phonocorrect::kAllRepresentations) {
      const CorrectionConfig cfg{rep, phonocorrect::kAllGenerators[trial % 3],
                                 Metric::kLevenshtein, Threshold(0.5)};
      const auto r = phonocorrect::correct(NormText::from_tokens(tokens), c, cfg);
      for (std::size_t i = 0; i < r.applied.size(); ++i) {
        for (std::size_t j = i + 1; j < r.applied.size(); ++j) {
          CHECK_FALSE(r.applied[i].span.overlaps(r.applied[j].span));
        }
      }
    }
  }
}
