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

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "phonocorrect/error.hpp"
#include "phonocorrect/evolver.hpp"

using phonocorrect::Chromosome;
using phonocorrect::GaParams;
using phonocorrect::GeneVocabulary;
using phonocorrect::normalize;
using phonocorrect::NormText;
using phonocorrect::Rng;
using phonocorrect::TranscriptPair;

namespace {

std::vector<NormText> texts(std::vector<std::string> raw) {
  std::vector<NormText> out;
  for (const auto& r : raw) out.push_back(normalize(r));
  return out;
}

std::vector<std::string> joined(const phonocorrect::Context& c) {
  std::vector<std::string> out;
  for (const auto& p : c.phrases()) out.push_back(p.joined());
  return out;
}

Chromosome bits(const std::string& s) {
  Chromosome c;
  for (char ch : s) c.genes.push_back(ch == '1' ? 1 : 0);
  return c;
}

std::string str(const Chromosome& c) {
  std::string s;
  for (auto g : c.genes) s += g ? '1' : '0';
  return s;
}

std::vector<TranscriptPair> small_corpus() {
  return {
      {normalize("quiero una pizza"), normalize("quiero una pisa")},
      {normalize("con queso"), normalize("con keso")},
      {normalize("una cerveza fría"), normalize("una serbesa fria")},
      {normalize("para llevar"), normalize("para yevar")},
      {normalize("pizza con queso"), normalize("pizza con queso")},
  };
}

GeneVocabulary vocab_of(const std::vector<TranscriptPair>& corpus) {
  std::vector<NormText> refs;
  for (const auto& p : corpus) refs.push_back(p.reference);
  return GeneVocabulary::build(refs);
}

const auto kConfig = phonocorrect::parse_config("ipa/win/lev/0.4");

}  // namespace

TEST_CASE("vocabulary lists unigrams then bigrams") {
  CHECK(joined(GeneVocabulary::build(texts({"a b", "b a"})).full_context()) ==
        std::vector<std::string>{"a", "b", "a b", "b a"});
  CHECK(joined(GeneVocabulary::build(texts({"a a"})).full_context()) ==
        std::vector<std::string>{"a", "a a"});
  CHECK(GeneVocabulary::build(texts({"hola"})).size() == 1);
  CHECK_THROWS_AS(GeneVocabulary::build(std::vector<NormText>{}), phonocorrect::Error);
}

TEST_CASE("decode keeps selected items in order") {
  const auto v = GeneVocabulary::from_items(texts({"a", "b", "c", "d"}));
  CHECK(joined(decode(bits("1010"), v)) == std::vector<std::string>{"a", "c"});
  CHECK(decode(bits("0000"), v).empty());
  CHECK(decode(bits("1111"), v).size() == 4);
  CHECK_THROWS_AS(decode(bits("101"), v), phonocorrect::Error);

  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const auto c = phonocorrect::random_chromosome(4, rng);
    CHECK(decode(c, v).size() == c.popcount());
  }
}

TEST_CASE("fitness of the empty context is the baseline") {
  const auto corpus = small_corpus();
  const auto v = vocab_of(corpus);
  Chromosome zero;
  zero.genes.assign(v.size(), 0);
  const double direct = phonocorrect::evaluate(zero, v, corpus, kConfig);
  CHECK(direct == phonocorrect::corpus_wer(corpus));
  CHECK(zero.fitness == direct);

  phonocorrect::FitnessEvaluator cached(v, corpus, kConfig);
  Chromosome zero2;
  zero2.genes.assign(v.size(), 0);
  CHECK(cached.evaluate(zero2) == direct);
  CHECK(cached.baseline() == direct);
  const auto out = cached.corrections(zero2);
  for (std::size_t i = 0; i < corpus.size(); ++i) CHECK(out[i] == corpus[i].hypothesis);
}

TEST_CASE("selecting the fixing phrase lowers the WER") {
  const auto corpus = small_corpus();
  const auto v = vocab_of(corpus);
  Chromosome c;
  c.genes.assign(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.items()[i].joined() == "pizza") c.genes[i] = 1;
  }
  const double baseline = phonocorrect::corpus_wer(corpus);
  CHECK(phonocorrect::evaluate(c, v, corpus, kConfig) < baseline);
  const double first = *c.fitness;
  CHECK(phonocorrect::evaluate(c, v, corpus, kConfig) == first);
}

TEST_CASE("cached fitness equals direct evaluation") {
  const auto corpus = small_corpus();
  const auto v = vocab_of(corpus);
  for (const char* cfg : {"ipa/win/lev/0.4", "plain/let/osa/0.3", "dmv/syl/dl/0.5",
                          "dm/win/lev/0.2", "ipa/let/lev/0.6"}) {
    const auto config = phonocorrect::parse_config(cfg);
    phonocorrect::FitnessEvaluator cached(v, corpus, config);
    Rng rng(42);
    for (int i = 0; i < 60; ++i) {
      Chromosome a = phonocorrect::random_chromosome(v.size(), rng);
      Chromosome b = a;
      CAPTURE(cfg);
      CHECK(cached.evaluate(a) == phonocorrect::evaluate(b, v, corpus, config));
      CHECK(cached.evaluate(a) == *b.fitness);
    }
  }
}

TEST_CASE("tournament picks the best drawn individual") {
  std::vector<Chromosome> pop;
  for (int i = 0; i < 6; ++i) {
    Chromosome c = bits(std::string(6, '0'));
    c.genes[i] = 1;
    c.fitness = 0.1 * ((i * 5) % 6);
    pop.push_back(c);
  }
  Rng rng(9);
  Rng replay(9);
  for (int round = 0; round < 200; ++round) {
    const Chromosome& got = phonocorrect::tournament_select(pop, 3, rng);
    std::size_t best = replay.below(pop.size());
    for (int k = 1; k < 3; ++k) {
      const std::size_t j = replay.below(pop.size());
      if (*pop[j].fitness < *pop[best].fitness) best = j;
    }
    CHECK(&got == &pop[best]);
  }
  Rng wide(3);
  CHECK(&phonocorrect::tournament_select(pop, 300, wide) == &pop[0]);
  const std::vector<Chromosome> single = {pop[3]};
  CHECK(phonocorrect::tournament_select(single, 4, wide).genes == pop[3].genes);
}

TEST_CASE("single-point crossover") {
  auto [h1, h2] = phonocorrect::crossover(bits("11111"), bits("00000"), 2);
  CHECK(str(h1) == "11000");
  CHECK(str(h2) == "00111");
  std::tie(h1, h2) = phonocorrect::crossover(bits("10110"), bits("10110"), 3);
  CHECK(str(h1) == "10110");
  CHECK(str(h2) == "10110");
  std::tie(h1, h2) = phonocorrect::crossover(bits("11111"), bits("00000"), 4);
  CHECK(str(h1) == "11110");
  CHECK(str(h2) == "00001");
  CHECK_THROWS_AS(phonocorrect::crossover(bits("11"), bits("000"), 1),
                  phonocorrect::Error);
  CHECK_THROWS_AS(phonocorrect::crossover(bits("111"), bits("000"), 0),
                  phonocorrect::Error);
  CHECK_THROWS_AS(phonocorrect::crossover(bits("111"), bits("000"), 3),
                  phonocorrect::Error);

  Rng rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng.below(30);
    const auto a = phonocorrect::random_chromosome(n, rng);
    const auto b = phonocorrect::random_chromosome(n, rng);
    const auto [c, d] = phonocorrect::crossover(a, b, 1 + rng.below(n - 1));
    for (std::size_t i = 0; i < n; ++i) {
      CHECK((c.genes[i] == a.genes[i] || c.genes[i] == b.genes[i]));
      CHECK(c.genes[i] + d.genes[i] == a.genes[i] + b.genes[i]);
    }
    CHECK_FALSE(c.fitness.has_value());
  }
}

TEST_CASE("mutation") {
  Rng rng(5);
  Chromosome c = bits("1100101");
  c.fitness = 0.3;
  phonocorrect::mutate(c, 0.0, rng);
  CHECK(str(c) == "1100101");
  CHECK(c.fitness.has_value());
  phonocorrect::mutate(c, 1.0, rng);
  CHECK(str(c) == "0011010");
  CHECK_FALSE(c.fitness.has_value());
  CHECK_THROWS_AS(phonocorrect::mutate(c, 1.5, rng), phonocorrect::Error);

  const std::size_t draws = 100000;
  const double p = 0.05;
  Chromosome big;
  big.genes.assign(draws, 0);
  phonocorrect::mutate(big, p, rng);
  const double flips = static_cast<double>(big.popcount());
  const double mean = p * draws;
  const double sigma = std::sqrt(draws * p * (1 - p));
  CHECK(std::abs(flips - mean) <= 3 * sigma);
}

TEST_CASE("mutation decay") {
  CHECK(phonocorrect::decay_mutation(0.05, 0) == 0.05);
  CHECK(phonocorrect::decay_mutation(0.05, 9) == 0.05);
  CHECK(phonocorrect::decay_mutation(0.05, 10) == 0.05 * 0.8);
  CHECK(std::abs(phonocorrect::decay_mutation(0.05, 10) - 0.04) < 1e-15);
  CHECK(std::abs(phonocorrect::decay_mutation(0.05, 20) - 0.032) < 1e-15);
  CHECK(std::abs(phonocorrect::decay_mutation(0.05, 25) - 0.032) < 1e-15);
  CHECK(std::abs(phonocorrect::decay_mutation(0.05, 30) - 0.0256) < 1e-15);
}

TEST_CASE("parameter validation") {
  GaParams p;
  CHECK(p.population_size == 50);
  CHECK(p.generations == 100);
  CHECK(p.crossover_prob == 0.95);
  CHECK(p.mutation_prob == 0.05);
  CHECK_NOTHROW(p.validate());
  auto bad = [](auto mutate_params) {
    GaParams q;
    mutate_params(q);
    CHECK_THROWS_AS(q.validate(), phonocorrect::Error);
  };
  bad([](GaParams& q) { q.population_size = 7; });
  bad([](GaParams& q) { q.population_size = 0; });
  bad([](GaParams& q) { q.tournament_size = 1; });
  bad([](GaParams& q) { q.crossover_prob = -0.1; });
  bad([](GaParams& q) { q.mutation_prob = 1.1; });
  bad([](GaParams& q) { q.decay_factor = 0.0; });
  bad([](GaParams& q) { q.decay_every = 0; });
}

TEST_CASE("evolve") {
  const auto corpus = small_corpus();
  phonocorrect::FitnessEvaluator eval(vocab_of(corpus), corpus, kConfig);
  GaParams p;
  p.population_size = 10;
  p.generations = 15;
  p.seed = 77;

  const auto a = phonocorrect::evolve(p, eval);
  const auto b = phonocorrect::evolve(p, eval);
  CHECK(a.stats.size() == 15);
  CHECK(a.stats == b.stats);
  CHECK(a.population.size() == 10);
  for (std::size_t g = 0; g < a.stats.size(); ++g) {
    CHECK(a.stats[g].generation == g);
    CHECK(a.stats[g].best_fitness <= a.stats[g].mean_fitness);
    CHECK(a.stats[g].best_chromosome.fitness == a.stats[g].best_fitness);
  }
  for (const auto& c : a.population) CHECK(c.fitness.has_value());

  p.seed = 78;
  CHECK_FALSE(phonocorrect::evolve(p, eval).stats == a.stats);

  p.generations = 0;
  Rng rng(1);
  std::vector<Chromosome> initial;
  for (int i = 0; i < 10; ++i) {
    initial.push_back(phonocorrect::random_chromosome(eval.chromosome_size(), rng));
  }
  const auto none = phonocorrect::evolve(p, eval, initial);
  CHECK(none.stats.empty());
  REQUIRE(none.population.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) CHECK(none.population[i].genes == initial[i].genes);

  initial.pop_back();
  CHECK_THROWS_AS(phonocorrect::evolve(p, eval, initial), phonocorrect::Error);
  p.population_size = 9;
  CHECK_THROWS_AS(phonocorrect::evolve(p, eval), phonocorrect::Error);
}

TEST_CASE("pure selection never raises the mean") {
  const auto corpus = small_corpus();
  phonocorrect::FitnessEvaluator eval(vocab_of(corpus), corpus,
                                      phonocorrect::parse_config("ipa/win/lev/0.4"));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GaParams p;
    p.population_size = 12;
    p.generations = 10;
    p.tournament_size = 12;
    p.crossover_prob = 0.0;
    p.mutation_prob = 0.0;
    p.seed = seed;
    const auto r = phonocorrect::evolve(p, eval);
    for (std::size_t g = 1; g < r.stats.size(); ++g) {
      CHECK(r.stats[g].mean_fitness <= r.stats[g - 1].mean_fitness);
    }
  }
}

TEST_CASE("reseed keeps the best half") {
  std::vector<Chromosome> prev = {bits("0001"), bits("0010"), bits("0100"), bits("1000")};
  prev[0].fitness = 0.4;
  prev[1].fitness = 0.1;
  prev[2].fitness = 0.3;
  prev[3].fitness = 0.2;
  Rng r1(1);
  Rng r2(2);
  const auto a = phonocorrect::reseed(prev, 4, r1);
  const auto b = phonocorrect::reseed(prev, 4, r2);
  REQUIRE(a.size() == 4);
  CHECK(str(a[0]) == "0010");
  CHECK(str(a[1]) == "1000");
  CHECK(a[0].genes == b[0].genes);
  CHECK(a[1].genes == b[1].genes);
  CHECK_FALSE(a[2].fitness.has_value());
  CHECK((a[2].genes != b[2].genes || a[3].genes != b[3].genes));

  for (auto& c : prev) c.fitness = 0.5;
  Rng r3(3);
  const auto tied = phonocorrect::reseed(prev, 4, r3);
  CHECK(str(tied[0]) == "0001");
  CHECK(str(tied[1]) == "0010");

  Rng r4(4);
  CHECK_THROWS_AS(phonocorrect::reseed(std::vector<Chromosome>(prev.begin(), prev.begin() + 1), 4, r4),
                  phonocorrect::Error);
  CHECK_THROWS_AS(phonocorrect::reseed(prev, 5, r4), phonocorrect::Error);
}

TEST_CASE("rng helpers") {
  Rng rng(123);
  for (int i = 0; i < 10000; ++i) {
    const double x = rng.uniform01();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    CHECK(rng.below(7) < 7);
  }
  CHECK_THROWS_AS(rng.below(0), phonocorrect::Error);
  Rng a(5);
  Rng b(5);
  for (int i = 0; i < 100; ++i) CHECK(a.below(1000) == b.below(1000));
}
