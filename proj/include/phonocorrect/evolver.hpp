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
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "phonocorrect/candidates.hpp"
#include "phonocorrect/corrector.hpp"

namespace phonocorrect {

// Single seeded source of randomness for a run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform01();
  // Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

// Gene i selects items()[i]: unigrams first, then bigrams, each in
// first-occurrence order.
class GeneVocabulary {
 public:
  static GeneVocabulary build(std::span<const NormText> references);
  static GeneVocabulary from_items(std::vector<NormText> items);

  const std::vector<NormText>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  const Context& full_context() const { return full_; }

 private:
  std::vector<NormText> items_;
  Context full_;
};

struct Chromosome {
  std::vector<std::uint8_t> genes;
  std::optional<double> fitness;

  std::size_t popcount() const;
};

struct GaParams {
  std::size_t population_size = 50;
  std::size_t generations = 100;
  std::size_t tournament_size = 3;
  double crossover_prob = 0.95;
  double mutation_prob = 0.05;
  double decay_factor = 0.8;
  std::size_t decay_every = 10;
  std::uint64_t seed = 0;

  // Throws Error describing the first bad field.
  void validate() const;
};

struct GenerationStats {
  std::size_t generation = 0;
  double mean_fitness = 0.0;
  double best_fitness = 0.0;
  Chromosome best_chromosome;

  friend bool operator==(const GenerationStats& a, const GenerationStats& b) {
    return a.generation == b.generation && a.mean_fitness == b.mean_fitness &&
           a.best_fitness == b.best_fitness &&
           a.best_chromosome.genes == b.best_chromosome.genes;
  }
};

Context decode(const Chromosome& chromosome, const GeneVocabulary& vocab);

// Decodes, corrects every hypothesis and scores the corpus. Stores the
// result on the chromosome and returns it.
double evaluate(Chromosome& chromosome, const GeneVocabulary& vocab,
                std::span<const TranscriptPair> corpus,
                const CorrectionConfig& config);

// Same fitness as evaluate(), computed from candidates generated once
// against the whole vocabulary and filtered per chromosome.
class FitnessEvaluator {
 public:
  FitnessEvaluator(GeneVocabulary vocab, std::vector<TranscriptPair> corpus,
                   CorrectionConfig config);

  double evaluate(Chromosome& chromosome);
  double baseline() const { return baseline_; }
  // Corrected hypotheses for a chromosome.
  std::vector<NormText> corrections(const Chromosome& chromosome) const;

  const GeneVocabulary& vocabulary() const { return vocab_; }
  const std::vector<TranscriptPair>& corpus() const { return corpus_; }
  const CorrectionConfig& config() const { return config_; }
  std::size_t chromosome_size() const { return vocab_.size(); }
  std::size_t distinct_evaluations() const { return memo_.size(); }

 private:
  NormText correct_one(std::size_t i, const std::vector<std::uint8_t>& genes) const;

  GeneVocabulary vocab_;
  std::vector<TranscriptPair> corpus_;
  CorrectionConfig config_;
  // Per hypothesis, in greedy selection order.
  std::vector<std::vector<CandidatePair>> ranked_;
  std::size_t reference_words_ = 0;
  double baseline_ = 0.0;
  std::map<std::vector<std::uint8_t>, double> memo_;
};

Chromosome random_chromosome(std::size_t size, Rng& rng);

// Best of T_s uniform draws with replacement; ties go to the earlier draw.
const Chromosome& tournament_select(std::span<const Chromosome> population,
                                    std::size_t tournament_size, Rng& rng);

// Single-point crossover after gene c_i (1 <= c_i < size).
std::pair<Chromosome, Chromosome> crossover(const Chromosome& a,
                                            const Chromosome& b,
                                            std::size_t c_i);

void mutate(Chromosome& chromosome, double rate, Rng& rng);

double decay_mutation(double mutation_prob, std::size_t generation,
                      double factor = 0.8, std::size_t every = 10);

struct EvolutionResult {
  // Final population with fitness filled in.
  std::vector<Chromosome> population;
  std::vector<GenerationStats> stats;
};

EvolutionResult evolve(const GaParams& params, FitnessEvaluator& evaluator,
                       Rng& rng,
                       std::optional<std::vector<Chromosome>> initial = {});
// Uses Rng(params.seed).
EvolutionResult evolve(const GaParams& params, FitnessEvaluator& evaluator,
                       std::optional<std::vector<Chromosome>> initial = {});

// Best half of `previous` (stable by position) plus fresh random chromosomes.
std::vector<Chromosome> reseed(std::span<const Chromosome> previous,
                               std::size_t population_size, Rng& rng);

}  // namespace phonocorrect
