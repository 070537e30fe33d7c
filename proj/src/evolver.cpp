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

#include "phonocorrect/evolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "phonocorrect/error.hpp"

namespace phonocorrect {

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error("Rng::below(0)");
  // 2^64 mod n values at the bottom would bias the remainder.
  const std::uint64_t skip = (0 - n) % n;
  std::uint64_t x = engine_();
  while (x < skip) x = engine_();
  return x % n;
}

GeneVocabulary GeneVocabulary::build(std::span<const NormText> references) {
  if (references.empty()) throw Error("vocabulary needs at least one sentence");
  std::vector<NormText> items;
  std::set<std::string> seen;
  for (const NormText& ref : references) {
    for (std::size_t i = 0; i < ref.size(); ++i) {
      NormText uni = ref.slice(i, i);
      if (seen.insert(uni.joined()).second) items.push_back(std::move(uni));
    }
  }
  for (const NormText& ref : references) {
    for (std::size_t i = 0; i + 1 < ref.size(); ++i) {
      NormText bi = ref.slice(i, i + 1);
      if (seen.insert(bi.joined()).second) items.push_back(std::move(bi));
    }
  }
  return from_items(std::move(items));
}

GeneVocabulary GeneVocabulary::from_items(std::vector<NormText> items) {
  GeneVocabulary v;
  v.full_ = Context(items);
  if (v.full_.size() != items.size()) {
    throw Error("vocabulary items must be unique");
  }
  v.items_ = std::move(items);
  return v;
}

std::size_t Chromosome::popcount() const {
  return static_cast<std::size_t>(std::count(genes.begin(), genes.end(), 1));
}

void GaParams::validate() const {
  if (population_size == 0 || population_size % 2 != 0) {
    throw Error("population size must be a positive even number");
  }
  if (tournament_size < 2) throw Error("tournament size must be at least 2");
  if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0)) {
    throw Error("crossover probability must be in [0, 1]");
  }
  if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0)) {
    throw Error("mutation probability must be in [0, 1]");
  }
  if (!(decay_factor > 0.0 && decay_factor <= 1.0)) {
    throw Error("decay factor must be in (0, 1]");
  }
  if (decay_every == 0) throw Error("decay interval must be positive");
}

Context decode(const Chromosome& chromosome, const GeneVocabulary& vocab) {
  if (chromosome.genes.size() != vocab.size()) {
    throw Error("chromosome length " + std::to_string(chromosome.genes.size()) +
                " does not match vocabulary size " +
                std::to_string(vocab.size()));
  }
  std::vector<NormText> phrases;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    if (chromosome.genes[i]) phrases.push_back(vocab.items()[i]);
  }
  return Context(std::move(phrases));
}

double evaluate(Chromosome& chromosome, const GeneVocabulary& vocab,
                std::span<const TranscriptPair> corpus,
                const CorrectionConfig& config) {
  if (corpus.empty()) throw Error("cannot evaluate on an empty corpus");
  const PreparedContext context(decode(chromosome, vocab),
                                config.representation);
  std::vector<TranscriptPair> corrected;
  corrected.reserve(corpus.size());
  for (const TranscriptPair& p : corpus) {
    corrected.push_back(
        {p.reference, correct(p.hypothesis, context, config).corrected});
  }
  chromosome.fitness = corpus_wer(corrected);
  return *chromosome.fitness;
}

namespace {

bool greedy_before(const CandidatePair& a, const CandidatePair& b) {
  if (a.distance != b.distance) return a.distance < b.distance;
  if (a.span.size() != b.span.size()) return a.span.size() > b.span.size();
  if (a.span.first != b.span.first) return a.span.first < b.span.first;
  return a.context_index < b.context_index;
}

}  // namespace

FitnessEvaluator::FitnessEvaluator(GeneVocabulary vocab,
                                   std::vector<TranscriptPair> corpus,
                                   CorrectionConfig config)
    : vocab_(std::move(vocab)), corpus_(std::move(corpus)), config_(config) {
  if (corpus_.empty()) throw Error("cannot evaluate on an empty corpus");
  const PreparedContext full(vocab_.full_context(), config_.representation);
  ranked_.reserve(corpus_.size());
  std::size_t edits = 0;
  for (const TranscriptPair& p : corpus_) {
    auto found = generate_candidates(full, p.hypothesis, config_.generator,
                                     config_.threshold, config_.metric);
    std::stable_sort(found.begin(), found.end(), greedy_before);
    ranked_.push_back(std::move(found));
    const WerBreakdown w = wer(p.reference, p.hypothesis);
    edits += w.edits();
    reference_words_ += w.reference_words;
  }
  baseline_ = static_cast<double>(edits) / static_cast<double>(reference_words_);
}

NormText FitnessEvaluator::correct_one(
    std::size_t i, const std::vector<std::uint8_t>& genes) const {
  std::vector<CandidatePair> chosen;
  for (const CandidatePair& c : ranked_[i]) {
    if (!genes[c.context_index]) continue;
    const bool clash = std::any_of(
        chosen.begin(), chosen.end(),
        [&](const CandidatePair& k) { return k.span.overlaps(c.span); });
    if (!clash) chosen.push_back(c);
  }
  if (chosen.empty()) return corpus_[i].hypothesis;
  std::sort(chosen.begin(), chosen.end(),
            [](const CandidatePair& a, const CandidatePair& b) {
              return a.span.first < b.span.first;
            });
  return apply_substitutions(corpus_[i].hypothesis, chosen,
                             vocab_.full_context())
      .corrected;
}

double FitnessEvaluator::evaluate(Chromosome& chromosome) {
  if (chromosome.genes.size() != vocab_.size()) {
    throw Error("chromosome length does not match vocabulary size");
  }
  if (auto it = memo_.find(chromosome.genes); it != memo_.end()) {
    chromosome.fitness = it->second;
    return it->second;
  }
  std::size_t edits = 0;
  for (std::size_t i = 0; i < corpus_.size(); ++i) {
    edits += wer(corpus_[i].reference, correct_one(i, chromosome.genes)).edits();
  }
  const double f =
      static_cast<double>(edits) / static_cast<double>(reference_words_);
  memo_.emplace(chromosome.genes, f);
  chromosome.fitness = f;
  return f;
}

std::vector<NormText> FitnessEvaluator::corrections(
    const Chromosome& chromosome) const {
  if (chromosome.genes.size() != vocab_.size()) {
    throw Error("chromosome length does not match vocabulary size");
  }
  std::vector<NormText> out;
  out.reserve(corpus_.size());
  for (std::size_t i = 0; i < corpus_.size(); ++i) {
    out.push_back(correct_one(i, chromosome.genes));
  }
  return out;
}

Chromosome random_chromosome(std::size_t size, Rng& rng) {
  Chromosome c;
  c.genes.resize(size);
  for (auto& g : c.genes) g = rng.uniform01() < 0.5 ? 1 : 0;
  return c;
}

const Chromosome& tournament_select(std::span<const Chromosome> population,
                                    std::size_t tournament_size, Rng& rng) {
  if (population.empty()) throw Error("tournament on an empty population");
  const Chromosome* best = nullptr;
  for (std::size_t k = 0; k < tournament_size; ++k) {
    const Chromosome& c = population[rng.below(population.size())];
    if (!c.fitness) throw Error("tournament needs evaluated chromosomes");
    if (best == nullptr || *c.fitness < *best->fitness) best = &c;
  }
  return best ? *best : population.front();
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& a,
                                            const Chromosome& b,
                                            std::size_t c_i) {
  if (a.genes.size() != b.genes.size()) {
    throw Error("crossover of chromosomes with different lengths");
  }
  const std::size_t n = a.genes.size();
  if (c_i < 1 || c_i >= n) {
    throw Error("crossover point " + std::to_string(c_i) +
                " outside [1, " + std::to_string(n) + ")");
  }
  Chromosome h1;
  Chromosome h2;
  h1.genes.assign(a.genes.begin(), a.genes.begin() + c_i);
  h1.genes.insert(h1.genes.end(), b.genes.begin() + c_i, b.genes.end());
  h2.genes.assign(b.genes.begin(), b.genes.begin() + c_i);
  h2.genes.insert(h2.genes.end(), a.genes.begin() + c_i, a.genes.end());
  return {std::move(h1), std::move(h2)};
}

void mutate(Chromosome& chromosome, double rate, Rng& rng) {
  if (!(rate >= 0.0 && rate <= 1.0)) throw Error("mutation rate outside [0, 1]");
  bool flipped = false;
  for (auto& g : chromosome.genes) {
    if (rng.uniform01() < rate) {
      g ^= 1;
      flipped = true;
    }
  }
  if (flipped) chromosome.fitness.reset();
}

double decay_mutation(double mutation_prob, std::size_t generation,
                      double factor, std::size_t every) {
  if (every == 0) throw Error("decay interval must be positive");
  double rate = mutation_prob;
  for (std::size_t k = 0; k < generation / every; ++k) rate *= factor;
  return rate;
}

namespace {

GenerationStats summarize(std::size_t g, const std::vector<Chromosome>& pop) {
  GenerationStats s;
  s.generation = g;
  std::size_t best = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    sum += *pop[i].fitness;
    if (*pop[i].fitness < *pop[best].fitness) best = i;
  }
  s.mean_fitness = sum / static_cast<double>(pop.size());
  s.best_fitness = *pop[best].fitness;
  s.best_chromosome = pop[best];
  return s;
}

}  // namespace

EvolutionResult evolve(const GaParams& params, FitnessEvaluator& evaluator,
                       Rng& rng, std::optional<std::vector<Chromosome>> initial) {
  params.validate();
  const std::size_t n = params.population_size;
  const std::size_t size = evaluator.chromosome_size();
  if (size == 0) throw Error("empty gene vocabulary");

  EvolutionResult result;
  if (initial) {
    if (initial->size() != n) {
      throw Error("initial population has " + std::to_string(initial->size()) +
                  " chromosomes, expected " + std::to_string(n));
    }
    for (const Chromosome& c : *initial) {
      if (c.genes.size() != size) {
        throw Error("initial chromosome length does not match vocabulary");
      }
    }
    result.population = std::move(*initial);
  } else {
    result.population.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      result.population.push_back(random_chromosome(size, rng));
    }
  }

  auto& pop = result.population;
  for (std::size_t g = 0; g < params.generations; ++g) {
    for (Chromosome& c : pop) evaluator.evaluate(c);
    result.stats.push_back(summarize(g, pop));

    std::vector<Chromosome> parents;
    parents.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      parents.push_back(tournament_select(pop, params.tournament_size, rng));
    }
    const double rate = decay_mutation(params.mutation_prob, g,
                                       params.decay_factor, params.decay_every);
    std::vector<Chromosome> next;
    next.reserve(n);
    for (std::size_t i = 0; i < n; i += 2) {
      Chromosome h1 = parents[i];
      Chromosome h2 = parents[i + 1];
      if (rng.uniform01() < params.crossover_prob && size > 1) {
        const std::size_t c_i = 1 + rng.below(size - 1);
        std::tie(h1, h2) = crossover(parents[i], parents[i + 1], c_i);
      }
      mutate(h1, rate, rng);
      mutate(h2, rate, rng);
      next.push_back(std::move(h1));
      next.push_back(std::move(h2));
    }
    pop = std::move(next);
  }
  for (Chromosome& c : pop) evaluator.evaluate(c);
  return result;
}

EvolutionResult evolve(const GaParams& params, FitnessEvaluator& evaluator,
                       std::optional<std::vector<Chromosome>> initial) {
  Rng rng(params.seed);
  return evolve(params, evaluator, rng, std::move(initial));
}

std::vector<Chromosome> reseed(std::span<const Chromosome> previous,
                               std::size_t population_size, Rng& rng) {
  if (population_size == 0 || population_size % 2 != 0) {
    throw Error("population size must be a positive even number");
  }
  const std::size_t half = population_size / 2;
  if (previous.size() < half) {
    throw Error("previous population smaller than half the new one");
  }
  if (previous.empty()) throw Error("reseed from an empty population");
  for (const Chromosome& c : previous) {
    if (!c.fitness) throw Error("reseed needs evaluated chromosomes");
  }
  std::vector<std::size_t> order(previous.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return *previous[a].fitness < *previous[b].fitness;
  });
  const std::size_t size = previous.front().genes.size();
  std::vector<Chromosome> out;
  out.reserve(population_size);
  for (std::size_t k = 0; k < half; ++k) out.push_back(previous[order[k]]);
  for (std::size_t k = 0; k < half; ++k) out.push_back(random_chromosome(size, rng));
  return out;
}

}  // namespace phonocorrect
