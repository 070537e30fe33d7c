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

#include <fstream>
#include <cctype>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "phonocorrect/error.hpp"
#include "phonocorrect/harness.hpp"

namespace phonocorrect {

namespace {

constexpr const char* kEnvPrefix = "PHONOCORRECT_";

std::string env_name(const char* flag) {
  std::string name = kEnvPrefix;
  for (const char* p = flag; *p; ++p) {
    name += *p == '-' ? '_' : static_cast<char>(std::toupper(*p));
  }
  return name;
}

// Writes to `path`, or to `fallback` when the path is empty.
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot write '" + path + "'");
  fn(file);
  if (!file) throw Error("failed writing '" + path + "'");
}

struct Options {
  std::string config = "ipa/let/lev/0.4";
  std::string ga_config = "ipa/win/lev/0.4";
  std::uint64_t seed = 0;
  std::string context;
  std::string corpus;
  std::string out;

  std::string text;
  std::vector<double> thresholds;
  std::string aggregates;

  GaParams ga;
  std::size_t rounds = 1;
  std::string stats;

  std::string vocabulary;
  std::size_t sentences = 300;
  double error_rate = 0.15;
  std::string manifest;
};

void add_config(CLI::App* cmd, std::string& config) {
  cmd->add_option("--config", config,
                  "representation/generator/metric/threshold")
      ->envname(env_name("config"))
      ->capture_default_str();
}
void add_seed(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "random seed")
      ->envname(env_name("seed"))
      ->capture_default_str();
}
CLI::Option* add_context(CLI::App* cmd, Options& o) {
  return cmd->add_option("--context", o.context, "context file")
      ->envname(env_name("context"));
}
CLI::Option* add_corpus(CLI::App* cmd, Options& o) {
  return cmd->add_option("--corpus", o.corpus, "corpus file (JSON lines)")
      ->envname(env_name("corpus"));
}
void add_out(CLI::App* cmd, Options& o, const char* what) {
  cmd->add_option("--out", o.out, what)->envname(env_name("out"));
}

void write_trace(std::ostream& out, const CorrectionResult& r,
                 const Context& context) {
  out << r.corrected.joined() << '\n';
  for (const CandidatePair& c : r.applied) {
    out << "sub\t" << c.span.first << '\t' << c.span.last << '\t'
        << r.original.slice(c.span.first, c.span.last).joined() << '\t'
        << context[c.context_index].joined() << '\t'
        << format_double(c.distance) << '\n';
  }
}

int run_correct(const Options& o, std::ostream& out) {
  const CorrectionConfig config = parse_config(o.config);
  const Context context = load_context(o.context);
  const PreparedContext prepared(context, config.representation);
  if (o.text.empty() && o.corpus.empty()) {
    throw Error("correct needs --text or --corpus");
  }
  if (!o.text.empty()) {
    const auto r = correct(normalize(o.text), prepared, config);
    emit(o.out, out, [&](std::ostream& s) { write_trace(s, r, context); });
    return 0;
  }
  const auto records = load_corpus(o.corpus);
  emit(o.out, out, [&](std::ostream& s) {
    for (const CorpusRecord& rec : records) {
      const auto r = correct(rec.hypothesis, prepared, config);
      nlohmann::ordered_json obj;
      obj["id"] = rec.id;
      obj["reference"] = rec.reference.joined();
      obj["hypothesis"] = r.corrected.joined();
      obj["original"] = rec.hypothesis.joined();
      auto subs = nlohmann::ordered_json::array();
      for (const CandidatePair& c : r.applied) {
        nlohmann::ordered_json sub;
        sub["first"] = c.span.first;
        sub["last"] = c.span.last;
        sub["segment"] = r.original.slice(c.span.first, c.span.last).joined();
        sub["phrase"] = context[c.context_index].joined();
        sub["distance"] = c.distance;
        subs.push_back(std::move(sub));
      }
      obj["substitutions"] = std::move(subs);
      s << obj.dump() << '\n';
    }
  });
  return 0;
}

int run_evaluate(const Options& o, std::ostream& out) {
  const CorrectionConfig config = parse_config(o.config);
  const auto records = load_corpus(o.corpus);
  const auto pairs = to_pairs(records);
  const double before = corpus_wer(pairs);
  double after = before;
  if (!o.context.empty()) {
    const PreparedContext prepared(load_context(o.context),
                                   config.representation);
    std::vector<TranscriptPair> corrected;
    for (const TranscriptPair& p : pairs) {
      corrected.push_back(
          {p.reference, correct(p.hypothesis, prepared, config).corrected});
    }
    after = corpus_wer(corrected);
  }
  emit(o.out, out, [&](std::ostream& s) {
    s << "records\t" << records.size() << '\n'
      << "config\t" << to_string(config) << '\n'
      << "wer_before\t" << format_double(before) << '\n'
      << "wer_after\t" << format_double(after) << '\n'
      << "relative_reduction\t"
      << format_double(relative_reduction(before, after)) << '\n';
  });
  return 0;
}

int run_sweep(const Options& o, std::ostream& out) {
  const auto records = load_corpus(o.corpus);
  const Context context = load_context(o.context);
  const auto thresholds =
      o.thresholds.empty() ? default_thresholds() : o.thresholds;
  const auto report = sweep(records, context, thresholds,
                            std::filesystem::path(o.corpus).filename().string());
  emit(o.out, out, [&](std::ostream& s) { write_sweep_table(s, report); });
  if (!o.aggregates.empty()) {
    emit(o.aggregates, out,
         [&](std::ostream& s) { write_sweep_aggregates(s, report); });
  }
  return 0;
}

GenerationStats final_row(std::size_t generation,
                          const std::vector<Chromosome>& population) {
  GenerationStats s;
  s.generation = generation;
  std::size_t best = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < population.size(); ++i) {
    sum += *population[i].fitness;
    if (*population[i].fitness < *population[best].fitness) best = i;
  }
  s.mean_fitness = sum / static_cast<double>(population.size());
  s.best_fitness = *population[best].fitness;
  s.best_chromosome = population[best];
  return s;
}

int run_optimize(const Options& o, std::ostream& out) {
  const CorrectionConfig config = parse_config(o.ga_config);
  GaParams params = o.ga;
  params.seed = o.seed;
  params.validate();
  if (o.rounds == 0) throw Error("rounds must be at least 1");

  const auto records = load_corpus(o.corpus);
  std::vector<NormText> refs;
  for (const CorpusRecord& r : records) refs.push_back(r.reference);
  FitnessEvaluator evaluator(GeneVocabulary::build(refs), to_pairs(records),
                             config);

  Rng rng(params.seed);
  std::vector<GenerationStats> rows;
  std::optional<std::vector<Chromosome>> initial;
  std::size_t offset = 0;
  std::optional<GenerationStats> best;
  for (std::size_t round = 0; round < o.rounds; ++round) {
    auto result = evolve(params, evaluator, rng, std::move(initial));
    for (GenerationStats& s : result.stats) {
      s.generation += offset;
      rows.push_back(std::move(s));
    }
    offset += params.generations;
    if (round + 1 == o.rounds) rows.push_back(final_row(offset, result.population));
    for (const Chromosome& c : result.population) {
      if (!best || *c.fitness < best->best_fitness) {
        best = final_row(offset, {c});
      }
    }
    initial = reseed(result.population, params.population_size, rng);
  }
  for (const GenerationStats& s : rows) {
    if (s.best_fitness < best->best_fitness) best = s;
  }

  emit(o.stats, out, [&](std::ostream& s) { write_generation_stats(s, rows); });
  const Context context = decode(best->best_chromosome, evaluator.vocabulary());
  if (!o.out.empty()) save_context(o.out, context);
  if (!o.stats.empty()) {
    out << "genes\t" << evaluator.chromosome_size() << '\n'
        << "baseline_wer\t" << format_double(evaluator.baseline()) << '\n'
        << "best_wer\t" << format_double(best->best_fitness) << '\n'
        << "context_size\t" << context.size() << '\n';
  }
  return 0;
}

int run_synth(const Options& o, std::ostream& out) {
  std::vector<std::string> vocabulary;
  if (o.vocabulary.empty()) {
    const auto v = default_vocabulary();
    vocabulary.assign(v.begin(), v.end());
  } else {
    for (const NormText& p : load_context(o.vocabulary).phrases()) {
      vocabulary.push_back(p.joined());
    }
  }
  const auto corpus =
      synthesize_corpus(vocabulary, o.sentences, o.error_rate, o.seed);
  if (corpus.records.empty()) throw Error("sentence count must be positive");
  emit(o.out, out, [&](std::ostream& s) { write_corpus(s, corpus.records); });
  if (!o.manifest.empty()) {
    emit(o.manifest, out,
         [&](std::ostream& s) { write_manifest(s, corpus.manifest); });
  }
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Phonetic post-correction of speech transcripts", "phonocorrect"};
  app.require_subcommand(1);
  Options o;

  auto* correct_cmd =
      app.add_subcommand("correct", "correct a sentence or a corpus");
  add_config(correct_cmd, o.config);
  add_context(correct_cmd, o)->required();
  auto* text_opt = correct_cmd->add_option("--text", o.text, "sentence to correct");
  auto* corpus_opt = add_corpus(correct_cmd, o);
  text_opt->excludes(corpus_opt);
  add_out(correct_cmd, o, "output file");

  auto* evaluate_cmd =
      app.add_subcommand("evaluate", "corpus WER before and after correction");
  add_config(evaluate_cmd, o.config);
  add_context(evaluate_cmd, o);
  add_corpus(evaluate_cmd, o)->required();
  add_out(evaluate_cmd, o, "output file");

  auto* sweep_cmd = app.add_subcommand("sweep", "run the configuration grid");
  add_context(sweep_cmd, o)->required();
  add_corpus(sweep_cmd, o)->required();
  sweep_cmd->add_option("--thresholds", o.thresholds, "thresholds to try");
  sweep_cmd->add_option("--aggregates", o.aggregates, "per-axis means file");
  add_out(sweep_cmd, o, "report file");

  auto* optimize_cmd =
      app.add_subcommand("optimize", "evolve a context with a genetic algorithm");
  add_config(optimize_cmd, o.ga_config);
  add_seed(optimize_cmd, o);
  add_corpus(optimize_cmd, o)->required();
  add_out(optimize_cmd, o, "best context file");
  optimize_cmd->add_option("--population", o.ga.population_size)->capture_default_str();
  optimize_cmd->add_option("--generations", o.ga.generations)->capture_default_str();
  optimize_cmd->add_option("--tournament", o.ga.tournament_size)->capture_default_str();
  optimize_cmd->add_option("--crossover", o.ga.crossover_prob)->capture_default_str();
  optimize_cmd->add_option("--mutation", o.ga.mutation_prob)->capture_default_str();
  optimize_cmd->add_option("--rounds", o.rounds, "runs, each reseeded from the last")
      ->capture_default_str();
  optimize_cmd->add_option("--stats", o.stats, "per-generation stats file");

  auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic corpus");
  add_seed(synth_cmd, o);
  synth_cmd->add_option("--vocabulary", o.vocabulary, "phrase file");
  synth_cmd->add_option("--sentences", o.sentences)->capture_default_str();
  synth_cmd->add_option("--error-rate", o.error_rate)->capture_default_str();
  synth_cmd->add_option("--manifest", o.manifest, "planted error list");
  add_out(synth_cmd, o, "corpus file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (correct_cmd->parsed()) return run_correct(o, out);
    if (evaluate_cmd->parsed()) return run_evaluate(o, out);
    if (sweep_cmd->parsed()) return run_sweep(o, out);
    if (optimize_cmd->parsed()) return run_optimize(o, out);
    if (synth_cmd->parsed()) return run_synth(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace phonocorrect
