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

#include "phonocorrect/harness.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "phonocorrect/error.hpp"
#include "phonocorrect/utf8.hpp"

namespace phonocorrect {

namespace {

std::string where(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line) + ": ";
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  return out;
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::string string_field(const nlohmann::json& obj, const char* name,
                         std::string_view source, std::size_t line) {
  const auto it = obj.find(name);
  if (it == obj.end()) {
    throw Error(where(source, line) + "missing field '" + name + "'");
  }
  if (!it->is_string()) {
    throw Error(where(source, line) + "field '" + name + "' is not a string");
  }
  return it->get<std::string>();
}

}  // namespace

std::vector<CorpusRecord> read_corpus(std::istream& in, std::string_view source) {
  std::vector<CorpusRecord> records;
  std::set<std::string> ids;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (blank(line)) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(where(source, number) + "malformed record: " + e.what());
    }
    if (!obj.is_object()) {
      throw Error(where(source, number) + "record is not an object");
    }
    CorpusRecord r;
    r.id = string_field(obj, "id", source, number);
    r.reference = normalize(string_field(obj, "reference", source, number));
    r.hypothesis = normalize(string_field(obj, "hypothesis", source, number));
    if (r.reference.empty()) {
      throw Error(where(source, number) + "empty reference");
    }
    if (!ids.insert(r.id).second) {
      throw Error(where(source, number) + "duplicate id '" + r.id + "'");
    }
    records.push_back(std::move(r));
  }
  if (records.empty()) throw Error(std::string(source) + ": empty corpus");
  return records;
}

std::vector<CorpusRecord> load_corpus(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_corpus(in, path.string());
}

void write_corpus(std::ostream& out, std::span<const CorpusRecord> records) {
  for (const CorpusRecord& r : records) {
    nlohmann::ordered_json obj;
    obj["id"] = r.id;
    obj["reference"] = r.reference.joined();
    obj["hypothesis"] = r.hypothesis.joined();
    out << obj.dump() << '\n';
  }
}

void save_corpus(const std::filesystem::path& path,
                 std::span<const CorpusRecord> records) {
  auto out = open_output(path);
  write_corpus(out, records);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

std::vector<TranscriptPair> to_pairs(std::span<const CorpusRecord> records) {
  std::vector<TranscriptPair> pairs;
  pairs.reserve(records.size());
  for (const CorpusRecord& r : records) pairs.push_back({r.reference, r.hypothesis});
  return pairs;
}

Context read_context(std::istream& in, std::string_view source) {
  std::vector<NormText> phrases;
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    NormText p = normalize(line);
    if (!p.empty()) phrases.push_back(std::move(p));
  }
  if (phrases.empty()) {
    throw Error(std::string(source) + ": context has no usable lines");
  }
  return Context(std::move(phrases));
}

Context load_context(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_context(in, path.string());
}

void write_context(std::ostream& out, const Context& context) {
  for (const NormText& p : context.phrases()) out << p.joined() << '\n';
}

void save_context(const std::filesystem::path& path, const Context& context) {
  auto out = open_output(path);
  write_context(out, context);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

double relative_reduction(double before, double after) {
  if (before == 0.0) return 0.0;
  return (before - after) / before;
}

std::vector<double> default_thresholds() {
  std::vector<double> t;
  for (int k = 1; k <= 12; ++k) t.push_back(k / 20.0);
  return t;
}

SweepReport sweep(std::span<const CorpusRecord> corpus, const Context& context,
                  std::span<const double> thresholds, std::string source) {
  if (corpus.empty()) throw Error("sweep needs a non-empty corpus");
  std::vector<Threshold> grid;
  for (double u : thresholds) grid.emplace_back(u);
  const auto pairs = to_pairs(corpus);
  const double before = corpus_wer(pairs);

  SweepReport report;
  report.source = std::move(source);
  std::map<std::string, std::pair<std::size_t, double>> by_rep;
  std::map<std::string, std::pair<std::size_t, double>> by_gen;
  for (Representation rep : kAllRepresentations) {
    const PreparedContext prepared(context, rep);
    for (GeneratorKind gen : kAllGenerators) {
      for (Metric metric : kAllMetrics) {
        for (Threshold u : grid) {
          const CorrectionConfig config{rep, gen, metric, u};
          std::vector<TranscriptPair> corrected;
          corrected.reserve(pairs.size());
          for (const TranscriptPair& p : pairs) {
            corrected.push_back(
                {p.reference, correct(p.hypothesis, prepared, config).corrected});
          }
          const double after = corpus_wer(corrected);
          report.rows.push_back(
              {config, before, after, relative_reduction(before, after)});
          auto& r = by_rep[std::string(to_string(rep))];
          ++r.first;
          r.second += after;
          auto& g = by_gen[std::string(to_string(gen))];
          ++g.first;
          g.second += after;
        }
      }
    }
  }
  for (Representation rep : kAllRepresentations) {
    const auto& [n, sum] = by_rep[std::string(to_string(rep))];
    report.by_representation.push_back(
        {std::string(to_string(rep)), n, n ? sum / static_cast<double>(n) : 0.0});
  }
  for (GeneratorKind gen : kAllGenerators) {
    const auto& [n, sum] = by_gen[std::string(to_string(gen))];
    report.by_generator.push_back(
        {std::string(to_string(gen)), n, n ? sum / static_cast<double>(n) : 0.0});
  }
  return report;
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

void write_sweep_table(std::ostream& out, const SweepReport& report) {
  out << "source\trepresentation\tgenerator\tmetric\tthreshold\twer_before"
         "\twer_after\trelative_reduction\n";
  for (const SweepRow& row : report.rows) {
    out << report.source << '\t' << to_string(row.config.representation) << '\t'
        << to_string(row.config.generator) << '\t'
        << to_string(row.config.metric) << '\t'
        << format_double(row.config.threshold.value()) << '\t'
        << format_double(row.wer_before) << '\t'
        << format_double(row.wer_after) << '\t'
        << format_double(row.relative_reduction) << '\n';
  }
}

void write_sweep_aggregates(std::ostream& out, const SweepReport& report) {
  out << "source\taxis\tvalue\tcells\tmean_wer_after\n";
  for (const AxisMean& a : report.by_representation) {
    out << report.source << "\trepresentation\t" << a.key << '\t' << a.cells
        << '\t' << format_double(a.mean_wer_after) << '\n';
  }
  for (const AxisMean& a : report.by_generator) {
    out << report.source << "\tgenerator\t" << a.key << '\t' << a.cells << '\t'
        << format_double(a.mean_wer_after) << '\n';
  }
}

void write_generation_stats(std::ostream& out,
                            std::span<const GenerationStats> stats) {
  out << "generation\tmean_wer\tbest_wer\n";
  for (const GenerationStats& s : stats) {
    out << s.generation << '\t' << format_double(s.mean_fitness) << '\t'
        << format_double(s.best_fitness) << '\n';
  }
}

std::string_view to_string(CorruptionKind kind) {
  switch (kind) {
    case CorruptionKind::kSubstitution: return "substitution";
    case CorruptionKind::kDeletion: return "deletion";
    case CorruptionKind::kDuplication: return "duplication";
  }
  return "?";
}

namespace {

struct Rewrite {
  std::string_view from;
  std::string_view to;
  // Only when followed by e or i.
  bool front_vowel = false;
  // Only at the start of the word.
  bool initial = false;
};

// Sound-alike spelling swaps, then vowel swaps.
constexpr std::array<Rewrite, 20> kRewrites{{
    {"s", "z"},
    {"z", "s"},
    {"b", "v"},
    {"v", "b"},
    {"ll", "y"},
    {"y", "ll"},
    {"c", "s", true},
    {"s", "c", true},
    {"h", "", false, true},
    {"qu", "k", true},
    {"j", "g", true},
    {"g", "j", true},
    {"e", "i"},
    {"i", "e"},
    {"o", "u"},
    {"u", "o"},
    {"a", "e"},
    {"é", "e"},
    {"á", "a"},
    {"ó", "o"},
}};

std::vector<std::string> rewrites_of(const std::string& word) {
  std::vector<std::string> out;
  for (const Rewrite& r : kRewrites) {
    for (std::size_t pos = word.find(r.from); pos != std::string::npos;
         pos = word.find(r.from, pos + 1)) {
      if (r.initial && pos != 0) continue;
      const std::size_t after = pos + r.from.size();
      if (r.front_vowel &&
          (after >= word.size() || (word[after] != 'e' && word[after] != 'i'))) {
        continue;
      }
      // "ll" is already covered as a pair.
      if (r.from == "y" && r.to == "ll" && pos > 0 && word[pos - 1] == 'l') continue;
      std::string w = word.substr(0, pos);
      w += r.to;
      w += word.substr(after);
      if (w.empty() || w == word) continue;
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace

SyntheticCorpus synthesize_corpus(std::span<const std::string> vocabulary,
                                  std::size_t sentence_count,
                                  double error_rate, std::uint64_t seed) {
  if (vocabulary.empty()) throw Error("synthesis needs a vocabulary");
  if (!(error_rate >= 0.0 && error_rate <= 1.0)) {
    throw Error("error rate must be in [0, 1]");
  }
  std::vector<NormText> phrases;
  for (const std::string& v : vocabulary) {
    NormText p = normalize(v);
    if (p.empty()) throw Error("vocabulary phrase '" + v + "' is empty");
    phrases.push_back(std::move(p));
  }

  Rng rng(seed);
  SyntheticCorpus out;
  const std::size_t width = std::to_string(sentence_count).size();
  for (std::size_t s = 0; s < sentence_count; ++s) {
    std::vector<std::string> ref;
    const std::size_t parts = 1 + rng.below(3);
    for (std::size_t k = 0; k < parts; ++k) {
      const auto& t = phrases[rng.below(phrases.size())].tokens();
      ref.insert(ref.end(), t.begin(), t.end());
    }

    std::vector<std::string> hyp;
    for (std::size_t w = 0; w < ref.size(); ++w) {
      const std::string& word = ref[w];
      if (!(rng.uniform01() < error_rate)) {
        hyp.push_back(word);
        continue;
      }
      const double kind = rng.uniform01();
      const bool short_word = utf8::length(word) <= 3;
      auto subs = rewrites_of(word);
      PlantedError planted{s, w, CorruptionKind::kSubstitution, word, ""};
      if (short_word && kind < 0.15 && ref.size() > 1) {
        planted.kind = CorruptionKind::kDeletion;
      } else if ((short_word && kind < 0.30) || subs.empty()) {
        planted.kind = CorruptionKind::kDuplication;
        planted.replacement = word;
        hyp.push_back(word);
        hyp.push_back(word);
      } else {
        planted.replacement = subs[rng.below(subs.size())];
        hyp.push_back(planted.replacement);
      }
      out.manifest.push_back(std::move(planted));
    }

    std::string id = std::to_string(s + 1);
    id.insert(0, width - id.size(), '0');
    out.records.push_back({"syn-" + id, NormText::from_tokens(std::move(ref)),
                           NormText::from_tokens(std::move(hyp))});
  }
  return out;
}

std::span<const std::string> default_vocabulary() {
  static const std::vector<std::string> kVocabulary = {
      "quiero una pizza",     "pizza grande",         "pizza mediana",
      "con queso",            "sin cebolla",          "una hamburguesa",
      "papas fritas",         "refresco de cola",     "agua mineral",
      "para llevar",          "la cuenta por favor",  "cerveza fría",
      "ensalada verde",       "pollo asado",          "arroz con frijoles",
      "tacos de carne",       "salsa picante",        "café con leche",
      "jugo de naranja",      "helado de vainilla",   "pastel de chocolate",
      "sopa de verduras",     "pan tostado",          "huevos revueltos",
      "tortilla de papas",    "pescado frito",        "una botella de vino",
      "vaso de hielo",        "sin azúcar",           "doble porción",
      "pechuga de pollo",     "queso rallado",        "aceitunas negras",
      "salchichas",           "jamón y queso",        "cebolla caramelizada",
      "masa delgada",         "orilla rellena",       "servilletas extra",
      "cubiertos por favor",  "mesa para dos",        "a domicilio",
      "calle principal",      "número de teléfono",   "pago con tarjeta",
      "en efectivo",          "cambio de billete",    "galletas de avena",
      "yogur natural",        "hielo picado",
  };
  return kVocabulary;
}

void write_manifest(std::ostream& out, std::span<const PlantedError> manifest) {
  out << "record\tword\tkind\toriginal\treplacement\n";
  for (const PlantedError& p : manifest) {
    out << p.record << '\t' << p.word << '\t' << to_string(p.kind) << '\t'
        << p.original << '\t' << p.replacement << '\n';
  }
}

}  // namespace phonocorrect
