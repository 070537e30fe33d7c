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
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phonocorrect/candidates.hpp"
#include "phonocorrect/corrector.hpp"
#include "phonocorrect/evolver.hpp"

namespace phonocorrect {

struct CorpusRecord {
  std::string id;
  NormText reference;
  NormText hypothesis;

  friend bool operator==(const CorpusRecord&, const CorpusRecord&) = default;
};

// One JSON object per line with string fields "id", "reference" and
// "hypothesis". Blank lines are skipped; other fields are ignored.
std::vector<CorpusRecord> read_corpus(std::istream& in,
                                      std::string_view source = "<stream>");
std::vector<CorpusRecord> load_corpus(const std::filesystem::path& path);
void write_corpus(std::ostream& out, std::span<const CorpusRecord> records);
void save_corpus(const std::filesystem::path& path,
                 std::span<const CorpusRecord> records);

std::vector<TranscriptPair> to_pairs(std::span<const CorpusRecord> records);

// One phrase per line; blank lines and lines starting with '#' are skipped.
Context read_context(std::istream& in, std::string_view source = "<stream>");
Context load_context(const std::filesystem::path& path);
void write_context(std::ostream& out, const Context& context);
void save_context(const std::filesystem::path& path, const Context& context);

// (before - after) / before, or 0 when before is 0.
double relative_reduction(double before, double after);

struct SweepRow {
  CorrectionConfig config;
  double wer_before = 0.0;
  double wer_after = 0.0;
  double relative_reduction = 0.0;
};

struct AxisMean {
  std::string key;
  std::size_t cells = 0;
  double mean_wer_after = 0.0;
};

struct SweepReport {
  std::string source;
  std::vector<SweepRow> rows;
  std::vector<AxisMean> by_representation;
  std::vector<AxisMean> by_generator;
};

// 0.05, 0.10, ..., 0.60.
std::vector<double> default_thresholds();

// Rows ordered representation, generator, metric, threshold.
SweepReport sweep(std::span<const CorpusRecord> corpus, const Context& context,
                  std::span<const double> thresholds,
                  std::string source = "");

// Shortest decimal that reads back to the same double.
std::string format_double(double value);

void write_sweep_table(std::ostream& out, const SweepReport& report);
void write_sweep_aggregates(std::ostream& out, const SweepReport& report);
void write_generation_stats(std::ostream& out,
                            std::span<const GenerationStats> stats);

enum class CorruptionKind { kSubstitution, kDeletion, kDuplication };

std::string_view to_string(CorruptionKind kind);

struct PlantedError {
  std::size_t record = 0;
  // Position of the affected word in the reference.
  std::size_t word = 0;
  CorruptionKind kind = CorruptionKind::kSubstitution;
  std::string original;
  // Substituted form; the repeated word for duplication; empty for deletion.
  std::string replacement;
};

struct SyntheticCorpus {
  std::vector<CorpusRecord> records;
  std::vector<PlantedError> manifest;
};

// References are 1-3 random vocabulary phrases. Each reference word is
// corrupted with probability error_rate by a sound-alike spelling change, or
// for short words sometimes a deletion or a duplication.
SyntheticCorpus synthesize_corpus(std::span<const std::string> vocabulary,
                                  std::size_t sentence_count,
                                  double error_rate, std::uint64_t seed);

// Fifty food-ordering phrases.
std::span<const std::string> default_vocabulary();

void write_manifest(std::ostream& out, std::span<const PlantedError> manifest);

// Command-line front end. Returns the process exit status.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace phonocorrect
