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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "phonocorrect/harness.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = phonocorrect::run_cli(std::move(args), out, err);
  return {status, out.str(), err.str()};
}

std::string path(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "phonocorrect_cli_tests";
  fs::create_directories(dir);
  return (dir / name).string();
}

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& p, const std::string& content) {
  std::ofstream(p, std::ios::binary) << content;
}

bool contains(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

}  // namespace

TEST_CASE("cli usage errors") {
  CHECK(cli({}).status != 0);
  const Run unknown = cli({"evaluate", "--corpus", "x", "--bogus"});
  CHECK(unknown.status != 0);
  CHECK(contains(unknown.err, "--bogus"));
  const Run missing = cli({"evaluate"});
  CHECK(missing.status != 0);
  CHECK(contains(missing.err, "--corpus"));
  CHECK(cli({"--help"}).status == 0);
}

TEST_CASE("cli synth, evaluate and correct") {
  const std::string corpus = path("synth.jsonl");
  const std::string manifest = path("manifest.tsv");
  Run r = cli({"synth", "--sentences", "40", "--error-rate", "0.2", "--seed", "3",
               "--out", corpus, "--manifest", manifest});
  REQUIRE(r.status == 0);
  CHECK(phonocorrect::load_corpus(corpus).size() == 40);
  CHECK(contains(slurp(manifest), "record\tword\tkind\toriginal\treplacement"));

  Run again = cli({"synth", "--sentences", "40", "--error-rate", "0.2", "--seed", "3"});
  CHECK(again.out == slurp(corpus));

  const std::string context = path("menu.txt");
  std::ostringstream phrases;
  for (const auto& p : phonocorrect::default_vocabulary()) phrases << p << '\n';
  write_file(context, phrases.str());

  r = cli({"evaluate", "--corpus", corpus, "--context", context});
  REQUIRE(r.status == 0);
  CHECK(contains(r.out, "records\t40\n"));
  CHECK(contains(r.out, "config\tipa/let/lev/0.4\n"));

  const std::string identity = path("identity.jsonl");
  write_file(identity,
             "{\"id\":\"1\",\"reference\":\"hola\",\"hypothesis\":\"hola\"}\n");
  r = cli({"evaluate", "--corpus", identity, "--context", context});
  CHECK(r.status == 0);
  CHECK(contains(r.out, "wer_before\t0\n"));
  CHECK(contains(r.out, "wer_after\t0\n"));

  r = cli({"correct", "--context", context, "--config", "plain/let/lev/0.45",
           "--text", "Quiero una piza"});
  REQUIRE(r.status == 0);
  CHECK(r.out.substr(0, r.out.find('\n')) == "quiero una pizza");
  CHECK(contains(r.out, "sub\t0\t2\tquiero una piza\tquiero una pizza\t"));

  const std::string corrected = path("corrected.jsonl");
  r = cli({"correct", "--context", context, "--corpus", corpus, "--out", corrected});
  REQUIRE(r.status == 0);
  CHECK(phonocorrect::load_corpus(corrected).size() == 40);

  CHECK(cli({"correct", "--context", context}).status != 0);
}

TEST_CASE("cli reports bad inputs") {
  const std::string identity = path("identity2.jsonl");
  write_file(identity,
             "{\"id\":\"1\",\"reference\":\"hola\",\"hypothesis\":\"hola\"}\n");
  Run r = cli({"evaluate", "--corpus", path("nope.jsonl")});
  CHECK(r.status == 1);
  CHECK(contains(r.err, "cannot open"));
  r = cli({"evaluate", "--corpus", identity, "--config", "ipx/let/lev/0.4"});
  CHECK(r.status == 1);
  CHECK(contains(r.err, "unknown representation"));
  r = cli({"evaluate", "--corpus", identity, "--config", "ipa/let/lev/2"});
  CHECK(r.status == 1);
  CHECK(contains(r.err, "threshold"));
  r = cli({"optimize", "--corpus", identity, "--population", "7"});
  CHECK(r.status == 1);
  CHECK(contains(r.err, "population size"));
  r = cli({"optimize", "--corpus", identity, "--mutation", "3"});
  CHECK(r.status == 1);
  CHECK(contains(r.err, "mutation probability"));
  r = cli({"synth", "--error-rate", "-1"});
  CHECK(r.status == 1);
  CHECK(contains(r.err, "error rate"));
}

TEST_CASE("cli optimize") {
  const std::string corpus = path("opt.jsonl");
  REQUIRE(cli({"synth", "--sentences", "20", "--seed", "4", "--out", corpus}).status == 0);

  Run r = cli({"optimize", "--corpus", corpus, "--generations", "0", "--population",
               "6", "--seed", "1"});
  REQUIRE(r.status == 0);
  CHECK(r.out.substr(0, r.out.find('\n')) == "generation\tmean_wer\tbest_wer");
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 2);

  const std::string best = path("best.txt");
  const std::string stats = path("stats.tsv");
  r = cli({"optimize", "--corpus", corpus, "--generations", "4", "--population", "6",
           "--rounds", "2", "--seed", "1", "--out", best, "--stats", stats});
  REQUIRE(r.status == 0);
  CHECK(contains(r.out, "best_wer\t"));
  std::size_t rows = 0;
  for (char c : slurp(stats)) rows += c == '\n';
  CHECK(rows == 1 + 8 + 1);
  const std::string first = slurp(stats);
  REQUIRE(cli({"optimize", "--corpus", corpus, "--generations", "4", "--population",
               "6", "--rounds", "2", "--seed", "1", "--stats", stats})
              .status == 0);
  CHECK(slurp(stats) == first);
}

TEST_CASE("cli sweep is reproducible") {
  const std::string corpus = path("sweep.jsonl");
  const std::string context = path("sweep_ctx.txt");
  REQUIRE(cli({"synth", "--sentences", "10", "--seed", "8", "--out", corpus}).status == 0);
  write_file(context, "quiero una pizza\ncon queso\npara llevar\n");
  const std::string a = path("sweep_a.tsv");
  const std::string b = path("sweep_b.tsv");
  const std::string agg = path("sweep_agg.tsv");
  REQUIRE(cli({"sweep", "--corpus", corpus, "--context", context, "--out", a,
               "--aggregates", agg})
              .status == 0);
  REQUIRE(cli({"sweep", "--corpus", corpus, "--context", context, "--out", b}).status == 0);
  CHECK(slurp(a) == slurp(b));
  std::size_t rows = 0;
  for (char c : slurp(a)) rows += c == '\n';
  CHECK(rows == 433);
  CHECK(contains(slurp(agg), "representation\tipa\t108\t"));

  const Run small = cli({"sweep", "--corpus", corpus, "--context", context,
                         "--thresholds", "0.2", "0.4"});
  REQUIRE(small.status == 0);
  rows = 0;
  for (char c : small.out) rows += c == '\n';
  CHECK(rows == 1 + 72);
}

TEST_CASE("cli reads flags from the environment") {
  const Run flag = cli({"synth", "--sentences", "5", "--seed", "12"});
  ::setenv("PHONOCORRECT_SEED", "12", 1);
  const Run env = cli({"synth", "--sentences", "5"});
  ::unsetenv("PHONOCORRECT_SEED");
  CHECK(flag.out == env.out);
  CHECK_FALSE(cli({"synth", "--sentences", "5"}).out == env.out);
}
