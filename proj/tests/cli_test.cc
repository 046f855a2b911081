// Copyright 2026 The salientpref Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Drives the salient binary as a subprocess.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

int Run(const std::string& args) {
  const std::string cmd =
      std::string("'") + SALIENT_CLI_PATH + "' " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

json ReadJson(const fs::path& p) { return json::parse(Slurp(p)); }

fs::path Scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() /
                       ("salient_cli_" + std::to_string(::getpid()) + "_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string Q(const fs::path& p) { return "'" + p.string() + "'"; }

const char kTop1[] = R"('{"kind":"top_t","t":1}')";

TEST_CASE("simulate writes four files deterministically") {
  const fs::path a = Scratch("sim_a");
  const fs::path b = Scratch("sim_b");
  const std::string flags =
      std::string("--d 10 --n 100 --m 10000 --selection ") + kTop1 + " --seed 7";
  REQUIRE(Run("simulate " + flags + " --out-dir " + Q(a)) == 0);
  REQUIRE(Run("simulate " + flags + " --out-dir " + Q(b)) == 0);
  for (const char* f : {"features.csv", "comparisons.csv", "truth.json", "manifest.json"}) {
    CHECK(fs::exists(a / f));
  }
  for (const char* f : {"features.csv", "comparisons.csv", "truth.json"}) {
    CHECK(Slurp(a / f) == Slurp(b / f));
  }
  const json truth = ReadJson(a / "truth.json");
  CHECK(truth.at("w_star").size() == 10);
  CHECK(truth.at("m") == 10000);
  const json manifest = ReadJson(a / "manifest.json");
  CHECK(manifest.at("subcommand") == "simulate");
  CHECK(manifest.at("seed") == 7);
  CHECK(manifest.contains("version"));
  CHECK(manifest.at("flags").at("d") == "10");

  const fs::path c = Scratch("sim_c");
  REQUIRE(Run("simulate --d 10 --n 100 --m 10000 --selection " + std::string(kTop1) +
              " --seed 8 --out-dir " + Q(c)) == 0);
  CHECK(Slurp(a / "comparisons.csv") != Slurp(c / "comparisons.csv"));
  fs::remove_all(a);
  fs::remove_all(b);
  fs::remove_all(c);
}

TEST_CASE("usage errors exit with 2") {
  const fs::path dir = Scratch("usage");
  CHECK(Run("simulate --d 0 --n 10 --m 10 --out-dir " + Q(dir)) == 2);
  CHECK(Run("simulate --d 2 --n 1 --m 10 --out-dir " + Q(dir)) == 2);
  CHECK(Run("simulate --d 2 --n 5 --out-dir " + Q(dir)) == 2);
  CHECK(Run("simulate --d 2 --n 5 --m 10 --selection '{' --out-dir " + Q(dir)) == 2);
  CHECK(Run("nonsense") == 2);
  CHECK(Run("") == 2);
  CHECK(Run("--help") == 0);
  fs::remove_all(dir);
}

TEST_CASE("runtime failures exit with 1") {
  const fs::path dir = Scratch("runtime");
  CHECK(Run("fit --features " + Q(dir / "missing.csv") + " --comparisons " +
            Q(dir / "missing.csv") + " --out " + Q(dir / "fit.json")) == 1);
  std::ofstream(dir / "bad.csv") << "item,f1\nA,1\n";
  CHECK(Run("theory --features " + Q(dir / "bad.csv") + " --out " + Q(dir / "t.json")) == 1);
  // A selection invalid for the data's dimension is a runtime failure.
  std::ofstream(dir / "f.csv") << "item_id,f1\nA,1\nB,2\n";
  CHECK(Run("theory --features " + Q(dir / "f.csv") +
            R"( --selection '{"kind":"top_t","t":3}' --out )" + Q(dir / "t.json")) == 1);
  fs::remove_all(dir);
}

TEST_CASE("pipeline subcommands") {
  const fs::path dir = Scratch("pipe");
  REQUIRE(Run("simulate --d 3 --n 12 --m 4000 --selection " + std::string(kTop1) +
              " --seed 3 --out-dir " + Q(dir)) == 0);
  const std::string feats = " --features " + Q(dir / "features.csv");
  const std::string sel = std::string(" --selection ") + kTop1;

  REQUIRE(Run("fit" + feats + " --comparisons " + Q(dir / "comparisons.csv") + sel +
              " --mu 0.001 --out " + Q(dir / "fit.json")) == 0);
  const json fit = ReadJson(dir / "fit.json");
  CHECK(fit.at("converged") == true);
  CHECK(fit.at("w_hat").size() == 3);
  CHECK(fit.at("num_samples") == 4000);
  CHECK(fs::exists(dir / "fit.json.manifest.json"));
  const json fit_manifest = ReadJson(dir / "fit.json.manifest.json");
  CHECK(fit_manifest.at("input_sha256").size() == 2);

  REQUIRE(Run("rank" + feats + " --weights " + Q(dir / "fit.json") + " --out " +
              Q(dir / "rank.csv")) == 0);
  std::istringstream rank(Slurp(dir / "rank.csv"));
  std::string line;
  std::getline(rank, line);
  CHECK(line == "ranker_id,rank,item_id");
  int rows = 0;
  while (std::getline(rank, line)) ++rows;
  CHECK(rows == 12);

  REQUIRE(Run("evaluate" + feats + " --weights " + Q(dir / "truth.json") +
              " --rankings " + Q(dir / "rank.csv") + " --comparisons " +
              Q(dir / "comparisons.csv") + sel + " --out " + Q(dir / "eval.json")) == 0);
  const json eval = ReadJson(dir / "eval.json");
  const double tau = eval.at("rankings").at("mean_kendall_tau");
  CHECK(tau > 0.5);
  CHECK(tau <= 1.0);
  const double acc = eval.at("comparisons").at("pairwise_accuracy");
  CHECK(acc > 0.5);
  CHECK(Run("evaluate" + feats + " --weights " + Q(dir / "truth.json") + " --out " +
            Q(dir / "e2.json")) == 2);

  REQUIRE(Run("diagnose" + feats + " --weights " + Q(dir / "truth.json") + sel +
              " --comparisons " + Q(dir / "comparisons.csv") + " --out " +
              Q(dir / "diag.json")) == 0);
  const json diag = ReadJson(dir / "diag.json");
  CHECK(diag.contains("transitivity"));
  CHECK(diag.contains("inconsistency"));

  REQUIRE(Run("theory" + feats + sel + " --weights " + Q(dir / "truth.json") +
              " --k 2 --out " + Q(dir / "theory.json")) == 0);
  const json theory = ReadJson(dir / "theory.json");
  CHECK(theory.contains("theorem1"));
  CHECK(theory.contains("corollary2"));
  CHECK(theory.contains("corollary3"));
  CHECK_FALSE(theory.contains("corollary1"));
  CHECK(Run("theory" + feats + " --delta 1.5 --out " + Q(dir / "t.json")) == 2);

  REQUIRE(Run("theory" + feats + " --out " + Q(dir / "full.json")) == 0);
  const json full = ReadJson(dir / "full.json");
  CHECK(full.contains("corollary1"));
  CHECK_FALSE(full.contains("corollary2"));
  fs::remove_all(dir);
}

TEST_CASE("sweep output does not depend on the worker count") {
  const fs::path dir = Scratch("sweep");
  std::ofstream(dir / "spec.json") << R"({
    "d": 3, "n": 10, "m": [200, 800], "seeds": [1, 2],
    "selections": [{"kind": "full"}, {"kind": "top_t", "t": 1}], "mu": 0.01
  })";
  REQUIRE(Run("sweep --spec " + Q(dir / "spec.json") + " --jobs 1 --out-dir " + Q(dir / "a")) == 0);
  REQUIRE(Run("sweep --spec " + Q(dir / "spec.json") + " --jobs 4 --out-dir " + Q(dir / "b")) == 0);
  const std::string a = Slurp(dir / "a" / "sweep.csv");
  CHECK(a == Slurp(dir / "b" / "sweep.csv"));
  CHECK(fs::exists(dir / "a" / "manifest.json"));
  std::istringstream rows(a);
  std::string line;
  std::getline(rows, line);
  CHECK(line == "selection,m,seed,metric,value");
  int count = 0;
  while (std::getline(rows, line)) ++count;
  // 2 selections x 2 sizes x 2 seeds x 6 metrics.
  CHECK(count == 48);

  std::ofstream(dir / "bad.json") << R"({"d": 3, "n": 10})";
  CHECK(Run("sweep --spec " + Q(dir / "bad.json") + " --out-dir " + Q(dir / "c")) == 2);
  fs::remove_all(dir);
}

}  // namespace
