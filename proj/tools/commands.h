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


#ifndef SALIENT_TOOLS_COMMANDS_H_
#define SALIENT_TOOLS_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "salient/serialize.h"

namespace salient::cli {

// Bad flag values discovered after parsing; mapped to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// What the manifest records about an invocation.
struct Invocation {
  std::string subcommand;
  Json flags = Json::object();
  std::uint64_t seed = 0;
  std::vector<std::string> inputs;
};

struct SimulateOptions {
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string selection = R"({"kind":"full"})";
  std::uint64_t seed = 0;
  std::string out_dir;
};

struct FitOptions {
  std::string features;
  std::string comparisons;
  std::string selection = R"({"kind":"full"})";
  double mu = 0.0;
  double tol = 1e-8;
  int max_iters = 5000;
  long min_count = 1;
  std::string out;
};

struct RankOptions {
  std::string features;
  std::string weights;
  std::string out;
};

struct EvaluateOptions {
  std::string features;
  std::string weights;
  std::optional<std::string> rankings;
  std::optional<std::string> comparisons;
  std::string selection = R"({"kind":"full"})";
  long min_count = 1;
  std::string out;
};

struct DiagnoseOptions {
  std::string features;
  std::optional<std::string> comparisons;
  std::optional<std::string> weights;
  std::string selection = R"({"kind":"full"})";
  long min_count = 1;
  std::string out;
};

struct TheoryOptions {
  std::string features;
  std::string selection = R"({"kind":"full"})";
  std::optional<std::string> weights;
  double delta = 0.05;
  std::size_t k = 1;
  double c5 = 1.0;
  std::string out;
};

struct SweepOptions {
  std::string spec;
  std::string out_dir;
  std::size_t jobs = 1;
};

void RunSimulate(const SimulateOptions& o, Invocation inv);
void RunFit(const FitOptions& o, Invocation inv);
void RunRank(const RankOptions& o, Invocation inv);
void RunEvaluate(const EvaluateOptions& o, Invocation inv);
void RunDiagnose(const DiagnoseOptions& o, Invocation inv);
void RunTheory(const TheoryOptions& o, Invocation inv);
void RunSweep(const SweepOptions& o, Invocation inv);

// Hex SHA-256 of a file's bytes.
std::string FileDigest(const std::string& path);

// Writes the manifest for `inv` to `path`.
void WriteManifest(const std::string& path, const Invocation& inv);

}  // namespace salient::cli

#endif  // SALIENT_TOOLS_COMMANDS_H_
