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


// salient: simulate, fit, rank, evaluate, diagnose, theory and sweep.
// Exit codes: 0 success, 1 runtime failure, 2 usage error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.h"
#include "salient/errors.h"

namespace {

using salient::Json;
using salient::cli::Invocation;

// Every option given on the command line, keyed by long name.
Json CollectFlags(const CLI::App& sub) {
  Json flags = Json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->get_lnames().empty() || opt->count() == 0) continue;
    const auto& res = opt->results();
    flags[opt->get_lnames().front()] = res.size() == 1 ? Json(res.front()) : Json(res);
  }
  return flags;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace salient::cli;

  CLI::App app{"Salient feature preference model toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SALIENT_VERSION);

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "sample a synthetic instance");
  simulate->add_option("--d", sim.d, "feature dimension")
      ->required()->check(CLI::PositiveNumber);
  simulate->add_option("--n", sim.n, "number of items")
      ->required()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  simulate->add_option("--m", sim.m, "number of comparisons")->required();
  simulate->add_option("--selection", sim.selection, "selection spec JSON")
      ->capture_default_str();
  simulate->add_option("--seed", sim.seed, "root seed")->capture_default_str();
  simulate->add_option("--out-dir", sim.out_dir, "output directory")->required();

  FitOptions fit;
  auto* fit_cmd = app.add_subcommand("fit", "estimate the judgment vector");
  fit_cmd->add_option("--features", fit.features)->required();
  fit_cmd->add_option("--comparisons", fit.comparisons)->required();
  fit_cmd->add_option("--selection", fit.selection)->capture_default_str();
  fit_cmd->add_option("--mu", fit.mu, "ridge weight")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  fit_cmd->add_option("--tol", fit.tol, "gradient-norm tolerance")
      ->check(CLI::PositiveNumber)->capture_default_str();
  fit_cmd->add_option("--max-iters", fit.max_iters)
      ->check(CLI::PositiveNumber)->capture_default_str();
  fit_cmd->add_option("--min-count", fit.min_count)->capture_default_str();
  fit_cmd->add_option("--out", fit.out)->required();

  RankOptions rank;
  auto* rank_cmd = app.add_subcommand("rank", "rank items by estimated utility");
  rank_cmd->add_option("--features", rank.features)->required();
  rank_cmd->add_option("--weights", rank.weights)->required();
  rank_cmd->add_option("--out", rank.out)->required();

  EvaluateOptions eval;
  auto* eval_cmd = app.add_subcommand("evaluate", "Kendall tau or pairwise accuracy");
  eval_cmd->add_option("--features", eval.features)->required();
  eval_cmd->add_option("--weights", eval.weights)->required();
  eval_cmd->add_option("--rankings", eval.rankings);
  eval_cmd->add_option("--comparisons", eval.comparisons);
  eval_cmd->add_option("--selection", eval.selection)->capture_default_str();
  eval_cmd->add_option("--min-count", eval.min_count)->capture_default_str();
  eval_cmd->add_option("--out", eval.out)->required();

  DiagnoseOptions diag;
  auto* diag_cmd = app.add_subcommand("diagnose", "transitivity diagnostics");
  diag_cmd->add_option("--features", diag.features)->required();
  diag_cmd->add_option("--comparisons", diag.comparisons);
  diag_cmd->add_option("--weights", diag.weights);
  diag_cmd->add_option("--selection", diag.selection)->capture_default_str();
  diag_cmd->add_option("--min-count", diag.min_count)->capture_default_str();
  diag_cmd->add_option("--out", diag.out)->required();

  TheoryOptions theory;
  auto* theory_cmd = app.add_subcommand("theory", "identifiability and sample bounds");
  theory_cmd->add_option("--features", theory.features)->required();
  theory_cmd->add_option("--selection", theory.selection)->capture_default_str();
  theory_cmd->add_option("--weights", theory.weights);
  theory_cmd->add_option("--delta", theory.delta)->capture_default_str();
  theory_cmd->add_option("--k", theory.k, "Kendall slack for the ranking bound")
      ->check(CLI::PositiveNumber)->capture_default_str();
  theory_cmd->add_option("--c5", theory.c5, "constant of the ranking bound")
      ->check(CLI::PositiveNumber)->capture_default_str();
  theory_cmd->add_option("--out", theory.out)->required();

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "grid of simulate-and-fit cells");
  sweep_cmd->add_option("--spec", sweep.spec, "sweep spec JSON file")->required();
  sweep_cmd->add_option("--out-dir", sweep.out_dir)->required();
  sweep_cmd->add_option("--jobs", sweep.jobs, "worker threads")
      ->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (CLI::App* sub : app.get_subcommands()) {
      Invocation inv{sub->get_name(), CollectFlags(*sub), 0, {}};
      const std::string& name = inv.subcommand;
      if (name == "simulate") RunSimulate(sim, inv);
      if (name == "fit") RunFit(fit, inv);
      if (name == "rank") RunRank(rank, inv);
      if (name == "evaluate") RunEvaluate(eval, inv);
      if (name == "diagnose") RunDiagnose(diag, inv);
      if (name == "theory") RunTheory(theory, inv);
      if (name == "sweep") RunSweep(sweep, inv);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
