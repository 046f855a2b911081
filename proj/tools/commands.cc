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


#include "commands.h"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "salient/dataio.h"
#include "salient/diagnostics.h"
#include "salient/errors.h"
#include "salient/estimator.h"
#include "salient/ranking.h"
#include "salient/rng.h"
#include "salient/synthetic.h"
#include "salient/theory.h"

namespace salient::cli {
namespace fs = std::filesystem;

namespace {

constexpr const char* kRngScheme =
    "mt19937_64; every stream seeded with splitmix64 hashing of "
    "(seed, stream path); streams: features=1, judgment=2, selection=3 "
    "(per pair: i, j, draw), comparisons=4, trial=5 (sweep: trial, m)";

std::string Timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

SelectionSpec SelectionFlag(const std::string& text) {
  try {
    return ParseSelection(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--selection: ") + e.what());
  }
}

void Warn(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

FeatureMatrix ReadFeatureFile(const std::string& path) {
  LoadedFeatures f = LoadFeatures(path);
  Warn(f.warnings);
  return std::move(f.features);
}

void EnsureDir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create directory '" + dir + "': " + ec.message());
}

std::string ManifestBeside(const std::string& out) {
  return out + ".manifest.json";
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace

std::string FileDigest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for hashing");
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[1 << 14];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, md, &len);
  EVP_MD_CTX_free(ctx);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int k = 0; k < len; ++k) {
    hex += kHex[md[k] >> 4];
    hex += kHex[md[k] & 15];
  }
  return hex;
}

void WriteManifest(const std::string& path, const Invocation& inv) {
  Json j;
  j["subcommand"] = inv.subcommand;
  j["flags"] = inv.flags;
  j["seed"] = inv.seed;
  j["version"] = SALIENT_VERSION;
  Json inputs = Json::object();
  for (const auto& p : inv.inputs) inputs[p] = FileDigest(p);
  j["input_sha256"] = std::move(inputs);
  j["rng"] = kRngScheme;
  j["created_utc"] = Timestamp();
  SaveJson(path, j);
}

void RunSimulate(const SimulateOptions& o, Invocation inv) {
  const SelectionSpec spec = SelectionFlag(o.selection);
  try {
    spec.Validate(o.d);
  } catch (const PreconditionError& e) {
    throw UsageError(std::string("--selection: ") + e.what());
  }
  SyntheticInstance inst = SampleInstance(o.d, o.n, o.seed);
  const RealizedSelection sel(spec, inst.u);
  const ComparisonDataset data =
      SampleComparisons(inst.u, inst.w_star, sel, o.m, o.seed);

  EnsureDir(o.out_dir);
  const fs::path dir(o.out_dir);
  SaveFeatures((dir / "features.csv").string(), inst.u);
  SaveComparisons((dir / "comparisons.csv").string(), inst.u, data);
  Json truth;
  truth["d"] = o.d;
  truth["n"] = o.n;
  truth["m"] = o.m;
  truth["seed"] = o.seed;
  truth["selection"] = SelectionToJson(spec);
  truth["w_star"] = VectorToJson(inst.w_star);
  SaveJson((dir / "truth.json").string(), truth);
  inv.seed = o.seed;
  WriteManifest((dir / "manifest.json").string(), inv);
}

void RunFit(const FitOptions& o, Invocation inv) {
  const SelectionSpec spec = SelectionFlag(o.selection);
  const FeatureMatrix u = ReadFeatureFile(o.features);
  const ComparisonDataset data = LoadComparisons(o.comparisons, u, o.min_count);
  const RealizedSelection sel(spec, u);
  FitConfig cfg;
  cfg.mu = o.mu;
  cfg.tol_grad = o.tol;
  cfg.max_iters = o.max_iters;
  const FitResult fit = Fit(u, sel, data, cfg);
  if (!fit.converged) {
    std::cerr << "warning: fit stopped with gradient norm "
              << FormatReal(fit.final_grad_norm) << '\n';
  }
  Json j;
  j["selection"] = SelectionToJson(spec);
  j["mu"] = RealToJson(o.mu);
  j["num_samples"] = data.size();
  const Json body = FitResultToJson(fit);
  for (const auto& [key, value] : body.items()) j[key] = value;
  SaveJson(o.out, j);
  inv.inputs = {o.features, o.comparisons};
  inv.seed = spec.seed;
  WriteManifest(ManifestBeside(o.out), inv);
}

void RunRank(const RankOptions& o, Invocation inv) {
  const FeatureMatrix u = ReadFeatureFile(o.features);
  const Vector w = LoadWeights(o.weights, u.dim());
  SaveRankings(o.out, u, {{"estimate", RankFromWeights(u, w)}});
  inv.inputs = {o.features, o.weights};
  WriteManifest(ManifestBeside(o.out), inv);
}

void RunEvaluate(const EvaluateOptions& o, Invocation inv) {
  if (!o.rankings && !o.comparisons) {
    throw UsageError("evaluate needs --rankings or --comparisons");
  }
  const FeatureMatrix u = ReadFeatureFile(o.features);
  const Vector w = LoadWeights(o.weights, u.dim());
  inv.inputs = {o.features, o.weights};
  Json j;
  if (o.rankings) {
    const LoadedRankings loaded = LoadRankings(*o.rankings, u);
    Warn(loaded.warnings);
    if (loaded.rankings.empty()) {
      throw UndefinedMetricError("no ranker with at least two known items");
    }
    const Ranking estimate = RankFromWeights(u, w);
    Json per = Json::array();
    std::vector<double> taus;
    for (const auto& r : loaded.rankings) {
      const Ranking restricted = estimate.RestrictTo(r.ranking.order());
      const double tau = KendallCorrelation(r.ranking, restricted);
      taus.push_back(tau);
      Json row;
      row["ranker_id"] = r.ranker_id;
      row["size"] = r.ranking.size();
      row["kendall_distance"] = KendallDistance(r.ranking, restricted);
      row["kendall_tau"] = RealToJson(tau);
      per.push_back(std::move(row));
    }
    double mean = 0.0;
    for (double t : taus) mean += t;
    mean /= static_cast<double>(taus.size());
    double var = 0.0;
    for (double t : taus) var += (t - mean) * (t - mean);
    var /= static_cast<double>(taus.size());
    Json block;
    block["num_rankers"] = taus.size();
    block["mean_kendall_tau"] = RealToJson(mean);
    block["std_kendall_tau"] = RealToJson(std::sqrt(var));
    block["per_ranker"] = std::move(per);
    j["rankings"] = std::move(block);
    inv.inputs.push_back(*o.rankings);
  }
  if (o.comparisons) {
    const SelectionSpec spec = SelectionFlag(o.selection);
    const ComparisonDataset data = LoadComparisons(*o.comparisons, u, o.min_count);
    const RealizedSelection sel(spec, u);
    Json block;
    block["selection"] = SelectionToJson(spec);
    block["num_samples"] = data.size();
    block["pairwise_accuracy"] = RealToJson(PairwiseAccuracy(u, w, sel, data));
    j["comparisons"] = std::move(block);
    inv.inputs.push_back(*o.comparisons);
  }
  SaveJson(o.out, j);
  WriteManifest(ManifestBeside(o.out), inv);
}

void RunDiagnose(const DiagnoseOptions& o, Invocation inv) {
  if (!o.comparisons && !o.weights) {
    throw UsageError("diagnose needs --comparisons or --weights");
  }
  const FeatureMatrix u = ReadFeatureFile(o.features);
  inv.inputs = {o.features};
  std::optional<PairProbabilities> model;
  if (o.weights) {
    const SelectionSpec spec = SelectionFlag(o.selection);
    const Vector w = LoadWeights(*o.weights, u.dim());
    model = ModelProbabilities(u, w, RealizedSelection(spec, u));
    inv.inputs.push_back(*o.weights);
  }
  Json j;
  j["min_count"] = o.min_count;
  if (o.comparisons) {
    const ComparisonDataset data = LoadComparisons(*o.comparisons, u, 1);
    inv.inputs.push_back(*o.comparisons);
    const PairProbabilities empirical =
        EmpiricalProbabilities(EmpiricalPairStats(data), o.min_count);
    j["source"] = "empirical";
    j["transitivity"] =
        TransitivityToJson(CountTransitivityViolations(empirical), u.item_ids());
    if (model) {
      j["inconsistency"] = InconsistencyToJson(PairwiseInconsistency(empirical, *model));
    } else {
      j["inconsistency"] = nullptr;
    }
  } else {
    j["source"] = "model";
    j["transitivity"] =
        TransitivityToJson(CountTransitivityViolations(*model), u.item_ids());
    j["inconsistency"] = nullptr;
  }
  SaveJson(o.out, j);
  WriteManifest(ManifestBeside(o.out), inv);
}

void RunTheory(const TheoryOptions& o, Invocation inv) {
  if (!(o.delta > 0.0 && o.delta < 1.0)) {
    throw UsageError("--delta must lie in (0, 1)");
  }
  const SelectionSpec spec = SelectionFlag(o.selection);
  const FeatureMatrix u = ReadFeatureFile(o.features);
  inv.inputs = {o.features};
  std::optional<Vector> w;
  if (o.weights) {
    w = LoadWeights(*o.weights, u.dim());
    inv.inputs.push_back(*o.weights);
  }
  const RealizedSelection sel(spec, u);
  const TheoryReport t = Theorem1Report(u, sel, w, o.delta);
  Json j;
  j["selection"] = SelectionToJson(spec);
  j["theorem1"] = TheoryToJson(t);
  if (sel.IsFull() && u.num_items() > u.dim()) {
    j["corollary1"] = Corollary1ToJson(Corollary1(u, w, o.delta));
  }
  if (sel.AllSingletons()) {
    j["corollary2"] = Corollary2ToJson(Corollary2(u, sel, w, o.delta));
  }
  if (w) {
    j["corollary3"] = Corollary3ToJson(Corollary3(u, *w, t, o.k, o.c5));
  }
  SaveJson(o.out, j);
  WriteManifest(ManifestBeside(o.out), inv);
}

namespace {

struct SweepCell {
  std::size_t selection;
  std::size_t m;
  std::uint64_t seed;
};

struct SweepRow {
  std::string selection;
  std::size_t m;
  std::uint64_t seed;
  std::string metric;
  double value;

  auto key() const { return std::tie(selection, m, seed, metric); }
};

std::string SelectionLabel(const SelectionSpec& s) {
  switch (s.kind) {
    case SelectionSpec::Kind::kFull:
      return "full";
    case SelectionSpec::Kind::kTopT:
      return "top_t:" + std::to_string(s.count);
    case SelectionSpec::Kind::kRandomExactlyK:
      return "random_exactly_k:" + std::to_string(s.count) + "@" +
             std::to_string(s.seed);
    case SelectionSpec::Kind::kRandomBernoulli:
      return "random_bernoulli:" + FormatReal(s.p) + "@" +
             std::to_string(s.seed);
  }
  return "";
}

std::vector<SweepRow> RunCell(std::size_t d, std::size_t n, double mu,
                              double tol, const SelectionSpec& spec,
                              const SweepCell& cell) {
  const SyntheticInstance inst = SampleInstance(d, n, cell.seed);
  const RealizedSelection sel(spec, inst.u);
  const ComparisonDataset data = SampleComparisons(
      inst.u, inst.w_star, sel, cell.m,
      DeriveSeed(cell.seed, {streams::kTrial, cell.m}));
  FitConfig cfg;
  cfg.mu = mu;
  cfg.tol_grad = tol;
  const FitResult fit = Fit(inst.u, sel, data, cfg);

  const Ranking truth = RankFromWeights(inst.u, inst.w_star);
  const Ranking est = RankFromWeights(inst.u, fit.w_hat);
  double accuracy = std::numeric_limits<double>::quiet_NaN();
  try {
    accuracy = PairwiseAccuracy(inst.u, fit.w_hat, sel, data);
  } catch (const UndefinedMetricError&) {
  }
  const std::string label = SelectionLabel(spec);
  auto row = [&](const char* metric, double v) {
    return SweepRow{label, cell.m, cell.seed, metric, v};
  };
  return {
      row("converged", fit.converged ? 1.0 : 0.0),
      row("iterations", fit.iterations),
      row("kendall_distance", static_cast<double>(KendallDistance(truth, est))),
      row("kendall_tau", KendallCorrelation(truth, est)),
      row("l2_error", (fit.w_hat - inst.w_star).norm()),
      row("pairwise_accuracy", accuracy),
  };
}

template <typename T>
T SpecGet(const Json& spec, const char* key) {
  if (!spec.contains(key)) {
    throw UsageError(std::string("sweep spec lacks '") + key + "'");
  }
  try {
    return spec.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("sweep spec '") + key + "': " + e.what());
  }
}

}  // namespace

void RunSweep(const SweepOptions& o, Invocation inv) {
  Json spec;
  try {
    spec = LoadJson(o.spec);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  const auto d = SpecGet<std::size_t>(spec, "d");
  const auto n = SpecGet<std::size_t>(spec, "n");
  const auto ms = SpecGet<std::vector<std::size_t>>(spec, "m");
  const double mu = spec.value("mu", 0.0);
  const double tol = spec.value("tol", 1e-8);
  std::vector<std::uint64_t> seeds;
  if (spec.contains("seeds")) {
    seeds = SpecGet<std::vector<std::uint64_t>>(spec, "seeds");
  } else {
    const auto count = SpecGet<std::uint64_t>(spec, "num_seeds");
    for (std::uint64_t s = 0; s < count; ++s) seeds.push_back(s);
  }
  std::vector<SelectionSpec> selections;
  if (!spec.contains("selections") || !spec.at("selections").is_array()) {
    throw UsageError("sweep spec lacks a 'selections' array");
  }
  for (const auto& s : spec.at("selections")) {
    try {
      selections.push_back(SelectionFromJson(s));
      selections.back().Validate(d);
    } catch (const Error& e) {
      throw UsageError(std::string("sweep spec selection: ") + e.what());
    }
  }
  if (d < 1 || n < 2) throw UsageError("sweep spec needs d >= 1 and n >= 2");

  std::vector<SweepCell> cells;
  for (std::size_t s = 0; s < selections.size(); ++s) {
    for (std::size_t m : ms) {
      for (std::uint64_t seed : seeds) cells.push_back({s, m, seed});
    }
  }

  std::vector<SweepRow> rows;
  std::mutex mu_rows;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  auto worker = [&] {
    while (true) {
      const std::size_t c = next.fetch_add(1);
      if (c >= cells.size()) return;
      try {
        auto out = RunCell(d, n, mu, tol, selections[cells[c].selection], cells[c]);
        std::lock_guard<std::mutex> lock(mu_rows);
        rows.insert(rows.end(), out.begin(), out.end());
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu_rows);
        if (!failure) failure = std::current_exception();
        next = cells.size();
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, o.jobs);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::sort(rows.begin(), rows.end(),
            [](const SweepRow& a, const SweepRow& b) { return a.key() < b.key(); });
  std::ostringstream csv;
  csv << "selection,m,seed,metric,value\n";
  for (const auto& r : rows) {
    csv << r.selection << ',' << r.m << ',' << r.seed << ',' << r.metric << ','
        << FormatReal(r.value) << '\n';
  }
  EnsureDir(o.out_dir);
  const fs::path dir(o.out_dir);
  WriteText((dir / "sweep.csv").string(), csv.str());
  inv.inputs = {o.spec};
  WriteManifest((dir / "manifest.json").string(), inv);
}

}  // namespace salient::cli
