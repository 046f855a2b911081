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


#include "salient/serialize.h"

#include <cmath>
#include <fstream>
#include <limits>

#include "salient/errors.h"

namespace salient {
namespace {

template <typename T>
T Get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing key '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad value for '") + key + "': " + e.what());
  }
}

Json OptionalReal(const std::optional<double>& x) {
  return x ? RealToJson(*x) : Json(nullptr);
}

}  // namespace

Json RealToJson(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double RealFromJson(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw ParseError("expected a real number, got " + j.dump());
}

Json VectorToJson(const Vector& v) {
  Json arr = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) arr.push_back(RealToJson(v(k)));
  return arr;
}

Vector VectorFromJson(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of reals");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    v(static_cast<Eigen::Index>(k)) = RealFromJson(j[k]);
  }
  return v;
}

Json SelectionToJson(const SelectionSpec& spec) {
  Json j;
  j["kind"] = KindName(spec.kind);
  switch (spec.kind) {
    case SelectionSpec::Kind::kFull:
      break;
    case SelectionSpec::Kind::kTopT:
      j["t"] = spec.count;
      break;
    case SelectionSpec::Kind::kRandomExactlyK:
      j["k"] = spec.count;
      j["seed"] = spec.seed;
      break;
    case SelectionSpec::Kind::kRandomBernoulli:
      j["p"] = spec.p;
      j["seed"] = spec.seed;
      break;
  }
  return j;
}

SelectionSpec SelectionFromJson(const Json& j) {
  const auto kind = Get<std::string>(j, "kind");
  const auto seed = j.contains("seed") ? Get<std::uint64_t>(j, "seed") : 0;
  if (kind == "full") return SelectionSpec::Full();
  if (kind == "top_t") return SelectionSpec::TopT(Get<std::size_t>(j, "t"));
  if (kind == "random_exactly_k") {
    return SelectionSpec::RandomExactlyK(Get<std::size_t>(j, "k"), seed);
  }
  if (kind == "random_bernoulli") {
    return SelectionSpec::RandomBernoulli(Get<double>(j, "p"), seed);
  }
  throw ParseError("unknown selection kind '" + kind + "'");
}

SelectionSpec ParseSelection(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("selection is not valid JSON: ") + e.what());
  }
  return SelectionFromJson(j);
}

Json FitResultToJson(const FitResult& r) {
  Json j;
  j["w_hat"] = VectorToJson(r.w_hat);
  j["final_grad_norm"] = RealToJson(r.final_grad_norm);
  j["final_objective"] = RealToJson(r.final_objective);
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  if (!r.trace.empty()) {
    Json t = Json::array();
    for (double v : r.trace) t.push_back(RealToJson(v));
    j["trace"] = std::move(t);
  }
  return j;
}

FitResult FitResultFromJson(const Json& j) {
  FitResult r;
  r.w_hat = VectorFromJson(j.at("w_hat"));
  r.final_grad_norm = RealFromJson(j.at("final_grad_norm"));
  r.final_objective = RealFromJson(j.at("final_objective"));
  r.iterations = Get<int>(j, "iterations");
  r.converged = Get<bool>(j, "converged");
  if (j.contains("trace")) {
    for (const auto& v : j.at("trace")) r.trace.push_back(RealFromJson(v));
  }
  return r;
}

Json TheoryToJson(const TheoryReport& r) {
  Json j;
  j["d"] = r.d;
  j["n"] = r.n;
  j["delta"] = RealToJson(r.delta);
  j["lambda"] = RealToJson(r.lambda);
  j["eta"] = RealToJson(r.eta);
  j["zeta"] = RealToJson(r.zeta);
  j["beta"] = RealToJson(r.beta);
  j["b_star"] = OptionalReal(r.b_star);
  j["identifiable"] = r.identifiable;
  j["rank"] = r.rank;
  j["lambda_tol"] = RealToJson(r.lambda_tol);
  j["m1"] = RealToJson(r.m1);
  j["m2"] = RealToJson(r.m2);
  j["required_m"] = RealToJson(r.RequiredSamples());
  // error_bound(m) = error_bound_coefficient / sqrt(m)
  j["error_bound_coefficient"] =
      r.b_star ? RealToJson(r.ErrorBound(1.0)) : Json(nullptr);
  return j;
}

TheoryReport TheoryFromJson(const Json& j) {
  TheoryReport r;
  r.d = Get<std::size_t>(j, "d");
  r.n = Get<std::size_t>(j, "n");
  r.delta = RealFromJson(j.at("delta"));
  r.lambda = RealFromJson(j.at("lambda"));
  r.eta = RealFromJson(j.at("eta"));
  r.zeta = RealFromJson(j.at("zeta"));
  r.beta = RealFromJson(j.at("beta"));
  if (!j.at("b_star").is_null()) r.b_star = RealFromJson(j.at("b_star"));
  r.identifiable = Get<bool>(j, "identifiable");
  r.rank = Get<std::size_t>(j, "rank");
  r.lambda_tol = RealFromJson(j.at("lambda_tol"));
  r.m1 = RealFromJson(j.at("m1"));
  r.m2 = RealFromJson(j.at("m2"));
  return r;
}

Json Corollary1ToJson(const Corollary1Report& r) {
  Json j;
  j["nu"] = RealToJson(r.nu);
  j["lambda_min_uut"] = RealToJson(r.lambda_min_uut);
  j["lambda_max_uut"] = RealToJson(r.lambda_max_uut);
  j["lambda_closed"] = RealToJson(r.lambda_closed);
  j["zeta_upper"] = RealToJson(r.zeta_upper);
  j["eta_upper"] = RealToJson(r.eta_upper);
  j["beta"] = RealToJson(r.beta);
  j["b_star"] = OptionalReal(r.b_star);
  j["m1"] = RealToJson(r.m1);
  j["m_lower"] = RealToJson(r.m_lower);
  j["required_m"] = RealToJson(r.RequiredSamples());
  j["error_bound_coefficient"] =
      r.b_star ? RealToJson(r.ErrorBound(1.0)) : Json(nullptr);
  return j;
}

Json Corollary2ToJson(const Corollary2Report& r) {
  Json j;
  j["partition_sizes"] = r.partition_sizes;
  j["all_coordinates_used"] = r.all_coordinates_used;
  j["epsilon"] = RealToJson(r.epsilon);
  j["beta"] = RealToJson(r.beta);
  j["lambda_lower"] = RealToJson(r.lambda_lower);
  j["zeta_upper"] = RealToJson(r.zeta_upper);
  j["eta_upper"] = RealToJson(r.eta_upper);
  j["b_star"] = OptionalReal(r.b_star);
  j["m1"] = RealToJson(r.m1);
  j["m3"] = RealToJson(r.m3);
  j["required_m"] = RealToJson(r.RequiredSamples());
  j["error_bound_coefficient"] =
      r.b_star ? RealToJson(r.ErrorBound(1.0)) : Json(nullptr);
  return j;
}

Json Corollary3ToJson(const Corollary3Report& r) {
  Json j;
  Json alpha = Json::array();
  for (double a : r.alpha) alpha.push_back(RealToJson(a));
  j["alpha"] = std::move(alpha);
  j["M"] = RealToJson(r.max_item_norm);
  j["k"] = r.k;
  j["alpha_k"] = RealToJson(r.alpha_k);
  j["c5"] = RealToJson(r.c5);
  j["m_terms"] = Json::array(
      {RealToJson(r.m1), RealToJson(r.m2), RealToJson(r.m_rank)});
  j["required_m"] = RealToJson(r.RequiredSamples());
  j["predicted_max_kendall"] = r.predicted_max_kendall;
  return j;
}

Json GuaranteeToJson(const GuaranteeCheck& r) {
  Json j;
  j["status"] = r.applicable ? "checked" : "bound not applicable";
  j["applicable"] = r.applicable;
  j["required_m"] = RealToJson(r.required_m);
  j["bound"] = RealToJson(r.bound);
  j["trials"] = r.trials;
  j["passes"] = r.passes;
  j["pass_rate"] = RealToJson(r.pass_rate);
  Json errs = Json::array();
  for (double e : r.errors) errs.push_back(RealToJson(e));
  j["errors"] = std::move(errs);
  return j;
}

Json TransitivityToJson(const TransitivityReport& r,
                        const std::vector<std::string>& item_ids) {
  auto name = [&](std::size_t i) {
    return i < item_ids.size() ? item_ids[i] : std::to_string(i);
  };
  Json j;
  j["triples_checked"] = r.triples_checked;
  j["strong_violations"] = r.strong_violations;
  j["moderate_violations"] = r.moderate_violations;
  j["weak_violations"] = r.weak_violations;
  j["strong_rate"] = RealToJson(r.Rate(r.strong_violations));
  j["moderate_rate"] = RealToJson(r.Rate(r.moderate_violations));
  j["weak_rate"] = RealToJson(r.Rate(r.weak_violations));
  Json list = Json::array();
  for (const auto& v : r.violations) {
    Json t;
    t["chain"] = {name(v.chain[0]), name(v.chain[1]), name(v.chain[2])};
    t["p_ij"] = RealToJson(v.p_ij);
    t["p_jk"] = RealToJson(v.p_jk);
    t["p_ik"] = RealToJson(v.p_ik);
    t["strong"] = v.strong;
    t["moderate"] = v.moderate;
    t["weak"] = v.weak;
    list.push_back(std::move(t));
  }
  j["violations"] = std::move(list);
  return j;
}

Json InconsistencyToJson(const InconsistencyResult& r) {
  Json j;
  j["inconsistent"] = r.inconsistent;
  j["compared"] = r.compared;
  j["rate"] = RealToJson(r.rate());
  return j;
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

void SaveJson(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << Dump(j);
  if (!out) throw Error("write to '" + path + "' failed");
}

Json LoadJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

}  // namespace salient
