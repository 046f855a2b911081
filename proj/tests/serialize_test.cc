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
#include <limits>
#include <random>

#include "doctest.h"
#include "oracles.h"
#include "salient/errors.h"

namespace salient {
namespace {

TEST_CASE("non-finite reals encode as strings") {
  CHECK(RealToJson(kInf) == "inf");
  CHECK(RealToJson(-kInf) == "-inf");
  CHECK(RealToJson(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(RealToJson(1.25) == 1.25);
  CHECK(RealFromJson(Json("inf")) == kInf);
  CHECK(RealFromJson(Json("-inf")) == -kInf);
  CHECK(std::isnan(RealFromJson(Json("nan"))));
  CHECK(RealFromJson(Json(3)) == 3.0);
  CHECK_THROWS_AS(RealFromJson(Json("many")), ParseError);
  CHECK_THROWS_AS(RealFromJson(Json::array()), ParseError);
}

TEST_CASE("vectors round trip exactly through text") {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 20; ++trial) {
    const Vector v = oracle::RandomVector(rng, 1 + trial % 6) * std::pow(10.0, trial - 10);
    const Json j = Json::parse(Dump(VectorToJson(v)));
    CHECK(VectorFromJson(j) == v);
  }
}

TEST_CASE("selection specs round trip") {
  const std::vector<SelectionSpec> specs = {
      SelectionSpec::Full(), SelectionSpec::TopT(3),
      SelectionSpec::RandomExactlyK(2, 99),
      SelectionSpec::RandomBernoulli(0.375, 12345678901234ULL)};
  for (const auto& s : specs) {
    CHECK(SelectionFromJson(SelectionToJson(s)) == s);
    CHECK(ParseSelection(Dump(SelectionToJson(s))) == s);
  }
  CHECK(ParseSelection(R"({"kind":"top_t","t":1})") == SelectionSpec::TopT(1));
  CHECK(SelectionToJson(SelectionSpec::Full()) == Json::parse(R"({"kind":"full"})"));
}

TEST_CASE("malformed selections are parse errors") {
  CHECK_THROWS_AS(ParseSelection("{"), ParseError);
  CHECK_THROWS_AS(ParseSelection(R"({"kind":"best"})"), ParseError);
  CHECK_THROWS_AS(ParseSelection(R"({"kind":"top_t"})"), ParseError);
  CHECK_THROWS_AS(ParseSelection(R"({"kind":"top_t","t":"two"})"), ParseError);
  CHECK_THROWS_AS(ParseSelection(R"({"kind":"random_exactly_k","seed":2})"), ParseError);
  CHECK(ParseSelection(R"({"kind":"random_exactly_k","k":2})") ==
        SelectionSpec::RandomExactlyK(2, 0));
  CHECK_THROWS_AS(ParseSelection(R"([1,2])"), ParseError);
}

TEST_CASE("fit results round trip") {
  FitResult r;
  r.w_hat = Vector{{0.1, -2.5, 1e-300}};
  r.final_grad_norm = 3.5e-9;
  r.final_objective = 17.25;
  r.iterations = 6;
  r.converged = true;
  r.trace = {20.0, 18.0, 17.25};
  const FitResult back = FitResultFromJson(Json::parse(Dump(FitResultToJson(r))));
  CHECK(back.w_hat == r.w_hat);
  CHECK(back.final_grad_norm == r.final_grad_norm);
  CHECK(back.final_objective == r.final_objective);
  CHECK(back.iterations == r.iterations);
  CHECK(back.converged == r.converged);
  CHECK(back.trace == r.trace);

  r.trace.clear();
  CHECK_FALSE(FitResultToJson(r).contains("trace"));
}

TEST_CASE("theory reports round trip") {
  std::mt19937_64 rng(82);
  const FeatureMatrix u(oracle::RandomMatrix(rng, 3, 8));
  const RealizedSelection sel(SelectionSpec::TopT(2), u);
  for (bool with_w : {true, false}) {
    const TheoryReport r = Theorem1Report(
        u, sel, with_w ? std::optional<Vector>(oracle::RandomVector(rng, 3)) : std::nullopt,
        0.1);
    const Json j = TheoryToJson(r);
    CHECK(j.at("b_star").is_null() == !with_w);
    const TheoryReport back = TheoryFromJson(Json::parse(Dump(j)));
    CHECK(back.d == r.d);
    CHECK(back.n == r.n);
    CHECK(back.delta == r.delta);
    CHECK(back.lambda == r.lambda);
    CHECK(back.eta == r.eta);
    CHECK(back.zeta == r.zeta);
    CHECK(back.beta == r.beta);
    CHECK(back.b_star == r.b_star);
    CHECK(back.identifiable == r.identifiable);
    CHECK(back.rank == r.rank);
    CHECK(back.lambda_tol == r.lambda_tol);
    CHECK(back.m1 == r.m1);
    CHECK(back.m2 == r.m2);
  }

  const FeatureMatrix basis(Matrix::Identity(3, 3));
  const TheoryReport bad = Theorem1Report(
      basis, RealizedSelection(SelectionSpec::Full(), basis), std::nullopt, 0.05);
  const Json j = TheoryToJson(bad);
  CHECK(j.at("m2") == "inf");
  CHECK(std::isinf(TheoryFromJson(j).m2));
}

TEST_CASE("transitivity reports use item ids") {
  TransitivityReport r;
  r.triples_checked = 4;
  r.strong_violations = 1;
  r.violations.push_back({{2, 0, 1}, 0.9, 0.6, 0.7, true, false, false});
  const Json j = TransitivityToJson(r, {"a", "b", "c"});
  CHECK(j.at("strong_rate") == 0.25);
  CHECK(j.at("violations")[0].at("chain") == Json::parse(R"(["c","a","b"])"));
  CHECK(InconsistencyToJson({1, 4}).at("rate") == 0.25);
}

TEST_CASE("dump is indented and newline terminated") {
  Json j;
  j["a"] = 1;
  CHECK(Dump(j) == "{\n  \"a\": 1\n}\n");
}

}  // namespace
}  // namespace salient
