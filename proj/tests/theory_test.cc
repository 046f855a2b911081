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


#include "salient/theory.h"

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.h"
#include "salient/errors.h"
#include "salient/synthetic.h"

namespace salient {
namespace {

// Direct lambda, eta, zeta from explicitly enumerated Z matrices and a
// dense reference eigensolver.
struct Direct {
  double lambda;
  double eta;
  double zeta;
};

Direct DirectQuantities(const FeatureMatrix& u, const RealizedSelection& sel) {
  const Matrix ez = oracle::ExplicitEZ(u, sel);
  const std::size_t n = u.num_items();
  Matrix second = Matrix::Zero(u.dim(), u.dim());
  double zeta = -INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector x = Mask(u.item(i) - u.item(j), sel.Select(i, j));
      const Matrix dev = x * x.transpose() - ez;
      second += dev * dev;
      const Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(-dev));
      zeta = std::max(zeta, es.eigenvalues().maxCoeff());
    }
  }
  second /= static_cast<double>(NumPairs(n));
  return {Eigen::SelfAdjointEigenSolver<Matrix>(ez).eigenvalues().minCoeff(),
          Eigen::SelfAdjointEigenSolver<Matrix>(second).eigenvalues().maxCoeff(),
          zeta};
}

FeatureMatrix Line(std::initializer_list<double> values) {
  Matrix m(1, static_cast<Eigen::Index>(values.size()));
  Eigen::Index j = 0;
  for (double v : values) m(0, j++) = v;
  return FeatureMatrix(m);
}

TEST_CASE("masked difference matrix and expected outer product") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const FeatureMatrix u(oracle::RandomMatrix(rng, 4, 11));
    const RealizedSelection sel(SelectionSpec::RandomExactlyK(2, 4), u);
    const Matrix x = MaskedDifferenceMatrix(u, sel);
    CHECK(x.rows() == static_cast<Eigen::Index>(NumPairs(11)));
    const Matrix a = ExpectedOuterProduct(x);
    const Matrix b = oracle::ExplicitEZ(u, sel);
    CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("single pair: expectation equals that pair") {
  const FeatureMatrix u = Line({2.5, -1.0});
  const TheoryReport r = Theorem1Report(
      u, RealizedSelection(SelectionSpec::Full(), u), std::nullopt, 0.1);
  CHECK(r.lambda == doctest::Approx(12.25).epsilon(1e-14));
  CHECK(r.zeta == 0.0);
  CHECK(r.eta == 0.0);
  CHECK(r.beta == 3.5);
  CHECK(r.identifiable);
  CHECK_FALSE(r.b_star.has_value());
  CHECK_THROWS_AS(r.ErrorBound(100), PreconditionError);
}

TEST_CASE("standard basis features are not identifiable") {
  for (std::size_t d : {2, 3, 5}) {
    const FeatureMatrix u(Matrix::Identity(d, d));
    const RealizedSelection sel(SelectionSpec::Full(), u);
    const auto id = Identifiability(u, sel);
    CHECK_FALSE(id.identifiable);
    CHECK(id.rank == d - 1);
    const TheoryReport r = Theorem1Report(u, sel, Vector::Ones(d), 0.05);
    CHECK(std::abs(r.lambda) <= 1e-10);
    CHECK_FALSE(r.identifiable);
    CHECK(std::isinf(r.m2));
    CHECK(std::isinf(r.ErrorBound(1e6)));
  }
}

TEST_CASE("identifiability examples") {
  Matrix m(2, 3);
  m << 0, 1, 0,
       0, 0, 1;
  const FeatureMatrix u(m);
  CHECK(Identifiability(u, RealizedSelection(SelectionSpec::Full(), u)).identifiable);

  // Coordinate 2 always dominates, so coordinate 1 is never compared.
  Matrix s(2, 4);
  s << 0.0, 0.1, 0.2, 0.3,
       0.0, 5.0, 10.0, 15.0;
  const FeatureMatrix v(s);
  const RealizedSelection top1(SelectionSpec::TopT(1), v);
  const auto id = Identifiability(v, top1);
  CHECK_FALSE(id.identifiable);
  CHECK(id.rank == 1);
  CHECK(PartitionByCoordinate(top1)[0].empty());
}

TEST_CASE("identifiable iff lambda > 0 across instance families") {
  std::mt19937_64 rng(62);
  std::size_t positive = 0;
  std::size_t zero = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m;
    SelectionSpec spec = SelectionSpec::Full();
    switch (trial % 4) {
      case 0:
        m = oracle::RandomMatrix(rng, 3, 8);
        break;
      case 1:
        m = Matrix::Identity(2 + trial % 3, 2 + trial % 3);
        break;
      case 2: {
        // Coordinate-starved: the last coordinate has a tiny spread.
        m = oracle::RandomMatrix(rng, 3, 10);
        m.row(2) *= 1e-3;
        spec = SelectionSpec::TopT(1);
        break;
      }
      default:
        m = oracle::RandomMatrix(rng, 4, 12);
        spec = SelectionSpec::TopT(1);
        break;
    }
    const FeatureMatrix u(m);
    const RealizedSelection sel(spec, u);
    const TheoryReport r = Theorem1Report(u, sel, std::nullopt, 0.05);
    const auto id = Identifiability(u, sel);
    CHECK(id.identifiable == r.identifiable);
    CHECK(r.lambda >= -1e-12);
    (r.identifiable ? positive : zero) += 1;
  }
  CHECK(positive > 0);
  CHECK(zero > 0);
}

TEST_CASE("spectral quantities match a direct computation") {
  std::mt19937_64 rng(63);
  const std::vector<SelectionSpec> specs = {
      SelectionSpec::Full(), SelectionSpec::TopT(1), SelectionSpec::TopT(2),
      SelectionSpec::RandomBernoulli(0.5, 3)};
  for (int trial = 0; trial < 12; ++trial) {
    const FeatureMatrix u = CenterColumns(FeatureMatrix(oracle::RandomMatrix(rng, 4, 25)));
    const Vector w = oracle::RandomVector(rng, 4);
    const RealizedSelection sel(specs[trial % specs.size()], u);
    const TheoryReport r = Theorem1Report(u, sel, w, 0.05);
    const Direct d = DirectQuantities(u, sel);
    CHECK(std::abs(r.lambda - d.lambda) <= 1e-10);
    CHECK(std::abs(r.eta - d.eta) <= 1e-10 * std::max(1.0, d.eta));
    CHECK(std::abs(r.zeta - d.zeta) <= 1e-10 * std::max(1.0, d.zeta));

    const Matrix x = MaskedDifferenceMatrix(u, sel);
    CHECK(r.beta == x.cwiseAbs().maxCoeff());
    CHECK(*r.b_star == doctest::Approx((x * w).cwiseAbs().maxCoeff()).epsilon(1e-14));

    const double l4 = std::log(4.0 * 4 / 0.05);
    const double l2 = std::log(2.0 * 4 / 0.05);
    CHECK(r.m1 == doctest::Approx((3 * r.beta * r.beta * l4 * 4 +
                                   4 * 2.0 * r.beta * l4) / 6).epsilon(1e-14));
    CHECK(r.m2 == doctest::Approx(8 * l2 * (6 * r.eta + r.lambda * r.zeta) /
                                  (3 * r.lambda * r.lambda)).epsilon(1e-14));
    const double b = *r.b_star;
    CHECK(r.ErrorBound(1000) ==
          doctest::Approx(4 * std::pow(1 + std::exp(b), 2) /
                          (std::exp(b) * r.lambda) *
                          std::sqrt(r.m1 / 1000)).epsilon(1e-13));
  }
}

TEST_CASE("error bound halves when m quadruples") {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 20; ++trial) {
    const FeatureMatrix u(oracle::RandomMatrix(rng, 3, 10));
    const TheoryReport r = Theorem1Report(
        u, RealizedSelection(SelectionSpec::Full(), u),
        oracle::RandomVector(rng, 3), 0.05);
    for (double m : {1.0, 1000.0, 12345.0, 1e7}) {
      CHECK(r.ErrorBound(4 * m) == r.ErrorBound(m) / 2);
      CHECK(r.ErrorBound(2 * m) < r.ErrorBound(m));
    }
  }
}

TEST_CASE("delta must be a probability") {
  const FeatureMatrix u = Line({0.0, 1.0});
  const RealizedSelection sel(SelectionSpec::Full(), u);
  CHECK_THROWS_AS(Theorem1Report(u, sel, std::nullopt, 0.0), PreconditionError);
  CHECK_THROWS_AS(Theorem1Report(u, sel, std::nullopt, 1.0), PreconditionError);
}

TEST_CASE("full-feature closed form matches direct enumeration") {
  std::mt19937_64 rng(65);
  for (int trial = 0; trial < 20; ++trial) {
    const FeatureMatrix raw(oracle::RandomMatrix(rng, 4, 20));
    const FeatureMatrix u = CenterColumns(raw);
    const Corollary1Report c = Corollary1(raw, std::nullopt, 0.05);
    const Direct d = DirectQuantities(u, RealizedSelection(SelectionSpec::Full(), u));
    CHECK(std::abs(c.lambda_closed - d.lambda) <= 1e-8 * std::max(1.0, d.lambda));
    CHECK(d.zeta <= c.zeta_upper + 1e-8);
    CHECK(d.eta <= c.eta_upper + 1e-8);
    CHECK(c.nu >= 1.0);
    CHECK(c.m_lower > 0.0);
  }
}

TEST_CASE("full-feature report details") {
  // Max pairwise squared distance 0.25 < 1.
  Matrix m(1, 3);
  m << 0.0, 0.25, 0.5;
  const Corollary1Report c = Corollary1(FeatureMatrix(m), Vector{{1.0}}, 0.05);
  CHECK(c.nu == 1.0);
  CHECK(c.ErrorBound(400) == c.ErrorBound(100) / 2);
  CHECK_THROWS_AS(Corollary1(FeatureMatrix(Matrix::Identity(3, 3)), std::nullopt, 0.05),
                  PreconditionError);
}

TEST_CASE("single-coordinate bounds hold") {
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 20; ++trial) {
    const FeatureMatrix u(oracle::RandomMatrix(rng, 5, 20));
    const RealizedSelection sel(SelectionSpec::TopT(1), u);
    const Corollary2Report c = Corollary2(u, sel, std::nullopt, 0.05);
    const Direct d = DirectQuantities(u, sel);
    CHECK(d.lambda >= c.lambda_lower - 1e-10);
    CHECK(d.zeta <= c.zeta_upper + 1e-8);
    CHECK(d.eta <= c.eta_upper + 1e-8);
    std::size_t total = 0;
    for (std::size_t s : c.partition_sizes) total += s;
    CHECK(total == NumPairs(20));
  }
}

TEST_CASE("single-coordinate report examples") {
  const FeatureMatrix one = Line({0.0, 1.0, 3.0, 3.5});
  const Corollary2Report c1 =
      Corollary2(one, RealizedSelection(SelectionSpec::TopT(1), one), std::nullopt, 0.05);
  CHECK(c1.epsilon == 0.5);
  CHECK(c1.lambda_lower == 0.25);

  Matrix m(2, 3);
  m << 0, 1, 1,
       0, 0, 5;
  const FeatureMatrix u(m);
  const Corollary2Report c2 =
      Corollary2(u, RealizedSelection(SelectionSpec::TopT(1), u), std::nullopt, 0.05);
  CHECK(c2.partition_sizes == std::vector<std::size_t>{1, 2});
  CHECK(c2.all_coordinates_used);

  Matrix s(2, 4);
  s << 0.0, 0.1, 0.2, 0.3,
       0.0, 5.0, 10.0, 15.0;
  const FeatureMatrix v(s);
  const Corollary2Report starved =
      Corollary2(v, RealizedSelection(SelectionSpec::TopT(1), v), std::nullopt, 0.05);
  CHECK_FALSE(starved.all_coordinates_used);
  CHECK(starved.lambda_lower == 0.0);
  CHECK(std::isinf(starved.m3));

  CHECK_THROWS_AS(
      Corollary2(u, RealizedSelection(SelectionSpec::Full(), u), std::nullopt, 0.05),
      PreconditionError);
}

TEST_CASE("ranking bound terms") {
  const FeatureMatrix u = Line({0.0, 1.0, 3.0});
  const RealizedSelection sel(SelectionSpec::Full(), u);
  const TheoryReport t = Theorem1Report(u, sel, Vector{{1.0}}, 0.05);
  const Corollary3Report c = Corollary3(u, Vector{{1.0}}, t, 2);
  CHECK(c.alpha == std::vector<double>{1.0, 2.0, 3.0});
  CHECK(c.alpha_k == 2.0);
  CHECK(c.max_item_norm == 3.0);
  CHECK(c.predicted_max_kendall == 1);
  const double d = 1.0;
  const double beta = t.beta;
  const double want = 1.0 * 9.0 * std::exp(2 * *t.b_star) *
                      (beta * beta * d + beta * std::sqrt(d)) *
                      std::log(4 * d / 0.05) / (4.0 * t.lambda * t.lambda);
  CHECK(c.m_rank == doctest::Approx(want).epsilon(1e-14));
  CHECK(Corollary3(u, Vector{{1.0}}, t, 2, 3.0).m_rank ==
        doctest::Approx(3 * want).epsilon(1e-14));

  const TheoryReport t0 = Theorem1Report(u, sel, Vector{{0.0}}, 0.05);
  CHECK(std::isinf(Corollary3(u, Vector{{0.0}}, t0, 1).m_rank));
  CHECK_THROWS_AS(Corollary3(u, Vector{{1.0}}, t, 4), PreconditionError);
  CHECK_THROWS_AS(Corollary3(u, Vector{{1.0}}, t, 0), PreconditionError);
  const TheoryReport no_w = Theorem1Report(u, sel, std::nullopt, 0.05);
  CHECK_THROWS_AS(Corollary3(u, Vector{{1.0}}, no_w, 1), PreconditionError);
}

TEST_CASE("empirical guarantee check") {
  const SyntheticInstance inst = SampleInstance(2, 10, 4);
  const RealizedSelection sel(SelectionSpec::Full(), inst.u);
  const TheoryReport t = Theorem1Report(inst.u, sel, inst.w_star, 0.05);
  REQUIRE(t.identifiable);

  const GuaranteeCheck skipped =
      EmpiricalGuaranteeCheck(inst.u, inst.w_star, sel, 10, 0.05, 5, 1);
  CHECK_FALSE(skipped.applicable);
  CHECK(skipped.trials == 0);

  const auto m = static_cast<std::size_t>(std::ceil(t.RequiredSamples()));
  const GuaranteeCheck ok =
      EmpiricalGuaranteeCheck(inst.u, inst.w_star, sel, m, 0.05, 5, 1);
  CHECK(ok.applicable);
  CHECK(ok.passes == 5);
  CHECK(ok.pass_rate == 1.0);

  const GuaranteeCheck zero =
      EmpiricalGuaranteeCheck(inst.u, Vector::Zero(2), sel, m, 0.05, 3, 2);
  CHECK(zero.pass_rate == 1.0);

  const FeatureMatrix basis(Matrix::Identity(3, 3));
  CHECK_THROWS_AS(EmpiricalGuaranteeCheck(
                      basis, Vector::Ones(3),
                      RealizedSelection(SelectionSpec::Full(), basis), 1000, 0.05, 2, 1),
                  PreconditionError);
}

}  // namespace
}  // namespace salient
