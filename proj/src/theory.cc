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

#include "salient/errors.h"
#include "salient/estimator.h"
#include "salient/linalg.h"
#include "salient/model.h"
#include "salient/ranking.h"
#include "salient/rng.h"

namespace salient {
namespace {

void CheckDelta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw PreconditionError("delta must lie in (0, 1)");
  }
}

double MaxAbsGap(const Matrix& diffs, const Vector& w) {
  return (diffs * w).cwiseAbs().maxCoeff();
}

// 4 (1 + e^b)^2 / e^b, evaluated as 4 (e^{-b/2} + e^{b/2})^2 to stay finite
// for moderately large b.
double CurvaturePrefactor(double b) {
  const double s = std::exp(-0.5 * b) + std::exp(0.5 * b);
  return 4.0 * s * s;
}

}  // namespace

Matrix MaskedDifferenceMatrix(const FeatureMatrix& u,
                              const RealizedSelection& sel) {
  if (sel.dim() != u.dim() || sel.num_items() != u.num_items()) {
    throw DimensionError("selection was realized for a different matrix");
  }
  const std::size_t n = u.num_items();
  const auto rows = static_cast<Eigen::Index>(NumPairs(n));
  Matrix x = Matrix::Zero(rows, static_cast<Eigen::Index>(u.dim()));
  Eigen::Index r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++r) {
      for (std::size_t k : sel.ByPairIndex(static_cast<std::size_t>(r)).indices()) {
        const auto kk = static_cast<Eigen::Index>(k);
        x(r, kk) = u.matrix()(kk, static_cast<Eigen::Index>(i)) -
                   u.matrix()(kk, static_cast<Eigen::Index>(j));
      }
    }
  }
  return x;
}

Matrix ExpectedOuterProduct(const Matrix& diffs) {
  return diffs.transpose() * diffs / static_cast<double>(diffs.rows());
}

IdentifiabilityResult Identifiability(const FeatureMatrix& u,
                                      const RealizedSelection& sel) {
  const Matrix x = MaskedDifferenceMatrix(u, sel);
  const Eigen::JacobiSVD<Matrix> svd(x);
  const Vector& sv = svd.singularValues();
  IdentifiabilityResult out;
  if (sv.size() == 0 || sv(0) == 0.0) return out;
  const double cutoff = 1e-10 * sv(0);
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) > cutoff) ++out.rank;
  }
  out.identifiable = out.rank == u.dim();
  return out;
}

double FirstSampleBound(double beta, std::size_t d, double delta) {
  const double dd = static_cast<double>(d);
  const double l4 = std::log(4.0 * dd / delta);
  return (3.0 * beta * beta * l4 * dd + 4.0 * std::sqrt(dd) * beta * l4) / 6.0;
}

double EstimationErrorBound(double b_star, double curvature, double beta,
                            std::size_t d, double delta, double m) {
  if (!(curvature > 0.0)) return kInf;
  return CurvaturePrefactor(b_star) / curvature *
         std::sqrt(FirstSampleBound(beta, d, delta) / m);
}

double TheoryReport::ErrorBound(double m) const {
  if (!b_star) {
    throw PreconditionError("error bound needs b*, i.e. a known w*");
  }
  if (!identifiable) return kInf;
  return EstimationErrorBound(*b_star, lambda, beta, d, delta, m);
}

TheoryReport Theorem1Report(const FeatureMatrix& u,
                            const RealizedSelection& sel,
                            const std::optional<Vector>& w_star, double delta) {
  CheckDelta(delta);
  TheoryReport r;
  r.d = u.dim();
  r.n = u.num_items();
  r.delta = delta;

  const Matrix x = MaskedDifferenceMatrix(u, sel);
  const Matrix ez = ExpectedOuterProduct(x);
  const double num_pairs = static_cast<double>(x.rows());
  const auto d = static_cast<Eigen::Index>(r.d);

  r.lambda = MinEigenvalue(ez);
  r.lambda_tol = 1e-10 * ez.trace() / static_cast<double>(r.d);

  Matrix second_moment = Matrix::Zero(d, d);
  double zeta = -kInf;
  for (Eigen::Index p = 0; p < x.rows(); ++p) {
    const Vector xp = x.row(p).transpose();
    const Matrix centered = ez - xp * xp.transpose();
    // (Z - EZ)^2 == (EZ - Z)^2
    second_moment.noalias() += centered * centered;
    zeta = std::max(zeta, MaxEigenvalue(centered));
  }
  second_moment /= num_pairs;
  r.eta = MaxEigenvalue(second_moment);
  r.zeta = zeta;
  r.beta = x.cwiseAbs().maxCoeff();
  if (w_star) {
    CheckJudgmentVector(*w_star, r.d);
    r.b_star = MaxAbsGap(x, *w_star);
  }

  r.rank = Identifiability(u, sel).rank;
  r.identifiable = r.lambda > r.lambda_tol;
  r.m1 = FirstSampleBound(r.beta, r.d, delta);
  if (r.identifiable) {
    const double l2 = std::log(2.0 * static_cast<double>(r.d) / delta);
    r.m2 = 8.0 * l2 * (6.0 * r.eta + r.lambda * r.zeta) /
           (3.0 * r.lambda * r.lambda);
  } else {
    r.m2 = kInf;
  }
  return r;
}

double Corollary1Report::ErrorBound(double m) const {
  if (!b_star) {
    throw PreconditionError("error bound needs b*, i.e. a known w*");
  }
  const double curvature = static_cast<double>(n) * lambda_min_uut /
                           static_cast<double>(NumPairs(n));
  return EstimationErrorBound(*b_star, curvature, beta, d, delta, m);
}

Corollary1Report Corollary1(const FeatureMatrix& u,
                            const std::optional<Vector>& w_star, double delta) {
  CheckDelta(delta);
  if (u.num_items() <= u.dim()) {
    throw PreconditionError("Corollary1: needs n > d");
  }
  const FeatureMatrix centered = CenterColumns(u);
  const RealizedSelection full(SelectionSpec::Full(), centered);
  const Matrix x = MaskedDifferenceMatrix(centered, full);

  Corollary1Report r;
  r.d = u.dim();
  r.n = u.num_items();
  r.delta = delta;
  const double n = static_cast<double>(r.n);
  const double pairs = static_cast<double>(NumPairs(r.n));

  const Vector ev =
      SymmetricEigenvalues(centered.matrix() * centered.matrix().transpose());
  r.lambda_min_uut = ev(0);
  r.lambda_max_uut = ev(ev.size() - 1);
  r.nu = std::max(x.rowwise().squaredNorm().maxCoeff(), 1.0);
  r.lambda_closed = n * r.lambda_min_uut / pairs;
  r.zeta_upper = r.nu + n * r.lambda_max_uut / pairs;
  r.eta_upper = r.nu * n * r.lambda_max_uut / pairs +
                n * n * r.lambda_max_uut * r.lambda_max_uut / (pairs * pairs);
  r.beta = x.cwiseAbs().maxCoeff();
  r.m1 = FirstSampleBound(r.beta, r.d, delta);

  const double l2 = std::log(2.0 * static_cast<double>(r.d) / delta);
  const double lmin = r.lambda_min_uut;
  if (lmin > 0.0) {
    r.m_lower = 48.0 * l2 * pairs * pairs / (3.0 * n * n * lmin * lmin) *
                     r.eta_upper +
                 8.0 * l2 * pairs / (3.0 * n * lmin) * r.zeta_upper;
  } else {
    r.m_lower = kInf;
  }
  if (w_star) {
    CheckJudgmentVector(*w_star, r.d);
    r.b_star = MaxAbsGap(x, *w_star);
  }
  return r;
}

double Corollary2Report::ErrorBound(double m) const {
  if (!b_star) {
    throw PreconditionError("error bound needs b*, i.e. a known w*");
  }
  return EstimationErrorBound(*b_star, lambda_lower, beta, d, delta, m);
}

Corollary2Report Corollary2(const FeatureMatrix& u,
                            const RealizedSelection& sel,
                            const std::optional<Vector>& w_star, double delta) {
  CheckDelta(delta);
  const auto parts = PartitionByCoordinate(sel);
  const Matrix x = MaskedDifferenceMatrix(u, sel);

  Corollary2Report r;
  r.d = u.dim();
  r.n = u.num_items();
  r.delta = delta;
  const double pairs = static_cast<double>(NumPairs(r.n));

  std::size_t min_part = parts.front().size();
  std::size_t max_part = 0;
  for (const auto& part : parts) {
    r.partition_sizes.push_back(part.size());
    min_part = std::min(min_part, part.size());
    max_part = std::max(max_part, part.size());
  }
  r.all_coordinates_used = min_part > 0;
  const double pmin = static_cast<double>(min_part);
  const double pmax = static_cast<double>(max_part);

  const Vector row_inf = x.cwiseAbs().rowwise().maxCoeff();
  r.epsilon = row_inf.minCoeff();
  r.beta = row_inf.maxCoeff();
  const double b2 = r.beta * r.beta;
  const double e2 = r.epsilon * r.epsilon;

  r.lambda_lower = e2 * pmin / pairs;
  r.zeta_upper = b2 + b2 * pmax / pairs;
  // |P_k| + |P_k|^2 / C(n,2) is increasing in |P_k|.
  r.eta_upper = b2 * b2 / pairs * (pmax + pmax * pmax / pairs);
  r.m1 = FirstSampleBound(r.beta, r.d, delta);

  const double l2 = std::log(2.0 * static_cast<double>(r.d) / delta);
  if (min_part > 0 && r.epsilon > 0.0) {
    r.m3 = 48.0 * l2 * b2 * b2 * (pairs * pmax + pmax * pmax) /
               (3.0 * e2 * e2 * pmin * pmin) +
           8.0 * l2 * b2 * (pairs + pmax) / (3.0 * e2 * pmin);
  } else {
    r.m3 = kInf;
  }
  if (w_star) {
    CheckJudgmentVector(*w_star, r.d);
    r.b_star = MaxAbsGap(x, *w_star);
  }
  return r;
}

Corollary3Report Corollary3(const FeatureMatrix& u, const Vector& w_star,
                            const TheoryReport& theorem, std::size_t k,
                            double c5) {
  const std::size_t pairs = NumPairs(u.num_items());
  if (k < 1 || k > pairs) {
    throw PreconditionError("Corollary3: k must lie in [1, C(n,2)]");
  }
  if (!theorem.b_star) {
    throw PreconditionError("Corollary3: theorem report lacks b*");
  }
  AlphaGaps gaps = ComputeAlphaGaps(u, w_star);

  Corollary3Report r;
  r.alpha = std::move(gaps.gaps);
  r.max_item_norm = gaps.max_item_norm;
  r.k = k;
  r.alpha_k = r.alpha[k - 1];
  r.c5 = c5;
  r.m1 = theorem.m1;
  r.m2 = theorem.m2;
  r.predicted_max_kendall = k - 1;

  const double d = static_cast<double>(theorem.d);
  const double beta = theorem.beta;
  if (r.alpha_k > 0.0 && theorem.identifiable) {
    r.m_rank = c5 * r.max_item_norm * r.max_item_norm *
               std::exp(2.0 * *theorem.b_star) *
               (beta * beta * d + beta * std::sqrt(d)) *
               std::log(4.0 * d / theorem.delta) /
               (r.alpha_k * r.alpha_k * theorem.lambda * theorem.lambda);
  } else {
    r.m_rank = kInf;
  }
  return r;
}

GuaranteeCheck EmpiricalGuaranteeCheck(const FeatureMatrix& u,
                                       const Vector& w_star,
                                       const RealizedSelection& sel,
                                       std::size_t m, double delta,
                                       std::size_t trials, std::uint64_t seed) {
  const TheoryReport theory = Theorem1Report(u, sel, w_star, delta);
  if (!theory.identifiable) {
    throw PreconditionError(
        "EmpiricalGuaranteeCheck: instance is not identifiable");
  }
  GuaranteeCheck out;
  out.required_m = theory.RequiredSamples();
  out.applicable = static_cast<double>(m) >= out.required_m;
  if (!out.applicable) return out;

  out.bound = theory.ErrorBound(static_cast<double>(m));
  out.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const ComparisonDataset data = SampleComparisons(
        u, w_star, sel, m, DeriveSeed(seed, {streams::kTrial, t}));
    const FitResult fit = Fit(u, sel, data);
    const double err = (fit.w_hat - w_star).norm();
    out.errors.push_back(err);
    if (err <= out.bound) ++out.passes;
  }
  out.pass_rate = trials == 0 ? 0.0
                              : static_cast<double>(out.passes) /
                                    static_cast<double>(trials);
  return out;
}

}  // namespace salient
