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

// Identifiability and sample-complexity certificates.
//
// With x_(i,j) = mask(U_i - U_j, tau(i, j)) and Z = x x^T, and expectations
// taken over a uniformly random pair (exact averages over all C(n, 2) pairs):
//
//   lambda = lambda_min(E Z)
//   eta    = sigma_max(E (Z - E Z)^2)      (= lambda_max, the matrix is PSD)
//   zeta   = max_pairs lambda_max(E Z - Z_pair)
//   beta   = max_pairs |x|_inf
//   b*     = max_pairs |<w*, x>|
//
// For delta in (0, 1), with L4 = log(4d/delta) and L2 = log(2d/delta):
//
//   m1 = (3 beta^2 L4 d + 4 sqrt(d) beta L4) / 6
//   m2 = 8 L2 (6 eta + lambda zeta) / (3 lambda^2)
//   error_bound(m) = 4 (1 + e^b*)^2 / (e^b* lambda) * sqrt(m1 / m)
//
// and when m >= max(m1, m2), |w_hat - w*|_2 <= error_bound(m) holds with
// probability at least 1 - delta.

#ifndef SALIENT_THEORY_H_
#define SALIENT_THEORY_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "salient/features.h"
#include "salient/selection.h"

namespace salient {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Rows are the masked differences of all pairs, in PairIndex order.
Matrix MaskedDifferenceMatrix(const FeatureMatrix& u,
                              const RealizedSelection& sel);

// E Z as an exact average over all pairs.
Matrix ExpectedOuterProduct(const Matrix& diffs);

struct IdentifiabilityResult {
  bool identifiable = false;
  // Numerical rank of the masked-difference matrix: singular values above
  // 1e-10 * sigma_max.
  std::size_t rank = 0;
};

// The model is identifiable iff the masked differences span R^d.
IdentifiabilityResult Identifiability(const FeatureMatrix& u,
                                      const RealizedSelection& sel);

// m1 of the sample bound; depends only on beta, d and delta.
double FirstSampleBound(double beta, std::size_t d, double delta);

// 4 (1 + e^b)^2 / (e^b * curvature) * sqrt(m1 / m). `curvature` is
// lambda, or whichever lower bound on it a specialized report supplies.
double EstimationErrorBound(double b_star, double curvature, double beta,
                            std::size_t d, double delta, double m);

struct TheoryReport {
  std::size_t d = 0;
  std::size_t n = 0;
  double delta = 0.05;

  double lambda = 0.0;
  double eta = 0.0;
  double zeta = 0.0;
  double beta = 0.0;
  std::optional<double> b_star;  // needs w*
  bool identifiable = false;
  std::size_t rank = 0;
  // lambda is treated as zero at or below this value.
  double lambda_tol = 0.0;

  double m1 = 0.0;
  double m2 = kInf;  // infinite when not identifiable

  double RequiredSamples() const { return std::max(m1, m2); }
  // Infinite when not identifiable; PreconditionError when b* is unknown.
  double ErrorBound(double m) const;
};

// Throws PreconditionError unless delta is in (0, 1).
TheoryReport Theorem1Report(const FeatureMatrix& u,
                            const RealizedSelection& sel,
                            const std::optional<Vector>& w_star, double delta);

// Full-feature (FBTL) specialization. U is centered internally.
struct Corollary1Report {
  double nu = 1.0;  // max(max_pairs |U_i - U_j|^2, 1)
  double lambda_min_uut = 0.0;
  double lambda_max_uut = 0.0;
  double lambda_closed = 0.0;  // n lambda_min(U U^T) / C(n, 2)
  double zeta_upper = 0.0;
  double eta_upper = 0.0;
  double m1 = 0.0;
  double m_lower = 0.0;  // both displayed terms of the second sample bound
  double beta = 0.0;
  std::optional<double> b_star;
  std::size_t d = 0;
  std::size_t n = 0;
  double delta = 0.05;

  double RequiredSamples() const { return std::max(m1, m_lower); }
  double ErrorBound(double m) const;
};

// Throws PreconditionError unless n > d and delta in (0, 1).
Corollary1Report Corollary1(const FeatureMatrix& u,
                            const std::optional<Vector>& w_star, double delta);

// One-coordinate-per-pair specialization.
struct Corollary2Report {
  std::vector<std::size_t> partition_sizes;  // |P_k|
  double epsilon = 0.0;  // min_pairs |x|_inf
  double beta = 0.0;
  double lambda_lower = 0.0;
  double zeta_upper = 0.0;
  double eta_upper = 0.0;
  double m1 = 0.0;
  double m3 = kInf;
  bool all_coordinates_used = false;
  std::optional<double> b_star;
  std::size_t d = 0;
  std::size_t n = 0;
  double delta = 0.05;

  double RequiredSamples() const { return std::max(m1, m3); }
  double ErrorBound(double m) const;
};

// Throws PreconditionError when some subset is not a singleton.
Corollary2Report Corollary2(const FeatureMatrix& u,
                            const RealizedSelection& sel,
                            const std::optional<Vector>& w_star, double delta);

// Ranking specialization: with m >= max(m1, m2, m_rank), the Kendall distance
// between the true and estimated rankings is at most k - 1 w.p. 1 - delta.
struct Corollary3Report {
  std::vector<double> alpha;  // ascending full-feature utility gaps
  double max_item_norm = 0.0;  // M
  std::size_t k = 1;
  double alpha_k = 0.0;
  double c5 = 1.0;
  double m1 = 0.0;
  double m2 = kInf;
  double m_rank = kInf;  // infinite when alpha_k == 0 or lambda == 0
  std::size_t predicted_max_kendall = 0;  // k - 1

  double RequiredSamples() const { return std::max({m1, m2, m_rank}); }
};

// `theorem` must carry b*. C5 is the unspecified constant of the rank bound.
Corollary3Report Corollary3(const FeatureMatrix& u, const Vector& w_star,
                            const TheoryReport& theorem, std::size_t k,
                            double c5 = 1.0);

struct GuaranteeCheck {
  bool applicable = false;  // m >= max(m1, m2)
  std::size_t trials = 0;
  std::size_t passes = 0;
  double pass_rate = 0.0;
  double bound = kInf;
  double required_m = kInf;
  std::vector<double> errors;  // |w_hat - w*|_2 per trial
};

// Runs `trials` independent sample-and-fit rounds and counts how often the
// estimation error stays within the bound. Skipped (applicable == false)
// when m is below the required sample size. Throws PreconditionError on a
// non-identifiable instance.
GuaranteeCheck EmpiricalGuaranteeCheck(const FeatureMatrix& u,
                                       const Vector& w_star,
                                       const RealizedSelection& sel,
                                       std::size_t m, double delta,
                                       std::size_t trials, std::uint64_t seed);

}  // namespace salient

#endif  // SALIENT_THEORY_H_
