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

// The salient feature preference model.
//
// Item i beats item j with probability
//
//   P(i > j) = logistic(<w, mask(U_i - U_j, tau(i, j))>),
//
// and the negative log-likelihood of m observed comparisons is
//
//   L(w) = sum_l softplus(u_l) - y_l * u_l  (+ mu * |w|^2),
//
// with u_l the masked inner product of sample l. L is convex in w.

#ifndef SALIENT_MODEL_H_
#define SALIENT_MODEL_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "salient/features.h"
#include "salient/selection.h"

namespace salient {

// One comparison, stored with i < j; y == 1 iff item i won.
struct ComparisonSample {
  std::size_t i = 0;
  std::size_t j = 0;
  int y = 0;

  // Canonicalizes "winner beat loser" into (min, max, y).
  static ComparisonSample FromOutcome(std::size_t winner, std::size_t loser);

  friend bool operator==(const ComparisonSample&,
                         const ComparisonSample&) = default;
};

struct Provenance {
  enum class Kind { kSynthetic, kFile };
  Kind kind = Kind::kSynthetic;
  std::uint64_t seed = 0;
  std::string path;
};

struct ComparisonDataset {
  std::vector<ComparisonSample> samples;
  Provenance provenance;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
};

inline double Logistic(double u) {
  if (u >= 0.0) return 1.0 / (1.0 + std::exp(-u));
  const double e = std::exp(u);
  return e / (1.0 + e);
}

// log(1 + e^u) without overflow.
inline double Softplus(double u) {
  return std::max(u, 0.0) + std::log1p(std::exp(-std::abs(u)));
}

// h(u) = e^u / (1 + e^u)^2 = logistic(u) * logistic(-u); symmetric, at most
// 1/4 and nonincreasing in |u|.
inline double HessianWeight(double u) {
  const double e = std::exp(-std::abs(u));
  return e / ((1.0 + e) * (1.0 + e));
}

// mask(U_i - U_j, tau(i, j)). Sign follows the argument order.
Vector MaskedDifference(const FeatureMatrix& u, const RealizedSelection& sel,
                        std::size_t i, std::size_t j);

// <w, mask(U_i - U_j, tau(i, j))>.
double MaskedUtilityGap(const FeatureMatrix& u, const Vector& w,
                        const RealizedSelection& sel, std::size_t i,
                        std::size_t j);

// P(item i beats item j). Throws InvalidPairError when i == j.
double ProbBeats(const FeatureMatrix& u, const Vector& w,
                 const RealizedSelection& sel, std::size_t i, std::size_t j);

// m i.i.d. comparisons: a pair drawn uniformly from all C(n, 2) pairs, the
// outcome drawn from ProbBeats under w_star. Deterministic given `seed`.
ComparisonDataset SampleComparisons(const FeatureMatrix& u,
                                    const Vector& w_star,
                                    const RealizedSelection& sel,
                                    std::size_t m, std::uint64_t seed);

// The regularized negative log-likelihood of a fixed dataset. Repeated
// observations of a pair are folded into (count, wins), so evaluation costs
// O(unique pairs * |tau|) regardless of m. Immutable once built.
class Objective {
 public:
  Objective(const FeatureMatrix& u, const RealizedSelection& sel,
            const ComparisonDataset& data, double mu);

  std::size_t dim() const { return d_; }
  std::size_t num_samples() const { return m_; }
  double mu() const { return mu_; }

  double Value(const Vector& w) const;
  Vector Gradient(const Vector& w) const;
  Matrix Hessian(const Vector& w) const;

 private:
  struct PairTerm {
    std::size_t offset;  // into coords_ / diffs_
    std::size_t len;
    double count;
    double wins;
  };

  double Gap(const PairTerm& t, const Vector& w) const;

  std::size_t d_;
  std::size_t m_;
  double mu_;
  std::vector<PairTerm> terms_;
  std::vector<Eigen::Index> coords_;
  std::vector<double> diffs_;
};

double Nll(const FeatureMatrix& u, const Vector& w,
           const RealizedSelection& sel, const ComparisonDataset& data,
           double mu);
Vector NllGradient(const FeatureMatrix& u, const Vector& w,
                   const RealizedSelection& sel, const ComparisonDataset& data,
                   double mu);
Matrix NllHessian(const FeatureMatrix& u, const Vector& w,
                  const RealizedSelection& sel, const ComparisonDataset& data,
                  double mu);

}  // namespace salient

#endif  // SALIENT_MODEL_H_
