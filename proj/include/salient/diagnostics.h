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

// Intransitivity and inconsistency diagnostics for pairwise probabilities.
//
// Given P_ij > 1/2 and P_jk > 1/2, stochastic transitivity asks for
//   strong:   P_ik >= max(P_ij, P_jk)
//   moderate: P_ik >= min(P_ij, P_jk)
//   weak:     P_ik >= 1/2
// Violating weak implies violating moderate implies violating strong.

#ifndef SALIENT_DIAGNOSTICS_H_
#define SALIENT_DIAGNOSTICS_H_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "salient/features.h"
#include "salient/model.h"
#include "salient/ranking.h"
#include "salient/selection.h"

namespace salient {

using ItemPair = std::pair<std::size_t, std::size_t>;

// P(i beats j) keyed by canonical pair (i < j).
using PairProbabilities = std::map<ItemPair, double>;

struct PairCounts {
  long wins_i = 0;
  long wins_j = 0;

  long total() const { return wins_i + wins_j; }
  double p_hat() const {
    return static_cast<double>(wins_i) / static_cast<double>(total());
  }
};

using PairStats = std::map<ItemPair, PairCounts>;

PairStats EmpiricalPairStats(const ComparisonDataset& data);

// Empirical probabilities of the pairs observed at least `min_count` times.
PairProbabilities EmpiricalProbabilities(const PairStats& stats,
                                         long min_count = 1);

struct ViolatingTriple {
  // The checked chain: P_ij > 1/2, P_jk > 1/2.
  std::array<std::size_t, 3> chain;
  double p_ij = 0.0;
  double p_jk = 0.0;
  double p_ik = 0.0;
  bool strong = false;
  bool moderate = false;
  bool weak = false;
};

struct TransitivityReport {
  // Unordered triples with all three pairs present and a chain satisfying
  // the precondition. Each contributes once.
  std::size_t triples_checked = 0;
  std::size_t strong_violations = 0;
  std::size_t moderate_violations = 0;
  std::size_t weak_violations = 0;
  // Triples violating at least strong transitivity, in canonical order.
  std::vector<ViolatingTriple> violations;

  double Rate(std::size_t count) const {
    return triples_checked == 0
               ? 0.0
               : static_cast<double>(count) /
                     static_cast<double>(triples_checked);
  }
};

// Throws PreconditionError for a probability outside [0, 1] or a
// non-canonical key.
TransitivityReport CountTransitivityViolations(const PairProbabilities& p);

// Empirical variant; pairs seen fewer than `min_count` times are ignored.
TransitivityReport CountTransitivityViolations(const PairStats& stats,
                                               long min_count);

// Exact model probabilities for every pair.
PairProbabilities ModelProbabilities(const FeatureMatrix& u, const Vector& w,
                                     const RealizedSelection& sel);

TransitivityReport ModelTransitivityReport(const FeatureMatrix& u,
                                           const Vector& w,
                                           const RealizedSelection& sel);

struct InconsistencyResult {
  std::size_t inconsistent = 0;
  std::size_t compared = 0;  // pairs present in both sources
  double rate() const {
    return compared == 0 ? 0.0
                         : static_cast<double>(inconsistent) /
                               static_cast<double>(compared);
  }
};

// Pairs where (0.5 - p)(0.5 - q) < 0. Throws UndefinedMetricError when the two
// sources share no pair.
InconsistencyResult PairwiseInconsistency(const PairProbabilities& p,
                                          const PairProbabilities& reference);

// Reference probability is 1 if the ranking puts i above j, else 0. Pairs
// with an item missing from the ranking are skipped.
InconsistencyResult PairwiseInconsistency(const PairProbabilities& p,
                                          const Ranking& reference);

}  // namespace salient

#endif  // SALIENT_DIAGNOSTICS_H_
