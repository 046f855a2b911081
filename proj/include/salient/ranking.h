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

// Rankings and ranking metrics.

#ifndef SALIENT_RANKING_H_
#define SALIENT_RANKING_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "salient/features.h"
#include "salient/model.h"
#include "salient/selection.h"

namespace salient {

// A strict ranking of a set of items. order()[0] is the best item. Items are
// indices into a FeatureMatrix; a ranking may cover only a subset of them.
class Ranking {
 public:
  Ranking() = default;
  // Throws PreconditionError on a repeated item.
  explicit Ranking(std::vector<std::size_t> order);

  // From 1-based positions: item i sits at position positions[i].
  // Throws PreconditionError unless positions is a permutation of 1..n.
  static Ranking FromPositions(const std::vector<std::size_t>& positions);

  const std::vector<std::size_t>& order() const { return order_; }
  std::size_t size() const { return order_.size(); }

  // 1-based position of `item`; 0 when the item is not ranked.
  std::size_t PositionOf(std::size_t item) const;

  // The relative order of `items` (those present) under this ranking.
  Ranking RestrictTo(const std::vector<std::size_t>& items) const;

  friend bool operator==(const Ranking&, const Ranking&) = default;

 private:
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;  // indexed by item, 0 = absent
};

// Items sorted by <w, U_i> descending; ties go to the lower item index.
Ranking RankFromWeights(const FeatureMatrix& u, const Vector& w);

// Number of item pairs ordered differently by the two rankings. Both must
// rank the same item set (PreconditionError otherwise).
std::uint64_t KendallDistance(const Ranking& a, const Ranking& b);

// 1 - 2 K / C(n, 2). Needs at least two items.
double KendallCorrelation(const Ranking& a, const Ranking& b);

// Over unique pairs with a strict empirical majority, the fraction where the
// model also favours the majority winner. Pairs where the model says exactly
// 1/2 are left out. Throws UndefinedMetricError when no pair is eligible.
double PairwiseAccuracy(const FeatureMatrix& u, const Vector& w,
                        const RealizedSelection& sel,
                        const ComparisonDataset& data);

struct AlphaGaps {
  // |<w*, U_i - U_j>| over all pairs, ascending.
  std::vector<double> gaps;
  // max_i |U_i|_2.
  double max_item_norm = 0.0;
};

AlphaGaps ComputeAlphaGaps(const FeatureMatrix& u, const Vector& w_star);

}  // namespace salient

#endif  // SALIENT_RANKING_H_
