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

#include "salient/ranking.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "salient/errors.h"

namespace salient {

Ranking::Ranking(std::vector<std::size_t> order) : order_(std::move(order)) {
  const std::size_t max_item =
      order_.empty() ? 0 : *std::max_element(order_.begin(), order_.end());
  position_.assign(order_.empty() ? 0 : max_item + 1, 0);
  for (std::size_t r = 0; r < order_.size(); ++r) {
    if (position_[order_[r]] != 0) {
      throw PreconditionError("Ranking: item " + std::to_string(order_[r]) +
                              " ranked twice");
    }
    position_[order_[r]] = r + 1;
  }
}

Ranking Ranking::FromPositions(const std::vector<std::size_t>& positions) {
  const std::size_t n = positions.size();
  std::vector<std::size_t> order(n, n);
  for (std::size_t item = 0; item < n; ++item) {
    const std::size_t pos = positions[item];
    if (pos < 1 || pos > n || order[pos - 1] != n) {
      throw PreconditionError("Ranking: positions are not a permutation of 1.." +
                              std::to_string(n));
    }
    order[pos - 1] = item;
  }
  return Ranking(std::move(order));
}

std::size_t Ranking::PositionOf(std::size_t item) const {
  return item < position_.size() ? position_[item] : 0;
}

Ranking Ranking::RestrictTo(const std::vector<std::size_t>& items) const {
  std::vector<std::size_t> kept;
  for (std::size_t item : items) {
    if (PositionOf(item) != 0) kept.push_back(item);
  }
  std::sort(kept.begin(), kept.end(), [this](std::size_t a, std::size_t b) {
    return PositionOf(a) < PositionOf(b);
  });
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return Ranking(std::move(kept));
}

Ranking RankFromWeights(const FeatureMatrix& u, const Vector& w) {
  CheckJudgmentVector(w, u.dim());
  const Vector utility = u.matrix().transpose() * w;
  std::vector<std::size_t> order(u.num_items());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&utility](std::size_t a, std::size_t b) {
                     return utility(static_cast<Eigen::Index>(a)) >
                            utility(static_cast<Eigen::Index>(b));
                   });
  return Ranking(std::move(order));
}

std::uint64_t KendallDistance(const Ranking& a, const Ranking& b) {
  if (a.size() != b.size()) {
    throw PreconditionError("KendallDistance: rankings differ in size");
  }
  for (std::size_t item : a.order()) {
    if (b.PositionOf(item) == 0) {
      throw PreconditionError("KendallDistance: rankings cover different items");
    }
  }
  // Positions under b, listed in a's order; discordant pairs are inversions.
  // O(n^2) is plenty for the item counts this library targets.
  std::vector<std::size_t> seq;
  seq.reserve(a.size());
  for (std::size_t item : a.order()) seq.push_back(b.PositionOf(item));
  std::uint64_t inversions = 0;
  for (std::size_t x = 0; x < seq.size(); ++x) {
    for (std::size_t y = x + 1; y < seq.size(); ++y) {
      if (seq[x] > seq[y]) ++inversions;
    }
  }
  return inversions;
}

double KendallCorrelation(const Ranking& a, const Ranking& b) {
  if (a.size() < 2) {
    throw PreconditionError("KendallCorrelation: need at least two items");
  }
  const double k = static_cast<double>(KendallDistance(a, b));
  return 1.0 - 2.0 * k / static_cast<double>(NumPairs(a.size()));
}

double PairwiseAccuracy(const FeatureMatrix& u, const Vector& w,
                        const RealizedSelection& sel,
                        const ComparisonDataset& data) {
  std::map<std::pair<std::size_t, std::size_t>, std::pair<long, long>> counts;
  for (const auto& s : data.samples) {
    auto& [wins_i, wins_j] = counts[{s.i, s.j}];
    (s.y != 0 ? wins_i : wins_j) += 1;
  }
  long eligible = 0;
  long agree = 0;
  for (const auto& [pair, c] : counts) {
    if (c.first == c.second) continue;
    const double p = ProbBeats(u, w, sel, pair.first, pair.second);
    if (p == 0.5) continue;
    ++eligible;
    if ((c.first > c.second) == (p > 0.5)) ++agree;
  }
  if (eligible == 0) {
    throw UndefinedMetricError(
        "PairwiseAccuracy: no pair with a strict majority and a decided model");
  }
  return static_cast<double>(agree) / static_cast<double>(eligible);
}

AlphaGaps ComputeAlphaGaps(const FeatureMatrix& u, const Vector& w_star) {
  CheckJudgmentVector(w_star, u.dim());
  const Vector utility = u.matrix().transpose() * w_star;
  const std::size_t n = u.num_items();
  AlphaGaps out;
  out.gaps.reserve(NumPairs(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.gaps.push_back(std::abs(utility(static_cast<Eigen::Index>(i)) -
                                  utility(static_cast<Eigen::Index>(j))));
    }
  }
  std::sort(out.gaps.begin(), out.gaps.end());
  out.max_item_norm = u.matrix().colwise().norm().maxCoeff();
  return out;
}

}  // namespace salient
