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

#include "salient/diagnostics.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "salient/errors.h"

namespace salient {
namespace {

// Dense "x beats y" table over the items that appear in `p`; NaN = unknown.
class BeatTable {
 public:
  explicit BeatTable(const PairProbabilities& p) {
    for (const auto& [pair, prob] : p) {
      if (pair.first >= pair.second) {
        throw PreconditionError("pair keys must be canonical (i < j)");
      }
      if (!(prob >= 0.0 && prob <= 1.0)) {
        throw PreconditionError("probability outside [0, 1] for pair (" +
                                std::to_string(pair.first) + ", " +
                                std::to_string(pair.second) + ")");
      }
      items_.push_back(pair.first);
      items_.push_back(pair.second);
    }
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    const std::size_t k = items_.size();
    table_.assign(k * k, std::numeric_limits<double>::quiet_NaN());
    for (const auto& [pair, prob] : p) {
      const std::size_t a = Local(pair.first);
      const std::size_t b = Local(pair.second);
      table_[a * k + b] = prob;
      table_[b * k + a] = 1.0 - prob;
    }
  }

  std::size_t size() const { return items_.size(); }
  std::size_t item(std::size_t local) const { return items_[local]; }
  double beats(std::size_t a, std::size_t b) const {
    return table_[a * items_.size() + b];
  }

 private:
  std::size_t Local(std::size_t item) const {
    return static_cast<std::size_t>(
        std::lower_bound(items_.begin(), items_.end(), item) - items_.begin());
  }

  std::vector<std::size_t> items_;
  std::vector<double> table_;
};

}  // namespace

PairStats EmpiricalPairStats(const ComparisonDataset& data) {
  PairStats stats;
  for (const auto& s : data.samples) {
    const ComparisonSample c =
        s.i < s.j ? s : ComparisonSample{s.j, s.i, s.y != 0 ? 0 : 1};
    auto& counts = stats[{c.i, c.j}];
    (c.y != 0 ? counts.wins_i : counts.wins_j) += 1;
  }
  return stats;
}

PairProbabilities EmpiricalProbabilities(const PairStats& stats,
                                         long min_count) {
  PairProbabilities out;
  for (const auto& [pair, counts] : stats) {
    if (counts.total() > 0 && counts.total() >= min_count) {
      out.emplace(pair, counts.p_hat());
    }
  }
  return out;
}

TransitivityReport CountTransitivityViolations(const PairProbabilities& p) {
  const BeatTable t(p);
  const std::size_t k = t.size();
  TransitivityReport report;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (std::isnan(t.beats(a, b))) continue;
      for (std::size_t c = b + 1; c < k; ++c) {
        if (std::isnan(t.beats(a, c)) || std::isnan(t.beats(b, c))) continue;
        // At most one chain exists unless the triple is a 3-cycle, in which
        // case every chain violates all three levels; the first one found is
        // representative either way.
        std::array<std::size_t, 3> chain{a, b, c};
        bool found = false;
        do {
          if (t.beats(chain[0], chain[1]) > 0.5 &&
              t.beats(chain[1], chain[2]) > 0.5) {
            found = true;
            break;
          }
        } while (std::next_permutation(chain.begin(), chain.end()));
        if (!found) continue;

        ++report.triples_checked;
        ViolatingTriple v;
        v.chain = {t.item(chain[0]), t.item(chain[1]), t.item(chain[2])};
        v.p_ij = t.beats(chain[0], chain[1]);
        v.p_jk = t.beats(chain[1], chain[2]);
        v.p_ik = t.beats(chain[0], chain[2]);
        v.strong = v.p_ik < std::max(v.p_ij, v.p_jk);
        v.moderate = v.p_ik < std::min(v.p_ij, v.p_jk);
        v.weak = v.p_ik < 0.5;
        report.strong_violations += v.strong ? 1 : 0;
        report.moderate_violations += v.moderate ? 1 : 0;
        report.weak_violations += v.weak ? 1 : 0;
        if (v.strong) report.violations.push_back(v);
      }
    }
  }
  return report;
}

TransitivityReport CountTransitivityViolations(const PairStats& stats,
                                               long min_count) {
  return CountTransitivityViolations(EmpiricalProbabilities(stats, min_count));
}

PairProbabilities ModelProbabilities(const FeatureMatrix& u, const Vector& w,
                                     const RealizedSelection& sel) {
  PairProbabilities out;
  const std::size_t n = u.num_items();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.emplace_hint(out.end(), ItemPair{i, j}, ProbBeats(u, w, sel, i, j));
    }
  }
  return out;
}

TransitivityReport ModelTransitivityReport(const FeatureMatrix& u,
                                           const Vector& w,
                                           const RealizedSelection& sel) {
  if (u.num_items() < 3) {
    throw PreconditionError("ModelTransitivityReport: need n >= 3");
  }
  return CountTransitivityViolations(ModelProbabilities(u, w, sel));
}

InconsistencyResult PairwiseInconsistency(const PairProbabilities& p,
                                          const PairProbabilities& reference) {
  InconsistencyResult out;
  for (const auto& [pair, prob] : p) {
    auto it = reference.find(pair);
    if (it == reference.end()) continue;
    ++out.compared;
    if ((0.5 - prob) * (0.5 - it->second) < 0.0) ++out.inconsistent;
  }
  if (out.compared == 0) {
    throw UndefinedMetricError("PairwiseInconsistency: no overlapping pairs");
  }
  return out;
}

InconsistencyResult PairwiseInconsistency(const PairProbabilities& p,
                                          const Ranking& reference) {
  PairProbabilities ref;
  for (const auto& [pair, prob] : p) {
    const std::size_t pi = reference.PositionOf(pair.first);
    const std::size_t pj = reference.PositionOf(pair.second);
    if (pi == 0 || pj == 0) continue;
    ref.emplace(pair, pi < pj ? 1.0 : 0.0);
  }
  return PairwiseInconsistency(p, ref);
}

}  // namespace salient
