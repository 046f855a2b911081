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

#include "salient/model.h"

#include <algorithm>
#include <map>
#include <random>
#include <utility>

#include "salient/errors.h"
#include "salient/rng.h"

namespace salient {
namespace {

void CheckCompatible(const FeatureMatrix& u, const RealizedSelection& sel) {
  if (sel.dim() != u.dim() || sel.num_items() != u.num_items()) {
    throw DimensionError("selection was realized for a different matrix");
  }
}

}  // namespace

ComparisonSample ComparisonSample::FromOutcome(std::size_t winner,
                                               std::size_t loser) {
  if (winner == loser) {
    throw InvalidPairError("item " + std::to_string(winner) +
                           " compared with itself");
  }
  if (winner < loser) return {winner, loser, 1};
  return {loser, winner, 0};
}

Vector MaskedDifference(const FeatureMatrix& u, const RealizedSelection& sel,
                        std::size_t i, std::size_t j) {
  CheckCompatible(u, sel);
  const FeatureSubset& s = sel.Select(i, j);
  Vector out = Vector::Zero(static_cast<Eigen::Index>(u.dim()));
  for (std::size_t k : s.indices()) {
    const auto kk = static_cast<Eigen::Index>(k);
    out(kk) = u.matrix()(kk, static_cast<Eigen::Index>(i)) -
              u.matrix()(kk, static_cast<Eigen::Index>(j));
  }
  return out;
}

double MaskedUtilityGap(const FeatureMatrix& u, const Vector& w,
                        const RealizedSelection& sel, std::size_t i,
                        std::size_t j) {
  CheckCompatible(u, sel);
  CheckJudgmentVector(w, u.dim());
  const FeatureSubset& s = sel.Select(i, j);
  double gap = 0.0;
  for (std::size_t k : s.indices()) {
    const auto kk = static_cast<Eigen::Index>(k);
    gap += w(kk) * (u.matrix()(kk, static_cast<Eigen::Index>(i)) -
                    u.matrix()(kk, static_cast<Eigen::Index>(j)));
  }
  return gap;
}

double ProbBeats(const FeatureMatrix& u, const Vector& w,
                 const RealizedSelection& sel, std::size_t i, std::size_t j) {
  return Logistic(MaskedUtilityGap(u, w, sel, i, j));
}

ComparisonDataset SampleComparisons(const FeatureMatrix& u,
                                    const Vector& w_star,
                                    const RealizedSelection& sel,
                                    std::size_t m, std::uint64_t seed) {
  CheckCompatible(u, sel);
  CheckJudgmentVector(w_star, u.dim());
  const std::size_t n = u.num_items();
  if (n < 2) throw PreconditionError("SampleComparisons: need n >= 2 items");
  if (m < 1) throw PreconditionError("SampleComparisons: need m >= 1");

  const auto pairs = AllPairs(n);
  std::vector<double> prob(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    prob[p] = ProbBeats(u, w_star, sel, pairs[p].first, pairs[p].second);
  }

  Rng rng(DeriveSeed(seed, {streams::kComparisons}));
  std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ComparisonDataset data;
  data.provenance = {Provenance::Kind::kSynthetic, seed, {}};
  data.samples.reserve(m);
  for (std::size_t l = 0; l < m; ++l) {
    const std::size_t p = pick(rng);
    const int y = unit(rng) < prob[p] ? 1 : 0;
    data.samples.push_back({pairs[p].first, pairs[p].second, y});
  }
  return data;
}

Objective::Objective(const FeatureMatrix& u, const RealizedSelection& sel,
                     const ComparisonDataset& data, double mu)
    : d_(u.dim()), m_(data.size()), mu_(mu) {
  CheckCompatible(u, sel);
  if (!(mu >= 0.0)) throw PreconditionError("mu must be nonnegative");
  const std::size_t n = u.num_items();
  // (count, wins) per canonical pair, in pair order.
  std::map<std::pair<std::size_t, std::size_t>, std::pair<double, double>> agg;
  for (const auto& s : data.samples) {
    if (s.i >= s.j || s.j >= n) {
      throw DimensionError("sample (" + std::to_string(s.i) + ", " +
                           std::to_string(s.j) +
                           ") is not a canonical pair of this matrix");
    }
    auto& [count, wins] = agg[{s.i, s.j}];
    count += 1.0;
    wins += s.y != 0 ? 1.0 : 0.0;
  }
  terms_.reserve(agg.size());
  for (const auto& [pair, cw] : agg) {
    const FeatureSubset& sub = sel.Select(pair.first, pair.second);
    PairTerm t{coords_.size(), 0, cw.first, cw.second};
    for (std::size_t k : sub.indices()) {
      const auto kk = static_cast<Eigen::Index>(k);
      const double diff =
          u.matrix()(kk, static_cast<Eigen::Index>(pair.first)) -
          u.matrix()(kk, static_cast<Eigen::Index>(pair.second));
      if (diff == 0.0) continue;
      coords_.push_back(kk);
      diffs_.push_back(diff);
      ++t.len;
    }
    terms_.push_back(t);
  }
}

double Objective::Gap(const PairTerm& t, const Vector& w) const {
  double gap = 0.0;
  for (std::size_t q = t.offset; q < t.offset + t.len; ++q) {
    gap += w(coords_[q]) * diffs_[q];
  }
  return gap;
}

double Objective::Value(const Vector& w) const {
  CheckJudgmentVector(w, d_);
  double total = 0.0;
  for (const PairTerm& t : terms_) {
    const double gap = Gap(t, w);
    // softplus(u) - u == softplus(-u); this form keeps tiny losses exact.
    total += t.wins * Softplus(-gap) + (t.count - t.wins) * Softplus(gap);
  }
  return total + mu_ * w.squaredNorm();
}

Vector Objective::Gradient(const Vector& w) const {
  CheckJudgmentVector(w, d_);
  Vector g = 2.0 * mu_ * w;
  for (const PairTerm& t : terms_) {
    const double gap = Gap(t, w);
    const double coef =
        (t.count - t.wins) * Logistic(gap) - t.wins * Logistic(-gap);
    for (std::size_t q = t.offset; q < t.offset + t.len; ++q) {
      g(coords_[q]) += coef * diffs_[q];
    }
  }
  return g;
}

Matrix Objective::Hessian(const Vector& w) const {
  CheckJudgmentVector(w, d_);
  const auto d = static_cast<Eigen::Index>(d_);
  Matrix h = Matrix::Zero(d, d);
  for (const PairTerm& t : terms_) {
    const double coef = t.count * HessianWeight(Gap(t, w));
    for (std::size_t a = t.offset; a < t.offset + t.len; ++a) {
      for (std::size_t b = a; b < t.offset + t.len; ++b) {
        h(coords_[a], coords_[b]) += coef * diffs_[a] * diffs_[b];
      }
    }
  }
  // Subset coordinates are sorted, so only the upper triangle was filled.
  Matrix full = h.selfadjointView<Eigen::Upper>();
  h = std::move(full);
  h.diagonal().array() += 2.0 * mu_;
  return h;
}

double Nll(const FeatureMatrix& u, const Vector& w,
           const RealizedSelection& sel, const ComparisonDataset& data,
           double mu) {
  return Objective(u, sel, data, mu).Value(w);
}

Vector NllGradient(const FeatureMatrix& u, const Vector& w,
                   const RealizedSelection& sel, const ComparisonDataset& data,
                   double mu) {
  return Objective(u, sel, data, mu).Gradient(w);
}

Matrix NllHessian(const FeatureMatrix& u, const Vector& w,
                  const RealizedSelection& sel, const ComparisonDataset& data,
                  double mu) {
  return Objective(u, sel, data, mu).Hessian(w);
}

}  // namespace salient
