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

#include "salient/selection.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "salient/errors.h"
#include "salient/rng.h"

namespace salient {
namespace {

FeatureSubset RandomExactlyK(std::size_t d, std::size_t k, std::uint64_t seed,
                             std::size_t i, std::size_t j) {
  Rng rng(DeriveSeed(seed, {i, j, 0}));
  std::vector<std::size_t> coords(d);
  std::iota(coords.begin(), coords.end(), std::size_t{0});
  // Partial Fisher-Yates: the first k slots end up a uniform k-subset.
  for (std::size_t s = 0; s < k; ++s) {
    std::uniform_int_distribution<std::size_t> pick(s, d - 1);
    std::swap(coords[s], coords[pick(rng)]);
  }
  coords.resize(k);
  return FeatureSubset(std::move(coords), d);
}

FeatureSubset RandomBernoulli(std::size_t d, double p, std::uint64_t seed,
                              std::size_t i, std::size_t j) {
  std::vector<std::size_t> coords;
  for (std::uint64_t redraw = 0;; ++redraw) {
    Rng rng(DeriveSeed(seed, {i, j, redraw}));
    std::bernoulli_distribution keep(p);
    coords.clear();
    for (std::size_t k = 0; k < d; ++k) {
      if (keep(rng)) coords.push_back(k);
    }
    if (!coords.empty()) break;
  }
  return FeatureSubset(std::move(coords), d);
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> AllPairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(NumPairs(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

void SelectionSpec::Validate(std::size_t d) const {
  switch (kind) {
    case Kind::kFull:
      return;
    case Kind::kTopT:
    case Kind::kRandomExactlyK:
      if (count < 1 || count > d) {
        throw PreconditionError(KindName(kind) + ": parameter " +
                                std::to_string(count) +
                                " outside [1, d=" + std::to_string(d) + "]");
      }
      return;
    case Kind::kRandomBernoulli:
      if (!(p > 0.0 && p <= 1.0)) {
        throw PreconditionError("random_bernoulli: p must lie in (0, 1]");
      }
      return;
  }
}

std::string KindName(SelectionSpec::Kind kind) {
  switch (kind) {
    case SelectionSpec::Kind::kFull:
      return "full";
    case SelectionSpec::Kind::kTopT:
      return "top_t";
    case SelectionSpec::Kind::kRandomExactlyK:
      return "random_exactly_k";
    case SelectionSpec::Kind::kRandomBernoulli:
      return "random_bernoulli";
  }
  return "unknown";
}

FeatureSubset TopTSubset(const Vector& a, const Vector& b, std::size_t t) {
  const std::size_t d = static_cast<std::size_t>(a.size());
  if (static_cast<std::size_t>(b.size()) != d) {
    throw DimensionError("TopTSubset: vectors differ in length");
  }
  if (t < 1 || t > d) throw PreconditionError("TopTSubset: t outside [1, d]");
  // Ranking by the two-point variance (a-b)^2/4 is ranking by |a-b|.
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const auto xi = static_cast<Eigen::Index>(x);
    const auto yi = static_cast<Eigen::Index>(y);
    return std::abs(a(xi) - b(xi)) > std::abs(a(yi) - b(yi));
  });
  order.resize(t);
  return FeatureSubset(std::move(order), d);
}

RealizedSelection::RealizedSelection(SelectionSpec spec, const FeatureMatrix& u)
    : spec_(spec), d_(u.dim()), n_(u.num_items()) {
  spec_.Validate(d_);
  table_.reserve(NumPairs(n_));
  const FeatureSubset full = FeatureSubset::Full(d_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      switch (spec_.kind) {
        case SelectionSpec::Kind::kFull:
          table_.push_back(full);
          break;
        case SelectionSpec::Kind::kTopT:
          table_.push_back(TopTSubset(u.item(i), u.item(j), spec_.count));
          break;
        case SelectionSpec::Kind::kRandomExactlyK:
          table_.push_back(RandomExactlyK(d_, spec_.count, spec_.seed, i, j));
          break;
        case SelectionSpec::Kind::kRandomBernoulli:
          table_.push_back(RandomBernoulli(d_, spec_.p, spec_.seed, i, j));
          break;
      }
    }
  }
}

const FeatureSubset& RealizedSelection::Select(std::size_t i,
                                               std::size_t j) const {
  if (i == j) {
    throw InvalidPairError("item " + std::to_string(i) +
                           " compared with itself");
  }
  if (i >= n_ || j >= n_) {
    throw DimensionError("item index out of range for n=" + std::to_string(n_));
  }
  if (i > j) std::swap(i, j);
  return table_[PairIndex(i, j, n_)];
}

bool RealizedSelection::IsFull() const {
  return std::all_of(table_.begin(), table_.end(),
                     [this](const FeatureSubset& s) { return s.size() == d_; });
}

bool RealizedSelection::AllSingletons() const {
  return std::all_of(table_.begin(), table_.end(),
                     [](const FeatureSubset& s) { return s.size() == 1; });
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>>
PartitionByCoordinate(const RealizedSelection& sel) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> parts(
      sel.dim());
  const std::size_t n = sel.num_items();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const FeatureSubset& s = sel.ByPairIndex(PairIndex(i, j, n));
      if (s.size() != 1) {
        throw PreconditionError(
            "PartitionByCoordinate: pair (" + std::to_string(i) + ", " +
            std::to_string(j) + ") uses " + std::to_string(s.size()) +
            " coordinates, expected 1");
      }
      parts[s.indices().front()].emplace_back(i, j);
    }
  }
  return parts;
}

}  // namespace salient
