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

#include "salient/features.h"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "salient/errors.h"

namespace salient {

FeatureMatrix::FeatureMatrix(Matrix columns, std::vector<std::string> item_ids)
    : u_(std::move(columns)), ids_(std::move(item_ids)) {
  if (u_.rows() < 1) throw DimensionError("FeatureMatrix: need d >= 1");
  if (u_.cols() < 2) throw DimensionError("FeatureMatrix: need n >= 2 items");
  if (!u_.allFinite()) {
    throw PreconditionError("FeatureMatrix: non-finite feature value");
  }
  if (ids_.empty()) {
    ids_.reserve(static_cast<std::size_t>(u_.cols()));
    for (Eigen::Index j = 0; j < u_.cols(); ++j) {
      ids_.push_back(std::to_string(j));
    }
  }
  if (ids_.size() != static_cast<std::size_t>(u_.cols())) {
    throw DimensionError("FeatureMatrix: item_ids length differs from n");
  }
  std::unordered_set<std::string> seen;
  for (const auto& id : ids_) {
    if (!seen.insert(id).second) {
      throw PreconditionError("FeatureMatrix: duplicate item id '" + id + "'");
    }
  }
}

std::ptrdiff_t FeatureMatrix::IndexOf(const std::string& id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  return it == ids_.end() ? -1 : std::distance(ids_.begin(), it);
}

FeatureSubset::FeatureSubset(std::vector<std::size_t> indices, std::size_t d)
    : idx_(std::move(indices)) {
  std::sort(idx_.begin(), idx_.end());
  idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
  if (idx_.empty()) throw DimensionError("FeatureSubset: empty subset");
  if (idx_.back() >= d) {
    throw DimensionError("FeatureSubset: coordinate " +
                         std::to_string(idx_.back()) + " out of range for d=" +
                         std::to_string(d));
  }
}

FeatureSubset FeatureSubset::Full(std::size_t d) {
  std::vector<std::size_t> all(d);
  for (std::size_t k = 0; k < d; ++k) all[k] = k;
  return FeatureSubset(std::move(all), d);
}

bool FeatureSubset::contains(std::size_t k) const {
  return std::binary_search(idx_.begin(), idx_.end(), k);
}

Vector Mask(const Vector& x, const FeatureSubset& s) {
  if (s.indices().back() >= static_cast<std::size_t>(x.size())) {
    throw DimensionError("Mask: subset index out of range");
  }
  Vector out = Vector::Zero(x.size());
  for (std::size_t k : s.indices()) {
    out(static_cast<Eigen::Index>(k)) = x(static_cast<Eigen::Index>(k));
  }
  return out;
}

FeatureMatrix CenterColumns(const FeatureMatrix& u) {
  const Vector mean = u.matrix().rowwise().mean();
  Matrix centered = u.matrix().colwise() - mean;
  return FeatureMatrix(std::move(centered), u.item_ids());
}

double MinSingularValueAfterCentering(const FeatureMatrix& u) {
  const FeatureMatrix centered = CenterColumns(u);
  // With d > n the centered matrix has at most n-1 nonzero singular values
  // and sigma_min (the d-th one) is zero.
  if (centered.dim() >= centered.num_items()) return 0.0;
  // SVD of the thin n x d matrix; squaring into a Gram matrix would lose half
  // the digits near zero.
  const Eigen::JacobiSVD<Matrix> svd(centered.matrix().transpose());
  return svd.singularValues()(svd.singularValues().size() - 1);
}

void CheckJudgmentVector(const Vector& w, std::size_t d) {
  if (static_cast<std::size_t>(w.size()) != d) {
    throw DimensionError("judgment vector has dimension " +
                         std::to_string(w.size()) + ", expected " +
                         std::to_string(d));
  }
  if (!w.allFinite()) {
    throw PreconditionError("judgment vector has non-finite entries");
  }
}

}  // namespace salient
