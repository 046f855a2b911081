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

// Item features, judgment vectors and coordinate subsets.
//
// Items are columns: a FeatureMatrix with d features and n items stores a
// d x n matrix whose column j is the feature vector of item j. Item and
// coordinate indices are 0-based throughout the library.

#ifndef SALIENT_FEATURES_H_
#define SALIENT_FEATURES_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace salient {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

class FeatureMatrix {
 public:
  // `columns` is d x n. When `item_ids` is empty, ids "0".."n-1" are
  // generated. Throws DimensionError / PreconditionError on invalid input.
  explicit FeatureMatrix(Matrix columns, std::vector<std::string> item_ids = {});

  std::size_t dim() const { return static_cast<std::size_t>(u_.rows()); }
  std::size_t num_items() const { return static_cast<std::size_t>(u_.cols()); }

  const Matrix& matrix() const { return u_; }
  auto item(std::size_t j) const { return u_.col(static_cast<Eigen::Index>(j)); }
  const std::vector<std::string>& item_ids() const { return ids_; }

  // Index of `id`, or -1 when absent.
  std::ptrdiff_t IndexOf(const std::string& id) const;

 private:
  Matrix u_;
  std::vector<std::string> ids_;
};

// The judgment weights w. Plain Eigen vector; dimension is checked at use.
using JudgmentVector = Vector;

// Sorted, duplicate-free, nonempty set of coordinates.
class FeatureSubset {
 public:
  // Sorts and deduplicates. Throws DimensionError if empty or any index >= d.
  FeatureSubset(std::vector<std::size_t> indices, std::size_t d);

  static FeatureSubset Full(std::size_t d);

  const std::vector<std::size_t>& indices() const { return idx_; }
  std::size_t size() const { return idx_.size(); }
  bool contains(std::size_t k) const;

  friend bool operator==(const FeatureSubset&, const FeatureSubset&) = default;

 private:
  std::vector<std::size_t> idx_;
};

// x restricted to `s`, zero elsewhere.
Vector Mask(const Vector& x, const FeatureSubset& s);

// Subtracts the mean column from every column. Ids are preserved.
FeatureMatrix CenterColumns(const FeatureMatrix& u);

// Smallest (d-th) singular value of the centered d x n matrix. Zero (within
// 1e-10) exactly when the all-ones vector is in the row space of the original
// matrix.
double MinSingularValueAfterCentering(const FeatureMatrix& u);

// Throws DimensionError unless w has dimension d and finite entries.
void CheckJudgmentVector(const Vector& w, std::size_t d);

}  // namespace salient

#endif  // SALIENT_FEATURES_H_
