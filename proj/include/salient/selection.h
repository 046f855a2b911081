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

// Selection functions: the deterministic map from an item pair to the
// coordinates used when the two items are compared.

#ifndef SALIENT_SELECTION_H_
#define SALIENT_SELECTION_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "salient/features.h"

namespace salient {

// C(n, 2).
constexpr std::size_t NumPairs(std::size_t n) { return n * (n - 1) / 2; }

// Position of the canonical pair (i, j), i < j, in the row-major enumeration
// (0,1), (0,2), ..., (0,n-1), (1,2), ...
constexpr std::size_t PairIndex(std::size_t i, std::size_t j, std::size_t n) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// All canonical pairs in PairIndex order.
std::vector<std::pair<std::size_t, std::size_t>> AllPairs(std::size_t n);

struct SelectionSpec {
  enum class Kind { kFull, kTopT, kRandomExactlyK, kRandomBernoulli };

  Kind kind = Kind::kFull;
  // t for kTopT, k for kRandomExactlyK.
  std::size_t count = 0;
  // Inclusion probability for kRandomBernoulli.
  double p = 1.0;
  std::uint64_t seed = 0;

  static SelectionSpec Full() { return {}; }
  static SelectionSpec TopT(std::size_t t) {
    return {Kind::kTopT, t, 1.0, 0};
  }
  static SelectionSpec RandomExactlyK(std::size_t k, std::uint64_t seed) {
    return {Kind::kRandomExactlyK, k, 1.0, seed};
  }
  static SelectionSpec RandomBernoulli(double p, std::uint64_t seed) {
    return {Kind::kRandomBernoulli, 0, p, seed};
  }

  bool is_random() const {
    return kind == Kind::kRandomExactlyK || kind == Kind::kRandomBernoulli;
  }

  // Throws PreconditionError if a parameter is out of range for dimension d.
  void Validate(std::size_t d) const;

  friend bool operator==(const SelectionSpec&, const SelectionSpec&) = default;
};

// "full", "top_t", "random_exactly_k", "random_bernoulli".
std::string KindName(SelectionSpec::Kind kind);

// A selection function bound to a feature matrix. Every pair's subset is
// materialized at construction, so the object is immutable and safe to read
// from several threads. Random kinds seed each pair from
// DeriveSeed(spec.seed, {i, j, redraw}) and therefore do not depend on the
// order in which pairs are visited.
class RealizedSelection {
 public:
  RealizedSelection(SelectionSpec spec, const FeatureMatrix& u);

  const SelectionSpec& spec() const { return spec_; }
  std::size_t dim() const { return d_; }
  std::size_t num_items() const { return n_; }

  // tau(i, j). Order of i and j does not matter.
  // Throws InvalidPairError when i == j, DimensionError when out of range.
  const FeatureSubset& Select(std::size_t i, std::size_t j) const;

  // Subset of the pair at PairIndex position `p`.
  const FeatureSubset& ByPairIndex(std::size_t p) const { return table_[p]; }

  // True when every pair uses all d coordinates.
  bool IsFull() const;
  // True when every pair uses exactly one coordinate.
  bool AllSingletons() const;

 private:
  SelectionSpec spec_;
  std::size_t d_;
  std::size_t n_;
  std::vector<FeatureSubset> table_;
};

// Subset chosen by the top-t rule for two feature vectors: the t coordinates
// with the largest two-point sample variance, i.e. the largest |a_k - b_k|.
// Ties go to the lower coordinate index.
FeatureSubset TopTSubset(const Vector& a, const Vector& b, std::size_t t);

// For a selection where every subset is a singleton, returns P_0..P_{d-1}:
// P_k holds the canonical pairs compared on coordinate k alone.
// Throws PreconditionError if some subset is not a singleton.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>>
PartitionByCoordinate(const RealizedSelection& sel);

}  // namespace salient

#endif  // SALIENT_SELECTION_H_
