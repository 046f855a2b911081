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


#include "salient/synthetic.h"

#include <cmath>
#include <random>

#include "salient/errors.h"
#include "salient/rng.h"

namespace salient {

SyntheticInstance SampleInstance(std::size_t d, std::size_t n,
                                 std::uint64_t seed) {
  if (d < 1 || n < 2) {
    throw PreconditionError("SampleInstance: need d >= 1 and n >= 2");
  }
  const double sd = 1.0 / std::sqrt(static_cast<double>(d));
  const auto rows = static_cast<Eigen::Index>(d);
  const auto cols = static_cast<Eigen::Index>(n);

  Rng feature_rng(DeriveSeed(seed, {streams::kFeatures}));
  std::normal_distribution<double> normal(0.0, sd);
  Matrix u(rows, cols);
  // Column by column so item j's features do not depend on n.
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index k = 0; k < rows; ++k) u(k, j) = normal(feature_rng);
  }

  Rng judgment_rng(DeriveSeed(seed, {streams::kJudgment}));
  normal.reset();
  Vector w(rows);
  for (Eigen::Index k = 0; k < rows; ++k) w(k) = normal(judgment_rng);
  return {FeatureMatrix(std::move(u)), std::move(w)};
}

}  // namespace salient
