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


// CSV and JSON file formats.
//
//   features:     item_id,f1,...,fd        one row per item
//   comparisons:  winner_id,loser_id,count
//   rankings:     ranker_id,rank,item_id   ranks 1..k per ranker
//
// Files are UTF-8 with '.' as the decimal separator. Reals are written with
// 17 significant digits so that a save/load cycle reproduces them exactly.

#ifndef SALIENT_DATAIO_H_
#define SALIENT_DATAIO_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "salient/features.h"
#include "salient/model.h"
#include "salient/ranking.h"

namespace salient {

// "%.17g".
std::string FormatReal(double x);

struct StandardizationStats {
  Vector mean;
  Vector std;  // population std; 1 where the feature is constant
  std::vector<std::size_t> constant_features;
};

StandardizationStats ComputeStandardization(const FeatureMatrix& u);

// (x - mean) / std per feature. Throws DimensionError on a size mismatch.
FeatureMatrix Standardize(const FeatureMatrix& u,
                          const StandardizationStats& stats);

struct LoadedFeatures {
  FeatureMatrix features;
  std::optional<StandardizationStats> stats;
  std::vector<std::string> warnings;
};

// Throws ParseError (with the line number) on a bad header, ragged or
// malformed row, non-finite cell or duplicate id. With `standardize`, the
// statistics come from `stats_from` when given, else from this file.
LoadedFeatures ReadFeatures(std::istream& in, bool standardize = false,
                            const std::optional<StandardizationStats>&
                                stats = std::nullopt);
LoadedFeatures LoadFeatures(const std::string& path, bool standardize = false,
                            const std::optional<std::string>& stats_from =
                                std::nullopt);
void WriteFeatures(std::ostream& out, const FeatureMatrix& u);
void SaveFeatures(const std::string& path, const FeatureMatrix& u);

// Rows expand to `count` canonical samples; pairs seen fewer than
// `min_count` times in total are dropped. Unknown ids raise ParseError.
ComparisonDataset ReadComparisons(std::istream& in, const FeatureMatrix& u,
                                  long min_count = 1);
ComparisonDataset LoadComparisons(const std::string& path,
                                  const FeatureMatrix& u, long min_count = 1);
// One row per (winner, loser) with a positive count, sorted by the pair's
// item indices and then by winner index.
void WriteComparisons(std::ostream& out, const FeatureMatrix& u,
                      const ComparisonDataset& data);
void SaveComparisons(const std::string& path, const FeatureMatrix& u,
                     const ComparisonDataset& data);

struct RankerRanking {
  std::string ranker_id;
  Ranking ranking;  // over item indices of the features file
};

struct LoadedRankings {
  std::vector<RankerRanking> rankings;  // in order of first appearance
  std::vector<std::string> warnings;
};

// A tie or gap in a ranker's ranks raises ParseError naming the ranker.
// Unknown items are dropped and the remaining ranks re-compacted; rankers
// left with fewer than two items are dropped with a warning.
LoadedRankings ReadRankings(std::istream& in, const FeatureMatrix& u);
LoadedRankings LoadRankings(const std::string& path, const FeatureMatrix& u);
void WriteRankings(std::ostream& out, const FeatureMatrix& u,
                   const std::vector<RankerRanking>& rankings);
void SaveRankings(const std::string& path, const FeatureMatrix& u,
                  const std::vector<RankerRanking>& rankings);

// Weights JSON: an object holding the vector under "w", "w_hat" or
// "w_star" (first match wins). Throws ParseError or DimensionError.
Vector LoadWeights(const std::string& path, std::size_t d);

}  // namespace salient

#endif  // SALIENT_DATAIO_H_
