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


#include "salient/dataio.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "json.hpp"
#include "salient/errors.h"

namespace salient {
namespace {

struct CsvLine {
  std::size_t number = 0;
  std::vector<std::string> cells;
};

std::vector<std::string> SplitCells(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(line.substr(start));
      return cells;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

// Reads all non-blank lines; strips a trailing '\r'.
std::vector<CsvLine> ReadCsv(std::istream& in) {
  std::vector<CsvLine> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) continue;
    lines.push_back({number, SplitCells(raw)});
  }
  return lines;
}

[[noreturn]] void Fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

void ExpectHeader(const std::vector<CsvLine>& lines,
                  const std::vector<std::string>& header) {
  if (lines.empty()) throw ParseError("line 1: missing header");
  if (lines.front().cells != header) {
    std::string want;
    for (std::size_t k = 0; k < header.size(); ++k) {
      want += (k ? "," : "") + header[k];
    }
    Fail(lines.front().number, "expected header '" + want + "'");
  }
}

double ParseReal(const std::string& cell, std::size_t line) {
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (!cell.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || cell.empty()) {
    Fail(line, "'" + cell + "' is not a number");
  }
  if (!std::isfinite(value)) Fail(line, "non-finite value '" + cell + "'");
  return value;
}

long ParseCount(const std::string& cell, std::size_t line) {
  long value = 0;
  const auto [ptr, ec] =
      std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || cell.empty()) {
    Fail(line, "'" + cell + "' is not an integer");
  }
  return value;
}

std::size_t Resolve(const FeatureMatrix& u, const std::string& id,
                    std::size_t line) {
  const std::ptrdiff_t idx = u.IndexOf(id);
  if (idx < 0) Fail(line, "unknown item id '" + id + "'");
  return static_cast<std::size_t>(idx);
}

std::ifstream OpenIn(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

template <typename WriteFn>
void WriteFile(const std::string& path, WriteFn write) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  write(out);
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace

std::string FormatReal(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

StandardizationStats ComputeStandardization(const FeatureMatrix& u) {
  const Matrix& m = u.matrix();
  const double n = static_cast<double>(u.num_items());
  StandardizationStats s;
  s.mean = m.rowwise().mean();
  s.std = ((m.colwise() - s.mean).array().square().rowwise().sum() / n).sqrt();
  for (Eigen::Index k = 0; k < s.std.size(); ++k) {
    if (s.std(k) == 0.0) {
      s.std(k) = 1.0;
      s.constant_features.push_back(static_cast<std::size_t>(k));
    }
  }
  return s;
}

FeatureMatrix Standardize(const FeatureMatrix& u,
                          const StandardizationStats& stats) {
  const auto d = static_cast<Eigen::Index>(u.dim());
  if (stats.mean.size() != d || stats.std.size() != d) {
    throw DimensionError("standardization stats have dimension " +
                         std::to_string(stats.mean.size()) + ", features " +
                         std::to_string(d));
  }
  Matrix z = (u.matrix().colwise() - stats.mean).array().colwise() /
             stats.std.array();
  return FeatureMatrix(std::move(z), u.item_ids());
}

LoadedFeatures ReadFeatures(std::istream& in, bool standardize,
                            const std::optional<StandardizationStats>& stats) {
  const std::vector<CsvLine> lines = ReadCsv(in);
  if (lines.empty()) throw ParseError("line 1: missing header");
  const auto& header = lines.front().cells;
  if (header.size() < 2 || header[0] != "item_id") {
    Fail(lines.front().number, "expected header 'item_id,f1,...,fd'");
  }
  for (std::size_t k = 1; k < header.size(); ++k) {
    if (header[k] != "f" + std::to_string(k)) {
      Fail(lines.front().number, "expected column 'f" + std::to_string(k) +
                                     "', got '" + header[k] + "'");
    }
  }
  const std::size_t d = header.size() - 1;
  const std::size_t n = lines.size() - 1;
  if (n < 2) throw ParseError("features file needs at least two items");

  Matrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(n));
  std::vector<std::string> ids;
  std::unordered_set<std::string> seen;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const CsvLine& line = lines[r];
    if (line.cells.size() != d + 1) {
      Fail(line.number, "expected " + std::to_string(d + 1) + " cells, got " +
                            std::to_string(line.cells.size()));
    }
    const std::string& id = line.cells[0];
    if (id.empty()) Fail(line.number, "empty item id");
    if (!seen.insert(id).second) Fail(line.number, "duplicate item id '" + id + "'");
    ids.push_back(id);
    for (std::size_t k = 0; k < d; ++k) {
      m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(r - 1)) =
          ParseReal(line.cells[k + 1], line.number);
    }
  }

  LoadedFeatures out{FeatureMatrix(std::move(m), std::move(ids)), std::nullopt,
                     {}};
  if (standardize) {
    StandardizationStats s =
        stats ? *stats : ComputeStandardization(out.features);
    for (std::size_t k : s.constant_features) {
      out.warnings.push_back("feature f" + std::to_string(k + 1) +
                             " has zero standard deviation; shifted, not scaled");
    }
    out.features = Standardize(out.features, s);
    out.stats = std::move(s);
  }
  return out;
}

LoadedFeatures LoadFeatures(const std::string& path, bool standardize,
                            const std::optional<std::string>& stats_from) {
  std::optional<StandardizationStats> stats;
  if (standardize && stats_from) {
    std::ifstream src = OpenIn(*stats_from);
    stats = ComputeStandardization(ReadFeatures(src).features);
  }
  std::ifstream in = OpenIn(path);
  return ReadFeatures(in, standardize, stats);
}

void WriteFeatures(std::ostream& out, const FeatureMatrix& u) {
  out << "item_id";
  for (std::size_t k = 1; k <= u.dim(); ++k) out << ",f" << k;
  out << '\n';
  for (std::size_t j = 0; j < u.num_items(); ++j) {
    out << u.item_ids()[j];
    for (std::size_t k = 0; k < u.dim(); ++k) {
      out << ',' << FormatReal(u.matrix()(static_cast<Eigen::Index>(k),
                                          static_cast<Eigen::Index>(j)));
    }
    out << '\n';
  }
}

void SaveFeatures(const std::string& path, const FeatureMatrix& u) {
  WriteFile(path, [&](std::ostream& out) { WriteFeatures(out, u); });
}

ComparisonDataset ReadComparisons(std::istream& in, const FeatureMatrix& u,
                                  long min_count) {
  const std::vector<CsvLine> lines = ReadCsv(in);
  ExpectHeader(lines, {"winner_id", "loser_id", "count"});

  struct Row {
    std::size_t winner;
    std::size_t loser;
    long count;
  };
  std::vector<Row> rows;
  std::map<std::pair<std::size_t, std::size_t>, long> totals;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const CsvLine& line = lines[r];
    if (line.cells.size() != 3) {
      Fail(line.number, "expected 3 cells, got " +
                            std::to_string(line.cells.size()));
    }
    const std::size_t winner = Resolve(u, line.cells[0], line.number);
    const std::size_t loser = Resolve(u, line.cells[1], line.number);
    if (winner == loser) Fail(line.number, "winner equals loser");
    const long count = ParseCount(line.cells[2], line.number);
    if (count < 1) Fail(line.number, "count must be at least 1");
    rows.push_back({winner, loser, count});
    totals[{std::min(winner, loser), std::max(winner, loser)}] += count;
  }

  ComparisonDataset data;
  data.provenance.kind = Provenance::Kind::kFile;
  for (const Row& row : rows) {
    if (totals[{std::min(row.winner, row.loser),
                std::max(row.winner, row.loser)}] < min_count) {
      continue;
    }
    const ComparisonSample s = ComparisonSample::FromOutcome(row.winner, row.loser);
    data.samples.insert(data.samples.end(), static_cast<std::size_t>(row.count), s);
  }
  return data;
}

ComparisonDataset LoadComparisons(const std::string& path,
                                  const FeatureMatrix& u, long min_count) {
  std::ifstream in = OpenIn(path);
  ComparisonDataset data = ReadComparisons(in, u, min_count);
  data.provenance.path = path;
  return data;
}

void WriteComparisons(std::ostream& out, const FeatureMatrix& u,
                      const ComparisonDataset& data) {
  // (i, j, winner is i ? 0 : 1) sorts i-wins before j-wins within a pair.
  std::map<std::tuple<std::size_t, std::size_t, int>, long> counts;
  const std::size_t n = u.num_items();
  for (const auto& s : data.samples) {
    if (s.i >= n || s.j >= n || s.i == s.j) {
      throw DimensionError("sample references an unknown item");
    }
    const std::size_t lo = std::min(s.i, s.j);
    const std::size_t hi = std::max(s.i, s.j);
    const std::size_t winner = s.y != 0 ? s.i : s.j;
    counts[{lo, hi, winner == lo ? 0 : 1}] += 1;
  }
  out << "winner_id,loser_id,count\n";
  for (const auto& [key, count] : counts) {
    const auto [lo, hi, flipped] = key;
    const std::size_t winner = flipped ? hi : lo;
    const std::size_t loser = flipped ? lo : hi;
    out << u.item_ids()[winner] << ',' << u.item_ids()[loser] << ',' << count
        << '\n';
  }
}

void SaveComparisons(const std::string& path, const FeatureMatrix& u,
                     const ComparisonDataset& data) {
  WriteFile(path, [&](std::ostream& out) { WriteComparisons(out, u, data); });
}

LoadedRankings ReadRankings(std::istream& in, const FeatureMatrix& u) {
  const std::vector<CsvLine> lines = ReadCsv(in);
  ExpectHeader(lines, {"ranker_id", "rank", "item_id"});

  struct Entry {
    long rank;
    std::string item;
    std::size_t line;
  };
  std::vector<std::string> order;
  std::map<std::string, std::vector<Entry>> by_ranker;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const CsvLine& line = lines[r];
    if (line.cells.size() != 3) {
      Fail(line.number, "expected 3 cells, got " +
                            std::to_string(line.cells.size()));
    }
    const std::string& ranker = line.cells[0];
    auto [it, fresh] = by_ranker.try_emplace(ranker);
    if (fresh) order.push_back(ranker);
    it->second.push_back(
        {ParseCount(line.cells[1], line.number), line.cells[2], line.number});
  }

  LoadedRankings out;
  for (const std::string& ranker : order) {
    std::vector<Entry>& entries = by_ranker[ranker];
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.rank < b.rank; });
    std::set<std::string> items;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const Entry& e = entries[k];
      if (k > 0 && entries[k - 1].rank == e.rank) {
        Fail(e.line, "ranker '" + ranker + "' has a tie at rank " +
                         std::to_string(e.rank));
      }
      if (e.rank != static_cast<long>(k + 1)) {
        Fail(e.line, "ranker '" + ranker + "' has a gap before rank " +
                         std::to_string(e.rank));
      }
      if (!items.insert(e.item).second) {
        Fail(e.line, "ranker '" + ranker + "' lists item '" + e.item +
                         "' twice");
      }
    }
    std::vector<std::size_t> kept;
    std::size_t dropped = 0;
    for (const Entry& e : entries) {
      const std::ptrdiff_t idx = u.IndexOf(e.item);
      if (idx < 0) {
        ++dropped;
      } else {
        kept.push_back(static_cast<std::size_t>(idx));
      }
    }
    if (dropped > 0) {
      out.warnings.push_back("ranker '" + ranker + "': dropped " +
                             std::to_string(dropped) + " unknown item(s)");
    }
    if (kept.size() < 2) {
      out.warnings.push_back("ranker '" + ranker +
                             "' dropped: fewer than two known items");
      continue;
    }
    out.rankings.push_back({ranker, Ranking(std::move(kept))});
  }
  return out;
}

LoadedRankings LoadRankings(const std::string& path, const FeatureMatrix& u) {
  std::ifstream in = OpenIn(path);
  return ReadRankings(in, u);
}

void WriteRankings(std::ostream& out, const FeatureMatrix& u,
                   const std::vector<RankerRanking>& rankings) {
  out << "ranker_id,rank,item_id\n";
  for (const auto& r : rankings) {
    const auto& items = r.ranking.order();
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (items[k] >= u.num_items()) {
        throw DimensionError("ranking references an unknown item");
      }
      out << r.ranker_id << ',' << k + 1 << ',' << u.item_ids()[items[k]]
          << '\n';
    }
  }
}

void SaveRankings(const std::string& path, const FeatureMatrix& u,
                  const std::vector<RankerRanking>& rankings) {
  WriteFile(path, [&](std::ostream& out) { WriteRankings(out, u, rankings); });
}

Vector LoadWeights(const std::string& path, std::size_t d) {
  std::ifstream in = OpenIn(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
  for (const char* key : {"w", "w_hat", "w_star"}) {
    if (!doc.is_object() || !doc.contains(key)) continue;
    const auto& arr = doc.at(key);
    if (!arr.is_array()) throw ParseError("'" + path + "': '" + key + "' is not an array");
    Vector w(static_cast<Eigen::Index>(arr.size()));
    for (std::size_t k = 0; k < arr.size(); ++k) {
      if (!arr[k].is_number()) {
        throw ParseError("'" + path + "': non-numeric weight");
      }
      w(static_cast<Eigen::Index>(k)) = arr[k].get<double>();
    }
    CheckJudgmentVector(w, d);
    return w;
  }
  throw ParseError("'" + path + "': no 'w', 'w_hat' or 'w_star' array");
}

}  // namespace salient
