/*
 * Copyright 2026 The RITR Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ritr/error.hpp"
#include "ritr/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ritr::eval {

namespace {

void check_query(std::span<const double> scores, std::span<const Index> relevant, Index k) {
  const auto d = static_cast<Index>(scores.size());
  if (k < 1 || k > d) throw ArgumentError("k must lie in [1, D]");
  if (relevant.empty()) throw ArgumentError("relevant set is empty");
  for (Index r : relevant) {
    if (r < 0 || r >= d) throw RangeError("relevant id out of range");
  }
}

double discount(Index rank) { return 1.0 / std::log2(static_cast<double>(rank) + 1.0); }

}  // namespace

std::vector<Index> top_k(std::span<const double> scores, Index k) {
  const auto d = static_cast<Index>(scores.size());
  k = std::clamp<Index>(k, 0, d);
  std::vector<Index> ids(static_cast<std::size_t>(d));
  std::iota(ids.begin(), ids.end(), Index{0});
  auto better = [&](Index a, Index b) {
    const double sa = scores[static_cast<std::size_t>(a)];
    const double sb = scores[static_cast<std::size_t>(b)];
    return sa > sb || (sa == sb && a < b);
  };
  std::partial_sort(ids.begin(), ids.begin() + k, ids.end(), better);
  ids.resize(static_cast<std::size_t>(k));
  return ids;
}

double recall_at_k(std::span<const double> scores, std::span<const Index> relevant, Index k) {
  check_query(scores, relevant, k);
  std::vector<char> rel(scores.size(), 0);
  for (Index r : relevant) rel[static_cast<std::size_t>(r)] = 1;
  Index hits = 0;
  for (Index id : top_k(scores, k)) hits += rel[static_cast<std::size_t>(id)];
  Index distinct = std::count(rel.begin(), rel.end(), 1);
  return static_cast<double>(hits) / static_cast<double>(distinct);
}

double ndcg_at_k(std::span<const double> scores, std::span<const Index> relevant, Index k) {
  check_query(scores, relevant, k);
  std::vector<char> rel(scores.size(), 0);
  for (Index r : relevant) rel[static_cast<std::size_t>(r)] = 1;
  const auto top = top_k(scores, k);
  double dcg = 0.0;
  for (std::size_t i = 0; i < top.size(); ++i) {
    if (rel[static_cast<std::size_t>(top[i])]) dcg += discount(static_cast<Index>(i) + 1);
  }
  const Index distinct = std::count(rel.begin(), rel.end(), 1);
  double idcg = 0.0;
  for (Index i = 1; i <= std::min(k, distinct); ++i) idcg += discount(i);
  return dcg / idcg;
}

double RankingReport::recall_at(int k) const {
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] == k) return recall[i];
  }
  throw ArgumentError("k=" + std::to_string(k) + " not in report");
}

double RankingReport::ndcg_at(int k) const {
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] == k) return ndcg[i];
  }
  throw ArgumentError("k=" + std::to_string(k) + " not in report");
}

nlohmann::json RankingReport::to_json() const {
  nlohmann::json j;
  j["evaluated_nodes"] = evaluated;
  j["skipped_nodes"] = skipped;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    j["recall"][std::to_string(ks[i])] = recall[i];
    j["ndcg"][std::to_string(ks[i])] = ndcg[i];
  }
  return j;
}

std::string RankingReport::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "metric,k,value\n";
  for (std::size_t i = 0; i < ks.size(); ++i) os << "recall," << ks[i] << ',' << recall[i] << '\n';
  for (std::size_t i = 0; i < ks.size(); ++i) os << "ndcg," << ks[i] << ',' << ndcg[i] << '\n';
  return os.str();
}

RankingReport profile_eval(const Matrix& x_hat, const Matrix& x, std::span<const NodeId> nodes,
                           std::span<const int> ks) {
  if (x_hat.rows() != x.rows() || x_hat.cols() != x.cols()) {
    throw ShapeError("profile_eval: prediction and truth shapes differ");
  }
  if (nodes.empty()) throw ArgumentError("profile_eval: no nodes to evaluate");
  if (ks.empty()) throw ArgumentError("profile_eval: no cut-offs given");
  const Index d = x.cols();
  int kmax = 0;
  for (int k : ks) {
    if (k < 1 || k > d) throw ArgumentError("profile_eval: k must lie in [1, D]");
    kmax = std::max(kmax, k);
  }

  RankingReport report;
  report.ks.assign(ks.begin(), ks.end());
  report.recall.assign(ks.size(), 0.0);
  report.ndcg.assign(ks.size(), 0.0);

  std::vector<double> ideal(static_cast<std::size_t>(kmax) + 1, 0.0);
  for (int i = 1; i <= kmax; ++i) ideal[static_cast<std::size_t>(i)] = ideal[i - 1] + discount(i);

  std::vector<char> rel(static_cast<std::size_t>(d));
  for (NodeId v : nodes) {
    if (v < 0 || v >= x.rows()) throw RangeError("profile_eval: node id out of range");
    Index n_rel = 0;
    for (Index j = 0; j < d; ++j) {
      rel[static_cast<std::size_t>(j)] = x(v, j) != 0.0;
      n_rel += rel[static_cast<std::size_t>(j)];
    }
    if (n_rel == 0) {
      ++report.skipped;
      continue;
    }
    ++report.evaluated;
    const std::span<const double> row(x_hat.row(v).data(), static_cast<std::size_t>(d));
    const auto top = top_k(row, kmax);
    // Prefix sums of hits and discounted gains over the ranked list.
    std::vector<Index> hits(top.size() + 1, 0);
    std::vector<double> dcg(top.size() + 1, 0.0);
    for (std::size_t i = 0; i < top.size(); ++i) {
      const bool h = rel[static_cast<std::size_t>(top[i])];
      hits[i + 1] = hits[i] + h;
      dcg[i + 1] = dcg[i] + (h ? discount(static_cast<Index>(i) + 1) : 0.0);
    }
    for (std::size_t q = 0; q < ks.size(); ++q) {
      const auto k = static_cast<std::size_t>(ks[q]);
      report.recall[q] += static_cast<double>(hits[k]) / static_cast<double>(n_rel);
      report.ndcg[q] += dcg[k] / ideal[std::min<std::size_t>(k, static_cast<std::size_t>(n_rel))];
    }
  }
  if (report.evaluated > 0) {
    for (std::size_t q = 0; q < ks.size(); ++q) {
      report.recall[q] /= static_cast<double>(report.evaluated);
      report.ndcg[q] /= static_cast<double>(report.evaluated);
    }
  }
  return report;
}

RankingReport profile_eval(const Matrix& x_hat, const GraphDataset& graph,
                           const AbsencePattern& pattern, std::span<const int> ks) {
  if (pattern.node_count != graph.node_count || pattern.feature_dim != graph.feature_dim) {
    throw ArgumentError("profile_eval: pattern does not match the graph");
  }
  const auto test = pattern.test_nodes();
  if (test.empty()) throw ArgumentError("profile_eval: pattern has no test nodes");
  return profile_eval(x_hat, graph.features, test, ks);
}

}  // namespace ritr::eval
