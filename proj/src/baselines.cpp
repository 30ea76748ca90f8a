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

namespace ritr::eval {

std::string_view to_string(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::kZero:
      return "zero";
    case BaselineKind::kMean:
      return "mean";
    case BaselineKind::kNeighAggre:
      return "neigh_aggre";
  }
  return "?";
}

BaselineKind parse_baseline(std::string_view text) {
  if (text == "zero") return BaselineKind::kZero;
  if (text == "mean") return BaselineKind::kMean;
  if (text == "neigh_aggre" || text == "neighaggre") return BaselineKind::kNeighAggre;
  throw ArgumentError("unknown baseline '" + std::string(text) +
                      "' (expected zero, mean or neigh_aggre)");
}

Matrix baseline_impute(const GraphDataset& graph, const AbsencePattern& pattern,
                       BaselineKind kind) {
  const IncompleteAttributes obs = apply_pattern(graph, pattern);
  const Index n = graph.node_count;
  const Index d = graph.feature_dim;
  Matrix out = Matrix::Zero(n, d);
  scatter_rows(out, pattern.incomplete_nodes, obs.values);

  if (kind == BaselineKind::kMean) {
    const Eigen::RowVectorXd count = obs.mask.colwise().sum();
    const Eigen::RowVectorXd total = obs.values.cwiseProduct(obs.mask).colwise().sum();
    Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(d);
    for (Index j = 0; j < d; ++j) {
      if (count(j) > 0) mean(j) = total(j) / count(j);
    }
    for (std::size_t i = 0; i < pattern.incomplete_nodes.size(); ++i) {
      const auto v = pattern.incomplete_nodes[i];
      for (Index j = 0; j < d; ++j) {
        if (obs.mask(static_cast<Index>(i), j) == 0.0) out(v, j) = mean(j);
      }
    }
    for (NodeId v : pattern.missing_nodes) out.row(v) = mean;
  } else if (kind == BaselineKind::kNeighAggre) {
    const auto nbrs = graph.adjacency_lists();
    std::vector<char> known(static_cast<std::size_t>(n), 0);
    for (NodeId v : pattern.incomplete_nodes) known[static_cast<std::size_t>(v)] = 1;
    std::vector<NodeId> pending = pattern.missing_nodes;
    // Breadth-wise rounds: a node is filled once any neighbour is known, and
    // rows filled in one round only become visible to the next.
    while (!pending.empty()) {
      std::vector<NodeId> filled, rest;
      std::vector<Eigen::RowVectorXd> rows;
      for (NodeId v : pending) {
        Eigen::RowVectorXd acc = Eigen::RowVectorXd::Zero(d);
        int cnt = 0;
        for (NodeId u : nbrs[static_cast<std::size_t>(v)]) {
          if (known[static_cast<std::size_t>(u)]) {
            acc += out.row(u);
            ++cnt;
          }
        }
        if (cnt > 0) {
          filled.push_back(v);
          rows.push_back(acc / cnt);
        } else {
          rest.push_back(v);
        }
      }
      if (filled.empty()) break;
      for (std::size_t i = 0; i < filled.size(); ++i) {
        out.row(filled[i]) = rows[i];
        known[static_cast<std::size_t>(filled[i])] = 1;
      }
      pending.swap(rest);
    }
  }
  return out;
}

}  // namespace ritr::eval
