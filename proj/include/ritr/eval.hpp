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

#pragma once

#include "ritr/graph_io.hpp"
#include "ritr/linalg.hpp"
#include "ritr/rng.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ritr::eval {

// ---- ranking metrics ----------------------------------------------------

// Ids of the k largest scores, best first. Equal scores rank the lower id
// first.
std::vector<Index> top_k(std::span<const double> scores, Index k);

// |top-k ∩ relevant| / |relevant|. `relevant` must be non-empty and k <= D.
double recall_at_k(std::span<const double> scores, std::span<const Index> relevant, Index k);

// Binary-gain DCG@k with discount 1 / log2(rank + 1), over the ideal DCG of
// min(k, |relevant|) hits.
double ndcg_at_k(std::span<const double> scores, std::span<const Index> relevant, Index k);

struct RankingReport {
  std::vector<int> ks;
  std::vector<double> recall;  // mean per k
  std::vector<double> ndcg;
  Index evaluated = 0;
  Index skipped = 0;  // nodes whose true row has no non-zero entry

  double recall_at(int k) const;
  double ndcg_at(int k) const;
  nlohmann::json to_json() const;
  std::string to_csv() const;
};

// Ranks each row of x_hat at `nodes` against the non-zero entries of the
// same row of x.
RankingReport profile_eval(const Matrix& x_hat, const Matrix& x, std::span<const NodeId> nodes,
                           std::span<const int> ks);

// Restricted to the pattern's test nodes.
RankingReport profile_eval(const Matrix& x_hat, const GraphDataset& graph,
                           const AbsencePattern& pattern, std::span<const int> ks);

// ---- node classification ------------------------------------------------

enum class ClassifierMode { kX, kXA };

std::string_view to_string(ClassifierMode mode);
ClassifierMode parse_classifier_mode(std::string_view text);

struct ClassifierOptions {
  Index hidden = 64;
  double dropout = 0.5;
  double lr = 1e-2;
  double weight_decay = 5e-4;
  int iterations = 1000;
  int repeats = 10;
  int folds = 5;
};

struct ClassificationReport {
  ClassifierMode mode = ClassifierMode::kX;
  Index nodes = 0;
  double mean = 0.0;
  double stddev = 0.0;
  std::vector<double> fold_scores;  // repeat-major

  nlohmann::json to_json() const;
};

// Shuffles `nodes` and deals them into `folds` near-equal parts.
std::vector<std::vector<NodeId>> fold_split(std::span<const NodeId> nodes, int folds,
                                            RngStream stream);

// Cross-validated accuracy on `nodes`. Mode X trains a two-layer perceptron
// on the rows of x_hat; mode X+A trains a two-layer GCN over the whole graph
// and scores only `nodes`.
ClassificationReport classify_nodes(const Matrix& x_hat, const GraphDataset& graph,
                                    std::span<const NodeId> nodes, ClassifierMode mode,
                                    std::uint64_t seed, const ClassifierOptions& options = {});

// ---- baselines ----------------------------------------------------------

enum class BaselineKind { kZero, kMean, kNeighAggre };

std::string_view to_string(BaselineKind kind);
BaselineKind parse_baseline(std::string_view text);

// Full N x D reconstruction. Observed entries are copied through.
//   zero:        every unobserved entry is 0;
//   mean:        column means over observed entries;
//   neigh_aggre: each missing node takes the mean of its neighbours' rows,
//                propagating outward from nodes with observations; nodes
//                never reached stay 0. Masked entries of incomplete nodes
//                are 0.
Matrix baseline_impute(const GraphDataset& graph, const AbsencePattern& pattern,
                       BaselineKind kind);

// ---- published reference numbers ----------------------------------------

// Results for methods that are not re-run here, transcribed in percent.
// setting: "missing60", "hybrid60" or "hybrid60_air<NN>".
struct ReferenceEntry {
  std::string_view dataset;
  std::string_view setting;
  std::string_view method;
  std::string_view metric;
  double value;
};

std::span<const ReferenceEntry> reference_results();
std::optional<double> reference_value(std::string_view dataset, std::string_view setting,
                                      std::string_view method, std::string_view metric);

}  // namespace ritr::eval
