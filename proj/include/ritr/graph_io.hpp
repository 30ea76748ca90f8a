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

#include "ritr/linalg.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ritr {

// Undirected edge stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Attributed, undirected, unweighted graph.
//
// Invariants (checked by validate()):
//   * every edge endpoint is < node_count, edges are sorted, unique, u < v
//     (self-loops are dropped at load time; normalization adds them back);
//   * features is node_count x feature_dim and finite;
//   * labels, when present, have node_count entries, each < class_count.
struct GraphDataset {
  Index node_count = 0;
  Index feature_dim = 0;
  Index class_count = 0;
  std::vector<Edge> edges;
  Matrix features;
  std::optional<std::vector<int>> labels;

  void validate() const;
  // Sorted neighbour lists built from `edges`.
  std::vector<std::vector<NodeId>> adjacency_lists() const;
};

// Canonicalizes an arbitrary list of (u, v) pairs: orients u < v, drops
// self-loops and duplicates, sorts.
std::vector<Edge> canonical_edges(std::span<const Edge> raw, Index node_count);

// Sparse symmetric propagation matrix D^-1/2 (A + I) D^-1/2, or a power of it.
struct NormalizedAdjacency {
  SparseMatrix entries;
  int order = 1;

  Index dim() const { return entries.rows(); }
  Matrix dense() const { return Matrix(entries); }
};

struct DatasetPaths {
  std::filesystem::path features;
  std::filesystem::path edges;
  std::optional<std::filesystem::path> labels;
  std::filesystem::path meta;

  // meta.json, edges.txt, features.txt and (when present) labels.txt.
  static DatasetPaths in_directory(const std::filesystem::path& dir);
};

GraphDataset load_dataset(const DatasetPaths& paths);
inline GraphDataset load_dataset(const std::filesystem::path& dir) {
  return load_dataset(DatasetPaths::in_directory(dir));
}
void save_dataset(const GraphDataset& graph, const std::filesystem::path& dir);

// Symmetric GCN normalization with self-loops. With `node_subset` (sorted,
// duplicate-free) the result is for the induced sub-graph, indexed by the
// position of each node in the subset.
NormalizedAdjacency normalize_adjacency(
    const GraphDataset& graph,
    std::optional<std::span<const NodeId>> node_subset = std::nullopt);

// adj^r by repeated sparse products; r >= 1.
NormalizedAdjacency power_adjacency(const NormalizedAdjacency& adj, int r);

// Which nodes lost their whole attribute vector (missing), which lost a
// subset of entries (incomplete), and which entries.
struct AbsencePattern {
  std::uint64_t seed = 0;
  double missing_ratio = 0.0;
  double val_ratio = 0.0;
  double incomplete_ratio = 0.0;
  Index node_count = 0;
  Index feature_dim = 0;
  std::vector<NodeId> incomplete_nodes;  // ascending
  std::vector<NodeId> missing_nodes;     // ascending
  std::vector<NodeId> validation_nodes;  // ascending, subset of missing_nodes
  Matrix incomplete_mask;                // |incomplete| x D, 1 = observed

  // Missing nodes that are not validation nodes, ascending.
  std::vector<NodeId> test_nodes() const;
  void validate() const;

  std::string to_json() const;
  static AbsencePattern from_json(const std::string& text);
  void save(const std::filesystem::path& path) const;
  static AbsencePattern load(const std::filesystem::path& path);
};

AbsencePattern generate_pattern(Index node_count, Index feature_dim, double missing_ratio,
                                double val_ratio, double incomplete_ratio,
                                std::uint64_t seed);

// Observed attributes of the incomplete nodes. Entries where mask == 0 are
// unobserved; their stored value is 0 and carries no meaning.
struct IncompleteAttributes {
  Matrix values;
  Matrix mask;
};

IncompleteAttributes apply_pattern(const GraphDataset& graph, const AbsencePattern& pattern);

}  // namespace ritr
