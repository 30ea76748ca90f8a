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

#include "ritr/synthetic.hpp"

#include "ritr/error.hpp"
#include "ritr/rng.hpp"

namespace ritr {

GraphDataset make_synthetic(const SyntheticSpec& spec) {
  if (spec.nodes < 2 || spec.classes < 1 || spec.features < spec.classes) {
    throw ArgumentError("make_synthetic: need >= 2 nodes and >= 1 feature per class");
  }
  if (spec.words_per_node < 1 || spec.words_per_node > spec.features) {
    throw ArgumentError("make_synthetic: words_per_node must lie in [1, features]");
  }
  RngStream root = RngStream::named(spec.seed, "synthetic");
  RngStream labels_rng = root.fork("labels");
  RngStream words_rng = root.fork("words");
  RngStream edges_rng = root.fork("edges");

  GraphDataset g;
  g.node_count = spec.nodes;
  g.feature_dim = spec.features;
  g.class_count = spec.classes;
  std::vector<int> labels(static_cast<std::size_t>(spec.nodes));
  for (Index i = 0; i < spec.nodes; ++i) {
    // Round-robin then shuffle keeps classes balanced.
    labels[static_cast<std::size_t>(i)] = static_cast<int>(i % spec.classes);
  }
  for (std::size_t i = labels.size(); i > 1; --i) {
    std::swap(labels[i - 1], labels[labels_rng.below(i)]);
  }

  const Index block = spec.features / spec.classes;
  g.features = Matrix::Zero(spec.nodes, spec.features);
  for (Index i = 0; i < spec.nodes; ++i) {
    const Index c = labels[static_cast<std::size_t>(i)];
    Index placed = 0;
    while (placed < spec.words_per_node) {
      const Index w = words_rng.bernoulli(spec.topic_purity)
                          ? c * block + static_cast<Index>(words_rng.below(block))
                          : static_cast<Index>(words_rng.below(spec.features));
      if (g.features(i, w) == 0.0) {
        g.features(i, w) = 1.0;
        ++placed;
      }
    }
  }

  for (Index u = 0; u < spec.nodes; ++u) {
    for (Index v = u + 1; v < spec.nodes; ++v) {
      const bool same = labels[static_cast<std::size_t>(u)] == labels[static_cast<std::size_t>(v)];
      if (edges_rng.bernoulli(same ? spec.p_in : spec.p_out)) g.edges.push_back(Edge{u, v});
    }
  }
  g.labels = std::move(labels);
  g.validate();
  return g;
}

}  // namespace ritr
