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
#include "ritr/optim.hpp"
#include "ritr/tape.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace ritr::eval {

namespace {

struct FoldData {
  std::vector<NodeId> train;
  std::vector<NodeId> test;
};

// Two-layer classifier; returns held-out accuracy after `iterations` steps.
class FoldTrainer {
 public:
  FoldTrainer(const Matrix& x_hat, const GraphDataset& graph, ClassifierMode mode,
              const ClassifierOptions& opt, const Matrix* propagated, const SparseMatrix* adj)
      : x_hat_(x_hat), graph_(graph), mode_(mode), opt_(opt), propagated_(propagated), adj_(adj) {}

  double run(const FoldData& fold, RngStream init, RngStream drop) const {
    const Index in_dim = x_hat_.cols();
    const Index classes = graph_.class_count;
    std::array<Matrix, 2> w{glorot_init(in_dim, opt_.hidden, init.fork("w1")),
                            glorot_init(opt_.hidden, classes, init.fork("w2"))};
    AdamOptions ao;
    ao.lr = opt_.lr;
    ao.weight_decay = opt_.weight_decay;
    std::array<Matrix*, 2> ptrs{&w[0], &w[1]};
    std::array<const Matrix*, 2> cptrs{&w[0], &w[1]};
    AdamState state = make_adam_state(ao, cptrs);
    static const std::array<std::string, 2> names{"w1", "w2"};

    const auto& labels = *graph_.labels;
    std::vector<int> train_y;
    for (NodeId v : fold.train) train_y.push_back(labels[static_cast<std::size_t>(v)]);

    // Mode X only ever sees the training rows during fitting.
    Matrix x_train;
    if (mode_ == ClassifierMode::kX) x_train = gather_rows(x_hat_, fold.train);

    for (int it = 0; it < opt_.iterations; ++it) {
      RngStream ds = drop.fork(static_cast<std::uint64_t>(it));
      ad::Tape tape;
      const ad::Var w1 = tape.parameter(w[0]);
      const ad::Var w2 = tape.parameter(w[1]);
      ad::Var logits = forward(tape, w1, w2, x_train, true, &ds, fold.train);
      const ad::Var loss = tape.softmax_cross_entropy(logits, train_y);
      tape.backward(loss);
      std::array<Matrix, 2> grads;
      for (int k = 0; k < 2; ++k) {
        const ad::Var v = k == 0 ? w1 : w2;
        grads[k] = tape.has_grad(v) ? tape.grad(v) : Matrix::Zero(w[k].rows(), w[k].cols());
      }
      std::array<const Matrix*, 2> gptrs{&grads[0], &grads[1]};
      adam_step(ptrs, gptrs, names, state);
    }

    ad::Tape tape;
    const ad::Var w1 = tape.constant(w[0]);
    const ad::Var w2 = tape.constant(w[1]);
    Matrix x_test;
    if (mode_ == ClassifierMode::kX) x_test = gather_rows(x_hat_, fold.test);
    const Matrix& z = tape.value(forward(tape, w1, w2, x_test, false, nullptr, fold.test));
    Index correct = 0;
    for (Index i = 0; i < z.rows(); ++i) {
      Index best = 0;
      z.row(i).maxCoeff(&best);
      correct += best == labels[static_cast<std::size_t>(fold.test[static_cast<std::size_t>(i)])];
    }
    return static_cast<double>(correct) / static_cast<double>(z.rows());
  }

 private:
  // Logits for `rows`. In mode X, `x_rows` already holds those rows.
  ad::Var forward(ad::Tape& tape, ad::Var w1, ad::Var w2, const Matrix& x_rows, bool training,
                  RngStream* drop, std::span<const NodeId> rows) const {
    if (mode_ == ClassifierMode::kX) {
      ad::Var h = tape.relu(tape.const_matmul(x_rows, w1));
      if (training) h = tape.dropout(h, opt_.dropout, true, *drop);
      return tape.matmul(h, w2);
    }
    ad::Var h = tape.relu(tape.const_matmul(*propagated_, w1));
    if (training) h = tape.dropout(h, opt_.dropout, true, *drop);
    const ad::Var z = tape.spmm(*adj_, tape.matmul(h, w2));
    return tape.gather_rows(z, rows);
  }

  const Matrix& x_hat_;
  const GraphDataset& graph_;
  ClassifierMode mode_;
  const ClassifierOptions& opt_;
  const Matrix* propagated_;
  const SparseMatrix* adj_;
};

}  // namespace

std::string_view to_string(ClassifierMode mode) {
  return mode == ClassifierMode::kX ? "X" : "X+A";
}

ClassifierMode parse_classifier_mode(std::string_view text) {
  if (text == "X" || text == "x") return ClassifierMode::kX;
  if (text == "X+A" || text == "x+a" || text == "XA" || text == "xa") return ClassifierMode::kXA;
  throw ArgumentError("unknown classifier mode '" + std::string(text) + "' (expected X or X+A)");
}

nlohmann::json ClassificationReport::to_json() const {
  nlohmann::json j;
  j["mode"] = std::string(to_string(mode));
  j["nodes"] = nodes;
  j["mean_accuracy"] = mean;
  j["std_accuracy"] = stddev;
  j["fold_accuracy"] = fold_scores;
  return j;
}

std::vector<std::vector<NodeId>> fold_split(std::span<const NodeId> nodes, int folds,
                                            RngStream stream) {
  if (folds < 2) throw ArgumentError("fold_split: need at least two folds");
  if (static_cast<std::size_t>(folds) > nodes.size()) {
    throw ArgumentError("fold_split: more folds than nodes");
  }
  std::vector<NodeId> order(nodes.begin(), nodes.end());
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[stream.below(i)]);
  }
  std::vector<std::vector<NodeId>> out(static_cast<std::size_t>(folds));
  for (std::size_t i = 0; i < order.size(); ++i) out[i % out.size()].push_back(order[i]);
  for (auto& f : out) std::sort(f.begin(), f.end());
  return out;
}

ClassificationReport classify_nodes(const Matrix& x_hat, const GraphDataset& graph,
                                    std::span<const NodeId> nodes, ClassifierMode mode,
                                    std::uint64_t seed, const ClassifierOptions& options) {
  if (!graph.labels) throw ArgumentError("classify_nodes: dataset has no labels");
  if (x_hat.rows() != graph.node_count) throw ShapeError("classify_nodes: X_hat row count");
  if (graph.class_count < 2) throw ArgumentError("classify_nodes: need at least two classes");
  if (options.repeats < 1 || options.iterations < 0) {
    throw ArgumentError("classify_nodes: repeats >= 1 and iterations >= 0 required");
  }
  for (NodeId v : nodes) {
    if (v < 0 || v >= graph.node_count) throw RangeError("classify_nodes: node id out of range");
  }

  std::optional<NormalizedAdjacency> adj;
  Matrix propagated;
  if (mode == ClassifierMode::kXA) {
    adj = normalize_adjacency(graph);
    propagated = adj->entries * x_hat;
  }
  FoldTrainer trainer(x_hat, graph, mode, options, &propagated, adj ? &adj->entries : nullptr);

  const RngStream root = RngStream::named(seed, "folds");
  ClassificationReport report;
  report.mode = mode;
  report.nodes = static_cast<Index>(nodes.size());
  for (int r = 0; r < options.repeats; ++r) {
    const RngStream rep = root.fork(static_cast<std::uint64_t>(r));
    const auto folds = fold_split(nodes, options.folds, rep.fork("split"));
    for (std::size_t f = 0; f < folds.size(); ++f) {
      FoldData data;
      data.test = folds[f];
      for (std::size_t g = 0; g < folds.size(); ++g) {
        if (g != f) data.train.insert(data.train.end(), folds[g].begin(), folds[g].end());
      }
      std::sort(data.train.begin(), data.train.end());
      const RngStream fs = rep.fork(static_cast<std::uint64_t>(f));
      report.fold_scores.push_back(trainer.run(data, fs.fork("init"), fs.fork("dropout")));
    }
  }
  const double n = static_cast<double>(report.fold_scores.size());
  report.mean = std::accumulate(report.fold_scores.begin(), report.fold_scores.end(), 0.0) / n;
  double ss = 0.0;
  for (double s : report.fold_scores) ss += (s - report.mean) * (s - report.mean);
  report.stddev = std::sqrt(ss / n);
  return report;
}

}  // namespace ritr::eval
