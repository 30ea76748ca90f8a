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
#include "ritr/rng.hpp"

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace ritr::ad {

// Handle to a value recorded on a Tape.
struct Var {
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::size_t id = kNone;
  bool valid() const { return id != kNone; }
};

enum class Activation { kIdentity, kRelu, kSigmoid };

// Reverse-mode tape over dense 2-D matrices.
//
// Nodes are stored in recording order, which is a topological order;
// backward() walks them in exact reverse so gradients are deterministic.
// A tape supports a single backward pass. Sparse and dense "constant"
// left operands are held by pointer and must outlive the tape.
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;
  Tape(Tape&&) = default;
  Tape& operator=(Tape&&) = default;

  // Leaf that receives a gradient.
  Var parameter(Matrix value);
  // Leaf that never receives a gradient.
  Var constant(Matrix value);

  Var matmul(Var a, Var b);
  // a * b^T
  Var matmul_nt(Var a, Var b);
  // Constant sparse left operand; only b is differentiated.
  Var spmm(const SparseMatrix& a, Var b);
  // Constant dense left operand; only b is differentiated.
  Var const_matmul(const Matrix& a, Var b);

  Var activation(Var x, Activation kind);
  Var relu(Var x) { return activation(x, Activation::kRelu); }
  Var sigmoid(Var x) { return activation(x, Activation::kSigmoid); }

  // Inverted dropout: survivors are scaled by 1 / (1 - rate). Identity when
  // !training or rate == 0.
  Var dropout(Var x, double rate, bool training, RngStream& stream);

  Var gather_rows(Var x, std::span<const NodeId> rows);
  // Output with `total_rows` rows: row rows_a[i] = a.row(i), row rows_b[j] =
  // b.row(j). The two index lists must partition [0, total_rows).
  Var place_rows(Var a, std::span<const NodeId> rows_a, Var b, std::span<const NodeId> rows_b,
                 Index total_rows);
  // Zeroes the given rows (e.g. to model an absent source).
  Var zero_rows(Var x, std::span<const NodeId> rows);

  // x_i / max(||x_i||, floor) per row.
  Var row_normalize(Var x, double floor);

  Var add(Var a, Var b);
  Var scale(Var x, double factor);
  Var sum(Var x);
  // sum_k w_k * x_k over scalar vars.
  Var weighted_sum(std::span<const Var> terms, std::span<const double> weights);

  // sum(mask .* (target - pred)^2) * factor.
  Var masked_squared_error(Var pred, const Matrix& target, const Matrix& mask, double factor);

  // Mean over all entries of BCE(target, clamp(sigmoid(logits), eps, 1-eps))
  // with soft targets. Clamped entries receive zero gradient.
  Var bce_with_logits(Var logits, const SparseMatrix& target, double eps);

  // mean_i (c_ii - 1)^2 + mean_{i != j} (c_ij - t_ij)^2; the off-diagonal term
  // is 0 when c has fewer than two rows.
  Var consistency(Var c, const Matrix& target);

  // Mean softmax cross-entropy of `logits` rows against class ids.
  Var softmax_cross_entropy(Var logits, std::span<const int> labels);

  const Matrix& value(Var v) const;
  // Gradient of the last backward() target with respect to v; zero-sized if
  // v received no gradient.
  const Matrix& grad(Var v) const;
  bool has_grad(Var v) const;
  double scalar(Var v) const;

  // Populates gradients of every node reachable from `loss` (a 1x1 var).
  void backward(Var loss);

  std::size_t size() const { return nodes_.size(); }
  bool consumed() const { return consumed_; }

 private:
  struct Node {
    Matrix value;
    Matrix grad;
    bool requires_grad = false;
    std::function<void(Tape&, std::size_t self)> backward;
  };

  Var push(Matrix value, bool requires_grad, std::function<void(Tape&, std::size_t)> fn);
  Node& node(Var v);
  const Node& node(Var v) const;
  bool needs(Var v) const { return node(v).requires_grad; }
  // grad(v) += delta, allocating on first use.
  template <typename Expr>
  void accumulate(Var v, const Expr& delta);

  std::vector<Node> nodes_;
  bool consumed_ = false;
};

}  // namespace ritr::ad
