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

#include "ritr/tape.hpp"

#include "ritr/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ritr::ad {

namespace {

std::string shape_str(const Matrix& m) {
  return "(" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")";
}

void require(bool ok, const std::string& op, const std::string& detail) {
  if (!ok) throw ShapeError(op + ": " + detail);
}

double stable_sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace

Var Tape::push(Matrix value, bool requires_grad, std::function<void(Tape&, std::size_t)> fn) {
  if (consumed_) throw StateError("tape already ran backward; record a new tape");
  if (!ritr::all_finite(value)) throw NumericError("non-finite value produced on tape");
  Node n;
  n.value = std::move(value);
  n.requires_grad = requires_grad;
  if (requires_grad) n.backward = std::move(fn);
  nodes_.push_back(std::move(n));
  return Var{nodes_.size() - 1};
}

Tape::Node& Tape::node(Var v) {
  if (!v.valid() || v.id >= nodes_.size()) throw StateError("invalid tape handle");
  return nodes_[v.id];
}

const Tape::Node& Tape::node(Var v) const {
  if (!v.valid() || v.id >= nodes_.size()) throw StateError("invalid tape handle");
  return nodes_[v.id];
}

template <typename Expr>
void Tape::accumulate(Var v, const Expr& delta) {
  Node& n = node(v);
  if (!n.requires_grad) return;
  if (n.grad.size() == 0) {
    n.grad = delta;
  } else {
    n.grad += delta;
  }
}

Var Tape::parameter(Matrix value) { return push(std::move(value), true, nullptr); }

Var Tape::constant(Matrix value) { return push(std::move(value), false, nullptr); }

Var Tape::matmul(Var a, Var b) {
  const Matrix& av = value(a);
  const Matrix& bv = value(b);
  require(av.cols() == bv.rows(), "matmul", shape_str(av) + " * " + shape_str(bv));
  Matrix out = av * bv;
  return push(std::move(out), needs(a) || needs(b), [a, b](Tape& t, std::size_t self) {
    const Matrix& g = t.nodes_[self].grad;
    if (t.needs(a)) t.accumulate(a, g * t.value(b).transpose());
    if (t.needs(b)) t.accumulate(b, t.value(a).transpose() * g);
  });
}

Var Tape::matmul_nt(Var a, Var b) {
  const Matrix& av = value(a);
  const Matrix& bv = value(b);
  require(av.cols() == bv.cols(), "matmul_nt", shape_str(av) + " * " + shape_str(bv) + "^T");
  Matrix out = av * bv.transpose();
  return push(std::move(out), needs(a) || needs(b), [a, b](Tape& t, std::size_t self) {
    const Matrix& g = t.nodes_[self].grad;
    if (t.needs(a)) t.accumulate(a, g * t.value(b));
    if (t.needs(b)) t.accumulate(b, g.transpose() * t.value(a));
  });
}

Var Tape::spmm(const SparseMatrix& a, Var b) {
  const Matrix& bv = value(b);
  require(a.cols() == bv.rows(), "spmm",
          "(" + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ") * " + shape_str(bv));
  Matrix out = a * bv;
  const SparseMatrix* ap = &a;
  return push(std::move(out), needs(b), [ap, b](Tape& t, std::size_t self) {
    const Matrix& g = t.nodes_[self].grad;
    t.accumulate(b, ap->transpose() * g);
  });
}

Var Tape::const_matmul(const Matrix& a, Var b) {
  const Matrix& bv = value(b);
  require(a.cols() == bv.rows(), "const_matmul", shape_str(a) + " * " + shape_str(bv));
  Matrix out = a * bv;
  const Matrix* ap = &a;
  return push(std::move(out), needs(b), [ap, b](Tape& t, std::size_t self) {
    const Matrix& g = t.nodes_[self].grad;
    t.accumulate(b, ap->transpose() * g);
  });
}

Var Tape::activation(Var x, Activation kind) {
  const Matrix& xv = value(x);
  switch (kind) {
    case Activation::kIdentity:
      return push(xv, needs(x), [x](Tape& t, std::size_t self) {
        t.accumulate(x, t.nodes_[self].grad);
      });
    case Activation::kRelu:
      return push(xv.cwiseMax(0.0), needs(x), [x](Tape& t, std::size_t self) {
        const Matrix& g = t.nodes_[self].grad;
        t.accumulate(x, (t.value(x).array() > 0.0).select(g, 0.0));
      });
    case Activation::kSigmoid:
      return push(xv.unaryExpr(&stable_sigmoid), needs(x), [x](Tape& t, std::size_t self) {
        const Node& n = t.nodes_[self];
        t.accumulate(x, (n.grad.array() * n.value.array() * (1.0 - n.value.array())).matrix());
      });
  }
  throw ArgumentError("unknown activation");
}

Var Tape::dropout(Var x, double rate, bool training, RngStream& stream) {
  if (!(rate >= 0.0 && rate < 1.0)) throw ArgumentError("dropout rate must lie in [0, 1)");
  if (!training || rate == 0.0) return x;
  const Matrix& xv = value(x);
  const double keep_scale = 1.0 / (1.0 - rate);
  Matrix mask(xv.rows(), xv.cols());
  double* m = mask.data();
  for (Index k = 0; k < mask.size(); ++k) m[k] = stream.uniform() < rate ? 0.0 : keep_scale;
  Matrix out = xv.cwiseProduct(mask);
  return push(std::move(out), needs(x), [x, mask = std::move(mask)](Tape& t, std::size_t self) {
    t.accumulate(x, t.nodes_[self].grad.cwiseProduct(mask));
  });
}

Var Tape::gather_rows(Var x, std::span<const NodeId> rows) {
  Matrix out = ritr::gather_rows(value(x), rows);
  std::vector<NodeId> idx(rows.begin(), rows.end());
  return push(std::move(out), needs(x), [x, idx = std::move(idx)](Tape& t, std::size_t self) {
    const Matrix& xv = t.value(x);
    Matrix d = Matrix::Zero(xv.rows(), xv.cols());
    ritr::scatter_add_rows(d, idx, t.nodes_[self].grad);
    t.accumulate(x, d);
  });
}

Var Tape::place_rows(Var a, std::span<const NodeId> rows_a, Var b,
                     std::span<const NodeId> rows_b, Index total_rows) {
  const Matrix& av = value(a);
  const Matrix& bv = value(b);
  require(av.cols() == bv.cols(), "place_rows", "column counts differ");
  require(av.rows() == static_cast<Index>(rows_a.size()) &&
              bv.rows() == static_cast<Index>(rows_b.size()),
          "place_rows", "row lists do not match operand heights");
  require(static_cast<Index>(rows_a.size() + rows_b.size()) == total_rows, "place_rows",
          "row lists do not cover the output");
  std::vector<char> hit(static_cast<std::size_t>(total_rows), 0);
  for (auto r : rows_a) {
    if (r < 0 || r >= total_rows || hit[static_cast<std::size_t>(r)]++) {
      throw RangeError("place_rows: index lists do not partition the rows");
    }
  }
  for (auto r : rows_b) {
    if (r < 0 || r >= total_rows || hit[static_cast<std::size_t>(r)]++) {
      throw RangeError("place_rows: index lists do not partition the rows");
    }
  }
  Matrix out(total_rows, av.cols());
  ritr::scatter_rows(out, rows_a, av);
  ritr::scatter_rows(out, rows_b, bv);
  std::vector<NodeId> ia(rows_a.begin(), rows_a.end());
  std::vector<NodeId> ib(rows_b.begin(), rows_b.end());
  return push(std::move(out), needs(a) || needs(b),
              [a, b, ia = std::move(ia), ib = std::move(ib)](Tape& t, std::size_t self) {
                const Matrix& g = t.nodes_[self].grad;
                if (t.needs(a)) t.accumulate(a, ritr::gather_rows(g, ia));
                if (t.needs(b)) t.accumulate(b, ritr::gather_rows(g, ib));
              });
}

Var Tape::zero_rows(Var x, std::span<const NodeId> rows) {
  Matrix out = value(x);
  for (auto r : rows) {
    if (r < 0 || r >= out.rows()) throw RangeError("zero_rows: index out of range");
    out.row(r).setZero();
  }
  std::vector<NodeId> idx(rows.begin(), rows.end());
  return push(std::move(out), needs(x), [x, idx = std::move(idx)](Tape& t, std::size_t self) {
    Matrix d = t.nodes_[self].grad;
    for (auto r : idx) d.row(r).setZero();
    t.accumulate(x, d);
  });
}

Var Tape::row_normalize(Var x, double floor) {
  const Matrix& xv = value(x);
  Vector norms = xv.rowwise().norm();
  Vector denom = norms.cwiseMax(floor);
  Matrix out = denom.cwiseInverse().asDiagonal() * xv;
  return push(std::move(out), needs(x),
              [x, norms = std::move(norms), floor](Tape& t, std::size_t self) {
                const Node& n = t.nodes_[self];
                const Matrix& g = n.grad;
                const Matrix& y = n.value;
                Matrix d(g.rows(), g.cols());
                for (Index i = 0; i < g.rows(); ++i) {
                  if (norms(i) > floor) {
                    const double proj = y.row(i).dot(g.row(i));
                    d.row(i) = (g.row(i) - proj * y.row(i)) / norms(i);
                  } else {
                    d.row(i) = g.row(i) / floor;
                  }
                }
                t.accumulate(x, d);
              });
}

Var Tape::add(Var a, Var b) {
  const Matrix& av = value(a);
  const Matrix& bv = value(b);
  require(av.rows() == bv.rows() && av.cols() == bv.cols(), "add",
          shape_str(av) + " + " + shape_str(bv));
  return push(av + bv, needs(a) || needs(b), [a, b](Tape& t, std::size_t self) {
    const Matrix& g = t.nodes_[self].grad;
    if (t.needs(a)) t.accumulate(a, g);
    if (t.needs(b)) t.accumulate(b, g);
  });
}

Var Tape::scale(Var x, double factor) {
  return push(value(x) * factor, needs(x), [x, factor](Tape& t, std::size_t self) {
    t.accumulate(x, t.nodes_[self].grad * factor);
  });
}

Var Tape::sum(Var x) {
  Matrix out(1, 1);
  out(0, 0) = value(x).sum();
  return push(std::move(out), needs(x), [x](Tape& t, std::size_t self) {
    const Matrix& xv = t.value(x);
    t.accumulate(x, Matrix::Constant(xv.rows(), xv.cols(), t.nodes_[self].grad(0, 0)));
  });
}

Var Tape::weighted_sum(std::span<const Var> terms, std::span<const double> weights) {
  if (terms.size() != weights.size() || terms.empty()) {
    throw ArgumentError("weighted_sum: need one weight per term");
  }
  Matrix out = Matrix::Zero(1, 1);
  bool any = false;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const Matrix& v = value(terms[k]);
    require(v.rows() == 1 && v.cols() == 1, "weighted_sum", "terms must be scalars");
    out(0, 0) += weights[k] * v(0, 0);
    any = any || needs(terms[k]);
  }
  std::vector<Var> ts(terms.begin(), terms.end());
  std::vector<double> ws(weights.begin(), weights.end());
  return push(std::move(out), any,
              [ts = std::move(ts), ws = std::move(ws)](Tape& t, std::size_t self) {
                const double g = t.nodes_[self].grad(0, 0);
                for (std::size_t k = 0; k < ts.size(); ++k) {
                  if (t.needs(ts[k])) t.accumulate(ts[k], Matrix::Constant(1, 1, g * ws[k]));
                }
              });
}

Var Tape::masked_squared_error(Var pred, const Matrix& target, const Matrix& mask,
                               double factor) {
  const Matrix& pv = value(pred);
  require(pv.rows() == target.rows() && pv.cols() == target.cols() &&
              mask.rows() == target.rows() && mask.cols() == target.cols(),
          "masked_squared_error", shape_str(pv) + " vs " + shape_str(target));
  Matrix diff = mask.cwiseProduct(pv - target);
  Matrix out(1, 1);
  out(0, 0) = factor * diff.squaredNorm();
  return push(std::move(out), needs(pred),
              [pred, diff = std::move(diff), factor](Tape& t, std::size_t self) {
                // mask is 0/1 so mask .* diff == diff.
                t.accumulate(pred, diff * (2.0 * factor * t.nodes_[self].grad(0, 0)));
              });
}

Var Tape::bce_with_logits(Var logits, const SparseMatrix& target, double eps) {
  const Matrix& z = value(logits);
  require(z.rows() == target.rows() && z.cols() == target.cols(), "bce_with_logits",
          shape_str(z) + " vs target");
  const double count = static_cast<double>(z.size());
  const double log_eps = std::log(eps);
  const double log_1m_eps = std::log1p(-eps);

  // Dense pass with t = 0 everywhere, then a correction over the non-zero
  // targets. -t log p - (1 - t) log(1 - p) = softplus(z) - t z when p is not
  // clamped. Rows are processed one at a time so temporaries stay in cache.
  const Index cols = z.cols();
  Matrix d(z.rows(), cols);
  Eigen::ArrayXd e(cols), inv(cols), pr(cols);
  double total = 0.0;
  for (Index i = 0; i < z.rows(); ++i) {
    const auto zr = z.row(i).array().transpose();
    e = (-zr.abs()).exp();
    inv = 1.0 / (1.0 + e);
    pr = (zr >= 0.0).select(inv, e * inv);
    const auto low = pr < eps;
    const auto high = pr > 1.0 - eps;
    total += low.select(-log_1m_eps, high.select(-log_eps, zr.max(0.0) + (1.0 + e).log())).sum();
    d.row(i) = (low || high).select(0.0, pr).transpose().matrix();
    for (SparseMatrix::InnerIterator it(target, i); it; ++it) {
      const Index j = it.col();
      const double t = it.value();
      if (pr(j) < eps) {
        total -= t * (log_eps - log_1m_eps);
      } else if (pr(j) > 1.0 - eps) {
        total -= t * (log_1m_eps - log_eps);
      } else {
        total -= t * z(i, j);
        d(i, j) -= t;
      }
    }
  }
  Matrix out(1, 1);
  out(0, 0) = total / count;
  return push(std::move(out), needs(logits),
              [logits, d = std::move(d), count](Tape& t, std::size_t self) {
                const double g = t.nodes_[self].grad(0, 0) / count;
                t.accumulate(logits, d * g);
              });
}

Var Tape::consistency(Var c, const Matrix& target) {
  const Matrix& cv = value(c);
  require(cv.rows() == cv.cols() && target.rows() == cv.rows() && target.cols() == cv.cols(),
          "consistency", shape_str(cv) + " vs " + shape_str(target));
  const Index n = cv.rows();
  const double diag_w = n > 0 ? 1.0 / static_cast<double>(n) : 0.0;
  const double off_w = n > 1 ? 1.0 / (static_cast<double>(n) * static_cast<double>(n - 1)) : 0.0;
  double diag = 0.0;
  double off = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j) {
        diag += (cv(i, i) - 1.0) * (cv(i, i) - 1.0);
      } else {
        const double e = cv(i, j) - target(i, j);
        off += e * e;
      }
    }
  }
  Matrix out(1, 1);
  out(0, 0) = diag_w * diag + off_w * off;
  const Matrix* tp = &target;
  return push(std::move(out), needs(c), [c, tp, diag_w, off_w](Tape& t, std::size_t self) {
    const double g = t.nodes_[self].grad(0, 0);
    const Matrix& cv = t.value(c);
    Matrix d = (cv - *tp) * (2.0 * off_w * g);
    for (Index i = 0; i < cv.rows(); ++i) d(i, i) = 2.0 * diag_w * g * (cv(i, i) - 1.0);
    t.accumulate(c, d);
  });
}

Var Tape::softmax_cross_entropy(Var logits, std::span<const int> labels) {
  const Matrix& z = value(logits);
  require(z.rows() == static_cast<Index>(labels.size()) && z.rows() > 0,
          "softmax_cross_entropy", "one label per logits row required");
  Matrix prob(z.rows(), z.cols());
  double total = 0.0;
  for (Index i = 0; i < z.rows(); ++i) {
    const int y = labels[static_cast<std::size_t>(i)];
    if (y < 0 || y >= z.cols()) throw RangeError("softmax_cross_entropy: label out of range");
    const double zmax = z.row(i).maxCoeff();
    prob.row(i) = (z.row(i).array() - zmax).exp().matrix();
    const double norm = prob.row(i).sum();
    prob.row(i) /= norm;
    total -= z(i, y) - zmax - std::log(norm);
  }
  Matrix out(1, 1);
  out(0, 0) = total / static_cast<double>(z.rows());
  std::vector<int> ys(labels.begin(), labels.end());
  return push(std::move(out), needs(logits),
              [logits, prob = std::move(prob), ys = std::move(ys)](Tape& t, std::size_t self) {
                const double g = t.nodes_[self].grad(0, 0) / static_cast<double>(prob.rows());
                Matrix d = prob;
                for (Index i = 0; i < d.rows(); ++i) d(i, ys[static_cast<std::size_t>(i)]) -= 1.0;
                t.accumulate(logits, d * g);
              });
}

const Matrix& Tape::value(Var v) const { return node(v).value; }

const Matrix& Tape::grad(Var v) const { return node(v).grad; }

bool Tape::has_grad(Var v) const { return node(v).grad.size() > 0; }

double Tape::scalar(Var v) const {
  const Matrix& m = value(v);
  if (m.rows() != 1 || m.cols() != 1) throw ShapeError("scalar: value is not 1x1");
  return m(0, 0);
}

void Tape::backward(Var loss) {
  if (consumed_) throw StateError("backward already ran on this tape");
  Node& root = node(loss);
  if (root.value.rows() != 1 || root.value.cols() != 1) {
    throw ShapeError("backward: loss must be a 1x1 scalar");
  }
  consumed_ = true;
  if (!root.requires_grad) return;
  root.grad = Matrix::Ones(1, 1);
  for (std::size_t i = loss.id + 1; i-- > 0;) {
    Node& n = nodes_[i];
    if (n.backward && n.grad.size() > 0) n.backward(*this, i);
  }
}

}  // namespace ritr::ad
