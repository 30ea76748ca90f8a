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

#include "ritr/optim.hpp"

#include "ritr/error.hpp"

#include <algorithm>
#include <cmath>

namespace ritr {

AdamState make_adam_state(const AdamOptions& options, std::span<const Matrix* const> params) {
  AdamState s;
  s.options = options;
  for (const Matrix* p : params) {
    s.m.push_back(Matrix::Zero(p->rows(), p->cols()));
    s.v.push_back(Matrix::Zero(p->rows(), p->cols()));
  }
  return s;
}

void adam_step(std::span<Matrix* const> params, std::span<const Matrix* const> grads,
               std::span<const std::string> names, AdamState& state) {
  if (params.size() != grads.size() || params.size() != state.m.size() ||
      names.size() != params.size()) {
    throw ShapeError("adam_step: parameter, gradient and state counts differ");
  }
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (grads[k]->rows() != params[k]->rows() || grads[k]->cols() != params[k]->cols() ||
        state.m[k].rows() != params[k]->rows() || state.m[k].cols() != params[k]->cols()) {
      throw ShapeError("adam_step: shape mismatch for " + names[k]);
    }
    if (!all_finite(*grads[k])) {
      throw NumericError("adam_step: non-finite gradient for " + names[k]);
    }
  }

  const AdamOptions& o = state.options;
  ++state.step;
  const double t = static_cast<double>(state.step);
  const double bc1 = 1.0 - std::pow(o.beta1, t);
  const double bc2 = 1.0 - std::pow(o.beta2, t);
  const double step_size = o.lr / bc1;
  const double inv_sqrt_bc2 = 1.0 / std::sqrt(bc2);

  for (std::size_t k = 0; k < params.size(); ++k) {
    Matrix& p = *params[k];
    const Matrix& g0 = *grads[k];
    auto m = state.m[k].array();
    auto v = state.v[k].array();
    Eigen::ArrayXXd g = g0.array();
    if (o.weight_decay != 0.0) g += o.weight_decay * p.array();
    m = o.beta1 * m + (1.0 - o.beta1) * g;
    v = o.beta2 * v + (1.0 - o.beta2) * g.square();
    p.array() -= step_size * m / (v.sqrt() * inv_sqrt_bc2 + o.eps);
  }
}

Matrix glorot_init(Index rows, Index cols, RngStream stream) {
  if (rows <= 0 || cols <= 0) throw ArgumentError("glorot_init: dimensions must be positive");
  const double a = std::sqrt(6.0 / static_cast<double>(rows + cols));
  Matrix w(rows, cols);
  double* data = w.data();
  for (Index k = 0; k < w.size(); ++k) data[k] = a * (2.0 * stream.uniform_open() - 1.0);
  return w;
}

bool GradCheckReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.ok; });
}

double GradCheckReport::max_rel_error() const {
  double worst = 0.0;
  for (const auto& e : entries) worst = std::max(worst, e.max_rel_error);
  return worst;
}

GradCheckReport grad_check(const LossBuilder& build, std::vector<Matrix> params,
                           std::span<const std::string> names, double h, double tol,
                           double abs_floor) {
  if (names.size() != params.size()) throw ArgumentError("grad_check: one name per parameter");

  auto evaluate = [&](bool with_grad, std::vector<Matrix>* grads_out) {
    ad::Tape tape;
    std::vector<ad::Var> leaves;
    leaves.reserve(params.size());
    for (const Matrix& p : params) leaves.push_back(tape.parameter(p));
    const ad::Var loss = build(tape, leaves);
    const double value = tape.scalar(loss);
    if (with_grad) {
      tape.backward(loss);
      for (std::size_t k = 0; k < params.size(); ++k) {
        grads_out->push_back(tape.has_grad(leaves[k])
                                 ? tape.grad(leaves[k])
                                 : Matrix::Zero(params[k].rows(), params[k].cols()));
      }
    }
    return value;
  };

  std::vector<Matrix> analytic;
  evaluate(true, &analytic);

  GradCheckReport report;
  report.tolerance = tol;
  for (std::size_t k = 0; k < params.size(); ++k) {
    GradCheckEntry entry;
    entry.name = names[k];
    double* data = params[k].data();
    for (Index idx = 0; idx < params[k].size(); ++idx) {
      const double saved = data[idx];
      data[idx] = saved + h;
      const double plus = evaluate(false, nullptr);
      data[idx] = saved - h;
      const double minus = evaluate(false, nullptr);
      data[idx] = saved;
      const double numeric = (plus - minus) / (2.0 * h);
      const double a = analytic[k].data()[idx];
      const double abs_err = std::abs(a - numeric);
      const double rel = abs_err / std::max({std::abs(a), std::abs(numeric), abs_floor});
      if (rel > entry.max_rel_error) {
        entry.max_rel_error = rel;
        entry.worst_index = idx;
      }
      entry.max_abs_error = std::max(entry.max_abs_error, abs_err);
    }
    entry.ok = entry.max_rel_error < tol;
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace ritr
