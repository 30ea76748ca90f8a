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
#include "ritr/tape.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ritr {

struct AdamOptions {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  // Coupled L2: added to the gradient before the moment update.
  double weight_decay = 0.0;
};

struct AdamState {
  AdamOptions options;
  std::int64_t step = 0;
  std::vector<Matrix> m;
  std::vector<Matrix> v;
};

AdamState make_adam_state(const AdamOptions& options, std::span<const Matrix* const> params);

// One bias-corrected Adam update. All gradients are checked before any
// parameter is touched; a non-finite gradient throws NumericError naming
// the parameter and leaves params and state unchanged.
void adam_step(std::span<Matrix* const> params, std::span<const Matrix* const> grads,
               std::span<const std::string> names, AdamState& state);

// Uniform(-a, a) with a = sqrt(6 / (rows + cols)).
Matrix glorot_init(Index rows, Index cols, RngStream stream);

struct GradCheckEntry {
  std::string name;
  double max_rel_error = 0.0;
  double max_abs_error = 0.0;
  Index worst_index = -1;
  bool ok = true;
};

struct GradCheckReport {
  std::vector<GradCheckEntry> entries;
  double tolerance = 0.0;

  bool ok() const;
  double max_rel_error() const;
};

// Builds a scalar loss on `tape` from parameter leaves (one per entry of
// `params`, same order). Must be deterministic.
using LossBuilder = std::function<ad::Var(ad::Tape&, std::span<const ad::Var>)>;

// Compares tape gradients against central differences with step h.
// Relative error per entry is |analytic - numeric| / max(|analytic|,
// |numeric|, abs_floor); entries whose gradients are both below abs_floor
// are judged on absolute error against tol * abs_floor.
GradCheckReport grad_check(const LossBuilder& build, std::vector<Matrix> params,
                           std::span<const std::string> names, double h, double tol,
                           double abs_floor = 1e-6);

}  // namespace ritr
