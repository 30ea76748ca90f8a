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
#include "ritr/model.hpp"
#include "ritr/optim.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace ritr::train {

struct TrainConfig {
  double alpha = 10.0;
  double beta = 10.0;
  double gamma = 0.5;
  int r_order = 2;
  int pretrain_iters = 200;
  int train_iters = 1000;
  int update_interval = 20;
  double lr = 1e-3;
  Index hidden = 256;
  Index latent = 64;
  double dropout = 0.5;
  double weight_decay = 5e-4;
  int patience = 10;     // in evaluations
  int eval_every = 25;   // iterations between validation passes
  int min_iters = 600;   // no early stop before this many joint iterations
  bool consistency_in_joint = true;
  std::uint64_t seed = 0;
  model::Variant variant = model::Variant::kRitr;

  void validate() const;
  nlohmann::json to_json() const;
  // Keys present in `j` override `base`; unknown keys are rejected.
  static TrainConfig from_json(const nlohmann::json& j, TrainConfig base);
  static TrainConfig from_json(const nlohmann::json& j);
};

enum class Phase { kPretrain, kTrain, kDone };

std::string_view to_string(Phase p);
Phase parse_phase(std::string_view name);

struct IterationRecord {
  std::int64_t step = 0;  // 1-based over the whole run
  Phase phase = Phase::kPretrain;
  int iteration = 0;      // 1-based within the phase
  double total = 0.0;
  std::optional<double> l_attr;
  std::optional<double> l_struct;
  std::optional<double> l_cons;
  std::optional<double> val_recall10;
  bool affinity_updated = false;
  double wall_ms = 0.0;

  nlohmann::json to_json(bool with_wall_clock) const;
  static IterationRecord from_json(const nlohmann::json& j);
};

struct TrainLog {
  std::vector<IterationRecord> records;

  // One JSON object per line. Without wall clock the text is a pure
  // function of config, data and seed.
  std::string to_jsonl(bool with_wall_clock = true) const;
  static TrainLog from_jsonl(const std::string& text);
};

struct TrainState {
  Phase phase = Phase::kPretrain;
  int iteration = 0;  // completed iterations of the current phase
  model::ModelParams params;
  AdamState adam;
  model::Affinity affinity;

  std::optional<model::ModelParams> best_params;
  std::optional<model::Affinity> best_affinity;
  double best_score = -std::numeric_limits<double>::infinity();
  int best_iteration = 0;
  int bad_evals = 0;
  bool early_stopped = false;

  TrainLog log;
};

// Runs the two-phase schedule one iteration at a time so that a run can be
// checkpointed and resumed at any iteration boundary.
class Trainer {
 public:
  Trainer(const GraphDataset& graph, const AbsencePattern& pattern, TrainConfig config);

  const TrainConfig& config() const { return config_; }
  const model::ModelInputs& inputs() const { return inputs_; }
  const model::VariantTraits& traits() const { return traits_; }
  model::ModelDims dims() const;

  // Glorot parameters from the "init" stream; R starts as the normalized
  // adjacency.
  TrainState initial_state() const;
  // As above, but with the given parameters (e.g. after pre-training).
  TrainState state_from(const model::ModelParams& params, Phase phase) const;

  // One iteration of the current phase. Returns false once the run is done.
  bool step(TrainState& state) const;
  // Steps until done, or at most `max_steps` iterations.
  void run(TrainState& state, std::optional<std::int64_t> max_steps = std::nullopt) const;

  // Eval-mode forward pass: no dropout, unobserved entries fed as zeros.
  Matrix impute(const model::ModelParams& params, const model::Affinity& affinity) const;
  // Mean Recall@10 over the validation nodes; nullopt without any.
  std::optional<double> validation_recall(const model::ModelParams& params,
                                          const model::Affinity& affinity) const;

 private:
  void pretrain_step(TrainState& s) const;
  void train_step(TrainState& s) const;
  void settle(TrainState& s) const;
  AdamState fresh_adam(Phase phase, const model::ModelParams& params) const;

  const GraphDataset& graph_;
  const AbsencePattern& pattern_;
  TrainConfig config_;
  model::VariantTraits traits_;
  model::ModelInputs inputs_;
};

struct PretrainResult {
  model::ModelParams params;
  TrainLog log;
};

// Consistency pre-training only. With zero iterations (or a variant without
// it) the initial parameters are returned untouched.
PretrainResult pretrain_stc(const GraphDataset& graph, const AbsencePattern& pattern,
                            const TrainConfig& config);

struct TrainResult {
  model::ModelParams params;
  TrainLog log;
  model::Affinity affinity;
  int iterations = 0;
  int best_iteration = 0;
  bool early_stopped = false;
};

// Joint training from `warm` (fresh Glorot parameters when absent). The
// returned parameters and R are those of the best validation evaluation
// when validation nodes exist.
TrainResult train_ritr(const GraphDataset& graph, const AbsencePattern& pattern,
                       const TrainConfig& config,
                       const std::optional<model::ModelParams>& warm = std::nullopt);

Matrix impute_final(const model::ModelParams& params, const GraphDataset& graph,
                    const AbsencePattern& pattern, const model::Affinity& affinity,
                    const TrainConfig& config);

// ---- checkpoints --------------------------------------------------------

// Directory holding manifest.json, little-endian binary blobs and the log.
void save_checkpoint(const TrainState& state, const TrainConfig& config,
                     const std::filesystem::path& dir);

struct Checkpoint {
  TrainConfig config;
  TrainState state;
};

Checkpoint load_checkpoint(const std::filesystem::path& dir);

}  // namespace ritr::train
