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

#include "ritr/trainer.hpp"

#include "ritr/error.hpp"
#include "ritr/eval.hpp"

#include <chrono>
#include <numeric>
#include <sstream>

namespace ritr::train {

using model::Affinity;
using model::ModelParams;
using nlohmann::json;

namespace {

template <typename T>
void need(bool ok, const std::string& what) {
  if (!ok) throw T(what);
}

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

}  // namespace

// ---- config -------------------------------------------------------------

void TrainConfig::validate() const {
  need<RangeError>(alpha >= 0.0 && beta >= 0.0, "alpha and beta must be >= 0");
  need<RangeError>(gamma >= 0.0 && gamma <= 1.0, "gamma must lie in [0, 1]");
  need<RangeError>(r_order >= 1, "r_order must be >= 1");
  need<RangeError>(pretrain_iters >= 0 && train_iters >= 0 && min_iters >= 0,
                   "iteration counts must be >= 0");
  need<RangeError>(update_interval >= 1, "update_interval must be >= 1");
  need<RangeError>(lr > 0.0, "lr must be > 0");
  need<RangeError>(hidden >= 1 && latent >= 1, "hidden and latent sizes must be >= 1");
  need<RangeError>(dropout >= 0.0 && dropout < 1.0, "dropout must lie in [0, 1)");
  need<RangeError>(weight_decay >= 0.0, "weight_decay must be >= 0");
  need<RangeError>(patience >= 1 && eval_every >= 1, "patience and eval_every must be >= 1");
}

json TrainConfig::to_json() const {
  return json{{"alpha", alpha},
              {"beta", beta},
              {"gamma", gamma},
              {"r_order", r_order},
              {"pretrain_iters", pretrain_iters},
              {"train_iters", train_iters},
              {"update_interval", update_interval},
              {"lr", lr},
              {"hidden", hidden},
              {"latent", latent},
              {"dropout", dropout},
              {"weight_decay", weight_decay},
              {"patience", patience},
              {"eval_every", eval_every},
              {"min_iters", min_iters},
              {"consistency_in_joint", consistency_in_joint},
              {"seed", seed},
              {"variant", std::string(model::to_string(variant))}};
}

TrainConfig TrainConfig::from_json(const json& j, TrainConfig c) {
  if (!j.is_object()) throw ArgumentError("training config must be a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "alpha") c.alpha = v.get<double>();
      else if (key == "beta") c.beta = v.get<double>();
      else if (key == "gamma") c.gamma = v.get<double>();
      else if (key == "r_order") c.r_order = v.get<int>();
      else if (key == "pretrain_iters") c.pretrain_iters = v.get<int>();
      else if (key == "train_iters") c.train_iters = v.get<int>();
      else if (key == "update_interval") c.update_interval = v.get<int>();
      else if (key == "lr") c.lr = v.get<double>();
      else if (key == "hidden") c.hidden = v.get<Index>();
      else if (key == "latent") c.latent = v.get<Index>();
      else if (key == "dropout") c.dropout = v.get<double>();
      else if (key == "weight_decay") c.weight_decay = v.get<double>();
      else if (key == "patience") c.patience = v.get<int>();
      else if (key == "eval_every") c.eval_every = v.get<int>();
      else if (key == "min_iters") c.min_iters = v.get<int>();
      else if (key == "consistency_in_joint") c.consistency_in_joint = v.get<bool>();
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "variant") c.variant = model::parse_variant(v.get<std::string>());
      else throw ArgumentError("unknown training option '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("bad training option: ") + e.what());
  }
  return c;
}

TrainConfig TrainConfig::from_json(const json& j) { return from_json(j, TrainConfig{}); }

// ---- log ----------------------------------------------------------------

std::string_view to_string(Phase p) {
  switch (p) {
    case Phase::kPretrain:
      return "pretrain";
    case Phase::kTrain:
      return "train";
    case Phase::kDone:
      return "done";
  }
  return "?";
}

Phase parse_phase(std::string_view s) {
  if (s == "pretrain") return Phase::kPretrain;
  if (s == "train") return Phase::kTrain;
  if (s == "done") return Phase::kDone;
  throw FormatError("unknown phase '" + std::string(s) + "'");
}

json IterationRecord::to_json(bool with_wall_clock) const {
  json j{{"step", step},
         {"phase", std::string(train::to_string(phase))},
         {"iteration", iteration},
         {"loss", total},
         {"l_attr", opt_json(l_attr)},
         {"l_struct", opt_json(l_struct)},
         {"l_cons", opt_json(l_cons)},
         {"val_recall10", opt_json(val_recall10)},
         {"affinity_updated", affinity_updated}};
  if (with_wall_clock) j["wall_ms"] = wall_ms;
  return j;
}

IterationRecord IterationRecord::from_json(const json& j) {
  IterationRecord r;
  r.step = j.at("step").get<std::int64_t>();
  r.phase = parse_phase(j.at("phase").get<std::string>());
  r.iteration = j.at("iteration").get<int>();
  r.total = j.at("loss").get<double>();
  r.l_attr = opt_from(j, "l_attr");
  r.l_struct = opt_from(j, "l_struct");
  r.l_cons = opt_from(j, "l_cons");
  r.val_recall10 = opt_from(j, "val_recall10");
  r.affinity_updated = j.value("affinity_updated", false);
  r.wall_ms = j.value("wall_ms", 0.0);
  return r;
}

std::string TrainLog::to_jsonl(bool with_wall_clock) const {
  std::string out;
  for (const auto& r : records) {
    out += r.to_json(with_wall_clock).dump();
    out += '\n';
  }
  return out;
}

TrainLog TrainLog::from_jsonl(const std::string& text) {
  TrainLog log;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      log.records.push_back(IterationRecord::from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw FormatError("train log line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return log;
}

// ---- trainer ------------------------------------------------------------

Trainer::Trainer(const GraphDataset& graph, const AbsencePattern& pattern, TrainConfig config)
    : graph_(graph), pattern_(pattern), config_(config), traits_(model::traits_of(config.variant)) {
  config_.validate();
  pattern_.validate();
  if (pattern_.node_count != graph_.node_count || pattern_.feature_dim != graph_.feature_dim) {
    throw ArgumentError("absence pattern was generated for a different graph");
  }
  inputs_ = model::ModelInputs::build(graph_, pattern_, config_.r_order);
}

model::ModelDims Trainer::dims() const {
  return model::ModelDims{inputs_.nodes, inputs_.features, config_.hidden, config_.latent};
}

AdamState Trainer::fresh_adam(Phase phase, const ModelParams& p) const {
  AdamOptions o;
  o.lr = config_.lr;
  o.weight_decay = config_.weight_decay;
  if (phase == Phase::kPretrain) {
    const std::array<const Matrix*, 2> enc{&p.theta1, &p.psi1};
    return make_adam_state(o, enc);
  }
  return make_adam_state(o, p.all());
}

TrainState Trainer::initial_state() const {
  const Phase first =
      traits_.pretrain_stc && config_.pretrain_iters > 0 ? Phase::kPretrain : Phase::kTrain;
  return state_from(ModelParams::glorot(dims(), RngStream::named(config_.seed, "init")), first);
}

TrainState Trainer::state_from(const ModelParams& params, Phase phase) const {
  params.validate(dims());
  TrainState s;
  s.phase = phase;
  s.params = params;
  s.adam = fresh_adam(phase, params);
  s.affinity = Affinity(inputs_.adj.entries);
  settle(s);
  return s;
}

void Trainer::settle(TrainState& s) const {
  if (s.phase == Phase::kPretrain &&
      (!traits_.pretrain_stc || s.iteration >= config_.pretrain_iters)) {
    s.phase = Phase::kTrain;
    s.iteration = 0;
    s.adam = fresh_adam(Phase::kTrain, s.params);
  }
  if (s.phase == Phase::kTrain && (s.iteration >= config_.train_iters || s.early_stopped)) {
    s.phase = Phase::kDone;
    if (s.best_params) {
      s.params = *s.best_params;
      s.affinity = *s.best_affinity;
    }
  }
}

bool Trainer::step(TrainState& s) const {
  if (s.phase == Phase::kDone) return false;
  const int t = s.iteration + 1;
  try {
    if (s.phase == Phase::kPretrain) {
      pretrain_step(s);
    } else {
      train_step(s);
    }
  } catch (const NumericError& e) {
    throw NumericError(std::string(to_string(s.phase)) + " iteration " + std::to_string(t) +
                       ": " + e.what());
  }
  settle(s);
  return s.phase != Phase::kDone;
}

void Trainer::run(TrainState& s, std::optional<std::int64_t> max_steps) const {
  for (std::int64_t n = 0; !max_steps || n < *max_steps; ++n) {
    if (!step(s)) break;
  }
}

void Trainer::pretrain_step(TrainState& s) const {
  const auto start = std::chrono::steady_clock::now();
  const int t = s.iteration + 1;
  RngStream noise = RngStream::named(config_.seed, "noise").fork("pretrain").fork(t);
  RngStream drop = RngStream::named(config_.seed, "dropout").fork("pretrain").fork(t);
  const Matrix x_tilde = traits_.noise_corruption
                             ? model::corrupt_incomplete(inputs_.observed, noise)
                             : inputs_.observed.values;

  ad::Tape tape;
  const auto pv = model::ParamVars::record(tape, s.params);
  const model::LayerOptions opt{true, config_.dropout, &drop};
  const auto enc = model::encode(tape, inputs_, pv, x_tilde, opt, true);
  const ad::Var loss = tape.scale(enc.l_cons, config_.beta);
  tape.backward(loss);

  auto grad_or_zero = [&](ad::Var v, const Matrix& like) {
    return tape.has_grad(v) ? tape.grad(v) : Matrix(Matrix::Zero(like.rows(), like.cols()));
  };
  const Matrix g1 = grad_or_zero(pv.theta1, s.params.theta1);
  const Matrix g2 = grad_or_zero(pv.psi1, s.params.psi1);
  const std::array<Matrix*, 2> ps{&s.params.theta1, &s.params.psi1};
  const std::array<const Matrix*, 2> gs{&g1, &g2};
  static const std::array<std::string, 2> names{"theta1", "psi1"};
  adam_step(ps, gs, names, s.adam);

  IterationRecord r;
  r.step = static_cast<std::int64_t>(s.log.records.size()) + 1;
  r.phase = Phase::kPretrain;
  r.iteration = t;
  r.total = tape.scalar(loss);
  r.l_cons = tape.scalar(enc.l_cons);
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  s.log.records.push_back(r);
  s.iteration = t;
}

void Trainer::train_step(TrainState& s) const {
  const auto start = std::chrono::steady_clock::now();
  const int t = s.iteration + 1;
  RngStream noise = RngStream::named(config_.seed, "noise").fork("train").fork(t);
  RngStream drop = RngStream::named(config_.seed, "dropout").fork("train").fork(t);
  const Matrix x_tilde = traits_.noise_corruption
                             ? model::corrupt_incomplete(inputs_.observed, noise)
                             : inputs_.observed.values;
  const bool with_c = traits_.consistency_in_joint && config_.consistency_in_joint;

  ad::Tape tape;
  const auto pv = model::ParamVars::record(tape, s.params);
  const model::LayerOptions opt{true, config_.dropout, &drop};
  const auto enc = model::encode(tape, inputs_, pv, x_tilde, opt, with_c);
  auto imp = model::impute(tape, inputs_, enc, s.affinity, traits_);
  bool updated = false;
  if (traits_.update_affinity && t % config_.update_interval == 0) {
    const Matrix sim = model::self_correlation(tape.value(imp.h_tilde));
    s.affinity = model::update_affinity(inputs_.adj.entries, sim, config_.gamma);
    imp = model::impute(tape, inputs_, enc, s.affinity, traits_);
    updated = true;
  }
  const auto dec = model::decode(tape, inputs_, pv, enc, imp, opt, false, true);
  const ad::Var loss =
      model::total_loss(tape, dec.l_attr, dec.l_struct, with_c ? enc.l_cons : ad::Var{},
                        config_.alpha, config_.beta);
  tape.backward(loss);

  const auto vars = pv.all();
  auto params = s.params.all();
  std::array<Matrix, ModelParams::kCount> grads;
  std::array<const Matrix*, ModelParams::kCount> gptr{};
  for (std::size_t k = 0; k < ModelParams::kCount; ++k) {
    grads[k] = tape.has_grad(vars[k]) ? tape.grad(vars[k])
                                      : Matrix(Matrix::Zero(params[k]->rows(), params[k]->cols()));
    gptr[k] = &grads[k];
  }
  adam_step(params, gptr, ModelParams::names(), s.adam);

  IterationRecord r;
  r.step = static_cast<std::int64_t>(s.log.records.size()) + 1;
  r.phase = Phase::kTrain;
  r.iteration = t;
  r.total = tape.scalar(loss);
  r.l_attr = tape.scalar(dec.l_attr);
  r.l_struct = tape.scalar(dec.l_struct);
  if (with_c) r.l_cons = tape.scalar(enc.l_cons);
  r.affinity_updated = updated;
  s.iteration = t;

  if (t % config_.eval_every == 0) {
    if (const auto val = validation_recall(s.params, s.affinity)) {
      r.val_recall10 = *val;
      if (*val > s.best_score) {
        s.best_score = *val;
        s.best_iteration = t;
        s.bad_evals = 0;
        s.best_params = s.params;
        s.best_affinity = s.affinity;
      } else {
        ++s.bad_evals;
      }
      if (t >= config_.min_iters && s.bad_evals >= config_.patience) s.early_stopped = true;
    }
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  s.log.records.push_back(r);
}

Matrix Trainer::impute(const ModelParams& params, const Affinity& affinity) const {
  params.validate(dims());
  ad::Tape tape;
  const auto pv = model::ParamVars::record(tape, params);
  const model::LayerOptions opt{};
  const auto enc = model::encode(tape, inputs_, pv, inputs_.observed.values, opt, false);
  const auto imp = model::impute(tape, inputs_, enc, affinity, traits_);
  const auto dec = model::decode(tape, inputs_, pv, enc, imp, opt, true, false);
  return tape.value(dec.x_hat);
}

std::optional<double> Trainer::validation_recall(const ModelParams& params,
                                                 const Affinity& affinity) const {
  const auto& val = pattern_.validation_nodes;
  if (val.empty()) return std::nullopt;
  ad::Tape tape;
  const auto pv = model::ParamVars::record(tape, params);
  const model::LayerOptions opt{};
  const auto enc = model::encode(tape, inputs_, pv, inputs_.observed.values, opt, false);
  const auto imp = model::impute(tape, inputs_, enc, affinity, traits_);
  const ad::Var x = model::decode_attributes(tape, imp.h_tilde, inputs_.adj.entries, pv.phi1,
                                             pv.phi2, opt, std::span<const NodeId>(val));
  const Matrix truth = gather_rows(graph_.features, val);
  std::vector<NodeId> rows(val.size());
  std::iota(rows.begin(), rows.end(), NodeId{0});
  const int ks[] = {10};
  const auto report = eval::profile_eval(tape.value(x), truth, rows, ks);
  if (report.evaluated == 0) return std::nullopt;
  return report.recall[0];
}

// ---- free-function forms ------------------------------------------------

PretrainResult pretrain_stc(const GraphDataset& graph, const AbsencePattern& pattern,
                            const TrainConfig& config) {
  const Trainer trainer(graph, pattern, config);
  TrainState s = trainer.initial_state();
  while (s.phase == Phase::kPretrain) trainer.step(s);
  return PretrainResult{std::move(s.params), std::move(s.log)};
}

TrainResult train_ritr(const GraphDataset& graph, const AbsencePattern& pattern,
                       const TrainConfig& config, const std::optional<ModelParams>& warm) {
  const Trainer trainer(graph, pattern, config);
  TrainState s = trainer.state_from(
      warm ? *warm : ModelParams::glorot(trainer.dims(), RngStream::named(config.seed, "init")),
      Phase::kTrain);
  const int before = s.iteration;
  trainer.run(s);
  TrainResult out;
  out.iterations = static_cast<int>(s.log.records.size()) + before;
  out.best_iteration = s.best_iteration;
  out.early_stopped = s.early_stopped;
  out.params = std::move(s.params);
  out.affinity = std::move(s.affinity);
  out.log = std::move(s.log);
  return out;
}

Matrix impute_final(const ModelParams& params, const GraphDataset& graph,
                    const AbsencePattern& pattern, const Affinity& affinity,
                    const TrainConfig& config) {
  const Trainer trainer(graph, pattern, config);
  return trainer.impute(params, affinity);
}

}  // namespace ritr::train
