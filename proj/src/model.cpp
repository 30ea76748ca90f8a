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

#include "ritr/model.hpp"

#include "ritr/error.hpp"
#include "ritr/optim.hpp"

#include <cmath>

namespace ritr::model {

namespace {

ad::Var drop(ad::Tape& tape, ad::Var x, const LayerOptions& opt) {
  if (!opt.training || opt.dropout == 0.0) return x;
  if (opt.stream == nullptr) throw StateError("dropout requires a random stream");
  return tape.dropout(x, opt.dropout, true, *opt.stream);
}

void expect_shape(const Matrix& m, Index rows, Index cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols) {
    throw ShapeError(std::string(name) + ": expected " + std::to_string(rows) + "x" +
                     std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
  }
}

}  // namespace

const std::array<std::string, ModelParams::kCount>& ModelParams::names() {
  static const std::array<std::string, kCount> kNames = {"theta1", "theta2", "psi1",
                                                         "psi2",   "phi1",   "phi2"};
  return kNames;
}

ModelParams ModelParams::glorot(const ModelDims& d, RngStream stream) {
  ModelParams p;
  p.theta1 = glorot_init(d.features, d.hidden, stream.fork("theta1"));
  p.theta2 = glorot_init(d.hidden, d.latent, stream.fork("theta2"));
  p.psi1 = glorot_init(d.nodes, d.hidden, stream.fork("psi1"));
  p.psi2 = glorot_init(d.hidden, d.latent, stream.fork("psi2"));
  p.phi1 = glorot_init(d.latent, d.hidden, stream.fork("phi1"));
  p.phi2 = glorot_init(d.hidden, d.features, stream.fork("phi2"));
  return p;
}

ModelParams ModelParams::zeros(const ModelDims& d) {
  ModelParams p;
  p.theta1 = Matrix::Zero(d.features, d.hidden);
  p.theta2 = Matrix::Zero(d.hidden, d.latent);
  p.psi1 = Matrix::Zero(d.nodes, d.hidden);
  p.psi2 = Matrix::Zero(d.hidden, d.latent);
  p.phi1 = Matrix::Zero(d.latent, d.hidden);
  p.phi2 = Matrix::Zero(d.hidden, d.features);
  return p;
}

std::array<Matrix*, ModelParams::kCount> ModelParams::all() {
  return {&theta1, &theta2, &psi1, &psi2, &phi1, &phi2};
}

std::array<const Matrix*, ModelParams::kCount> ModelParams::all() const {
  return {&theta1, &theta2, &psi1, &psi2, &phi1, &phi2};
}

void ModelParams::validate(const ModelDims& d) const {
  expect_shape(theta1, d.features, d.hidden, "theta1");
  expect_shape(theta2, d.hidden, d.latent, "theta2");
  expect_shape(psi1, d.nodes, d.hidden, "psi1");
  expect_shape(psi2, d.hidden, d.latent, "psi2");
  expect_shape(phi1, d.latent, d.hidden, "phi1");
  expect_shape(phi2, d.hidden, d.features, "phi2");
  for (const Matrix* m : all()) {
    if (!all_finite(*m)) throw NumericError("model parameters contain non-finite values");
  }
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::kRitr: return "ritr";
    case Variant::kItr: return "itr";
    case Variant::kOursZ: return "ours_z";
    case Variant::kOursS: return "ours_s";
    case Variant::kNoStc: return "no_stc";
    case Variant::kNoItr: return "no_itr";
    case Variant::kNoIr: return "no_ir";
    case Variant::kNoAsu: return "no_asu";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  for (Variant v : {Variant::kRitr, Variant::kItr, Variant::kOursZ, Variant::kOursS,
                    Variant::kNoStc, Variant::kNoItr, Variant::kNoIr, Variant::kNoAsu}) {
    if (to_string(v) == name) return v;
  }
  throw ArgumentError("unknown variant '" + std::string(name) + "'");
}

VariantTraits traits_of(Variant v) {
  VariantTraits t;
  switch (v) {
    case Variant::kRitr:
      break;
    case Variant::kItr:
    case Variant::kNoStc:
      t.pretrain_stc = false;
      t.consistency_in_joint = false;
      t.noise_corruption = false;
      break;
    case Variant::kOursZ:
    case Variant::kNoItr:
      t.init = MissingInit::kZero;
      t.refine = false;
      t.update_affinity = false;
      break;
    case Variant::kOursS:
      t.refine = false;
      t.update_affinity = false;
      break;
    case Variant::kNoIr:
      t.recompose = false;
      break;
    case Variant::kNoAsu:
      t.update_affinity = false;
      break;
  }
  return t;
}

ModelInputs ModelInputs::build(const GraphDataset& graph, const AbsencePattern& pattern,
                               int r_order) {
  ModelInputs in;
  in.observed = apply_pattern(graph, pattern);
  in.nodes = graph.node_count;
  in.features = graph.feature_dim;
  in.incomplete = pattern.incomplete_nodes;
  in.missing = pattern.missing_nodes;
  in.adj = normalize_adjacency(graph);
  in.adj_incomplete = normalize_adjacency(graph, std::span<const NodeId>(in.incomplete));
  in.consistency_target = power_adjacency(in.adj_incomplete, r_order).dense();
  return in;
}

ad::Var Affinity::apply(ad::Tape& tape, ad::Var x) const {
  return is_sparse_ ? tape.spmm(sparse_, x) : tape.const_matmul(dense_, x);
}

ParamVars ParamVars::record(ad::Tape& tape, const ModelParams& p) {
  ParamVars v;
  v.theta1 = tape.parameter(p.theta1);
  v.theta2 = tape.parameter(p.theta2);
  v.psi1 = tape.parameter(p.psi1);
  v.psi2 = tape.parameter(p.psi2);
  v.phi1 = tape.parameter(p.phi1);
  v.phi2 = tape.parameter(p.phi2);
  return v;
}

std::array<ad::Var, ModelParams::kCount> ParamVars::all() const {
  return {theta1, theta2, psi1, psi2, phi1, phi2};
}

Matrix corrupt_incomplete(const IncompleteAttributes& x, RngStream& noise) {
  if (x.values.rows() != x.mask.rows() || x.values.cols() != x.mask.cols()) {
    throw ShapeError("corrupt_incomplete: values and mask differ in shape");
  }
  Matrix out = x.values;
  double* o = out.data();
  const double* m = x.mask.data();
  for (Index k = 0; k < out.size(); ++k) {
    if (m[k] == 0.0) o[k] = noise.normal();
  }
  return out;
}

EncoderOutput encode_attributes(ad::Tape& tape, ad::Var x_tilde,
                                const SparseMatrix& adj_incomplete, ad::Var theta1,
                                ad::Var theta2, const LayerOptions& opt) {
  EncoderOutput out;
  out.layer1 = tape.relu(tape.spmm(adj_incomplete, tape.matmul(drop(tape, x_tilde, opt), theta1)));
  out.output = tape.relu(tape.spmm(adj_incomplete, tape.matmul(drop(tape, out.layer1, opt), theta2)));
  return out;
}

EncoderOutput encode_structure(ad::Tape& tape, const SparseMatrix& adj, ad::Var psi1,
                               ad::Var psi2, const LayerOptions& opt) {
  EncoderOutput out;
  out.layer1 = tape.relu(tape.spmm(adj, psi1));
  out.output = tape.relu(tape.spmm(adj, tape.matmul(drop(tape, out.layer1, opt), psi2)));
  return out;
}

ad::Var correlation_matrix(ad::Tape& tape, ad::Var attr_layer1, ad::Var struct_layer1,
                           std::span<const NodeId> incomplete) {
  const ad::Var picked = tape.gather_rows(struct_layer1, incomplete);
  if (tape.value(attr_layer1).cols() != tape.value(picked).cols()) {
    throw ShapeError("correlation_matrix: layer-1 widths differ");
  }
  return tape.matmul_nt(tape.row_normalize(attr_layer1, kNormFloor),
                        tape.row_normalize(picked, kNormFloor));
}

ad::Var consistency_loss(ad::Tape& tape, ad::Var c, const Matrix& high_order_adj) {
  return tape.consistency(c, high_order_adj);
}

ad::Var initial_impute(ad::Tape& tape, ad::Var h_attr, ad::Var h_struct,
                       std::span<const NodeId> incomplete, std::span<const NodeId> missing,
                       MissingInit init) {
  const Index n = tape.value(h_struct).rows();
  ad::Var missing_rows;
  if (init == MissingInit::kStructure) {
    missing_rows = tape.gather_rows(h_struct, missing);
  } else {
    missing_rows = tape.constant(
        Matrix::Zero(static_cast<Index>(missing.size()), tape.value(h_attr).cols()));
  }
  return tape.place_rows(h_attr, incomplete, missing_rows, missing, n);
}

ad::Var refine_impute(ad::Tape& tape, const Affinity& affinity, ad::Var h_init) {
  return affinity.apply(tape, h_init);
}

ad::Var recompose(ad::Tape& tape, ad::Var h_refined, ad::Var h_attr,
                  std::span<const NodeId> incomplete, std::span<const NodeId> missing) {
  const Index n = tape.value(h_refined).rows();
  return tape.place_rows(h_attr, incomplete, tape.gather_rows(h_refined, missing), missing, n);
}

Matrix self_correlation(const Matrix& h) {
  const Index n = h.rows();
  Vector norms = h.rowwise().norm();
  Matrix unit = norms.cwiseMax(kNormFloor).cwiseInverse().asDiagonal() * h;
  Matrix y = unit * unit.transpose();
  for (Index i = 0; i < n; ++i) {
    y(i, i) = 1.0;
    for (Index j = i + 1; j < n; ++j) {
      const double v = std::max(0.0, y(i, j));
      y(i, j) = v;
      y(j, i) = v;
    }
  }
  for (Index i = 0; i < n; ++i) {
    if (norms(i) <= kNormFloor) {
      y.row(i).setZero();
      y.col(i).setZero();
      y(i, i) = 1.0;
    }
  }
  Vector inv_sqrt_deg = y.rowwise().sum().cwiseSqrt().cwiseInverse();
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      const double v = inv_sqrt_deg(i) * y(i, j) * inv_sqrt_deg(j);
      y(i, j) = v;
      y(j, i) = v;
    }
  }
  return y;
}

Affinity update_affinity(const SparseMatrix& adj, const Matrix& s, double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ArgumentError("gamma must lie in [0, 1]");
  if (s.rows() != adj.rows() || s.cols() != adj.cols()) {
    throw ShapeError("update_affinity: S and adjacency differ in shape");
  }
  if (gamma == 1.0) return Affinity(SparseMatrix(adj));
  Matrix r = (1.0 - gamma) * s;
  if (gamma != 0.0) {
    for (Index i = 0; i < adj.outerSize(); ++i) {
      for (SparseMatrix::InnerIterator it(adj, i); it; ++it) {
        r(it.row(), it.col()) += gamma * it.value();
      }
    }
  }
  return Affinity(std::move(r));
}

ad::Var decode_attributes(ad::Tape& tape, ad::Var h, const SparseMatrix& adj, ad::Var phi1,
                          ad::Var phi2, const LayerOptions& opt,
                          std::optional<std::span<const NodeId>> rows) {
  const ad::Var z1 = tape.relu(tape.spmm(adj, tape.matmul(drop(tape, h, opt), phi1)));
  ad::Var propagated = tape.spmm(adj, drop(tape, z1, opt));
  if (rows) propagated = tape.gather_rows(propagated, *rows);
  return tape.matmul(propagated, phi2);
}

ad::Var adjacency_logits(ad::Tape& tape, ad::Var h_struct, ad::Var h_tilde) {
  if (tape.value(h_struct).cols() != tape.value(h_tilde).cols()) {
    throw ShapeError("adjacency_logits: latent widths differ");
  }
  return tape.matmul_nt(h_struct, h_tilde);
}

Matrix reconstruct_adjacency(const Matrix& h_struct, const Matrix& h_tilde) {
  ad::Tape tape;
  const ad::Var logits = adjacency_logits(tape, tape.constant(h_struct), tape.constant(h_tilde));
  return tape.value(tape.sigmoid(logits));
}

ad::Var attribute_loss(ad::Tape& tape, ad::Var x_hat_incomplete, const IncompleteAttributes& x) {
  const auto n = static_cast<double>(x.values.rows());
  if (n == 0) return tape.constant(Matrix::Zero(1, 1));
  return tape.masked_squared_error(x_hat_incomplete, x.values, x.mask, 1.0 / (2.0 * n));
}

ad::Var structure_loss(ad::Tape& tape, ad::Var logits, const SparseMatrix& adj) {
  return tape.bce_with_logits(logits, adj, kBceClamp);
}

ad::Var total_loss(ad::Tape& tape, ad::Var l_attr, ad::Var l_struct, ad::Var l_cons,
                   double alpha, double beta) {
  std::vector<ad::Var> terms;
  std::vector<double> weights;
  auto add = [&](ad::Var v, double w, const char* name) {
    if (!v.valid()) return;
    if (!std::isfinite(tape.scalar(v))) throw NumericError(std::string(name) + " is not finite");
    terms.push_back(v);
    weights.push_back(w);
  };
  add(l_attr, alpha, "L_A");
  add(l_struct, 1.0, "L_S");
  add(l_cons, beta, "L_C");
  if (terms.empty()) throw ArgumentError("total_loss: no loss terms");
  return tape.weighted_sum(terms, weights);
}

EncodeResult encode(ad::Tape& tape, const ModelInputs& in, const ParamVars& p,
                    const Matrix& x_tilde, const LayerOptions& opt, bool with_consistency) {
  EncodeResult r;
  r.attr = encode_attributes(tape, tape.constant(x_tilde), in.adj_incomplete.entries, p.theta1,
                             p.theta2, opt);
  r.structure = encode_structure(tape, in.adj.entries, p.psi1, p.psi2, opt);
  if (with_consistency) {
    r.correlation = correlation_matrix(tape, r.attr.layer1, r.structure.layer1, in.incomplete);
    r.l_cons = consistency_loss(tape, r.correlation, in.consistency_target);
  }
  return r;
}

ImputeResult impute(ad::Tape& tape, const ModelInputs& in, const EncodeResult& enc,
                    const Affinity& affinity, const VariantTraits& traits) {
  ImputeResult r;
  r.h_init = initial_impute(tape, enc.attr.output, enc.structure.output, in.incomplete,
                            in.missing, traits.init);
  r.h_refined = traits.refine ? refine_impute(tape, affinity, r.h_init) : r.h_init;
  r.h_tilde = traits.recompose
                  ? recompose(tape, r.h_refined, enc.attr.output, in.incomplete, in.missing)
                  : r.h_refined;
  return r;
}

DecodeResult decode(ad::Tape& tape, const ModelInputs& in, const ParamVars& p,
                    const EncodeResult& enc, const ImputeResult& imp, const LayerOptions& opt,
                    bool all_rows, bool with_losses) {
  DecodeResult r;
  if (all_rows) {
    r.x_hat = decode_attributes(tape, imp.h_tilde, in.adj.entries, p.phi1, p.phi2, opt);
  } else {
    r.x_hat = decode_attributes(tape, imp.h_tilde, in.adj.entries, p.phi1, p.phi2, opt,
                                std::span<const NodeId>(in.incomplete));
  }
  if (with_losses) {
    const ad::Var x_hat_inc = all_rows ? tape.gather_rows(r.x_hat, in.incomplete) : r.x_hat;
    r.l_attr = attribute_loss(tape, x_hat_inc, in.observed);
    r.logits = adjacency_logits(tape, enc.structure.output, imp.h_tilde);
    r.l_struct = structure_loss(tape, r.logits, in.adj.entries);
  }
  return r;
}

}  // namespace ritr::model
