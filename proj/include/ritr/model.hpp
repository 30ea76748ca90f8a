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
#include "ritr/linalg.hpp"
#include "ritr/rng.hpp"
#include "ritr/tape.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ritr::model {

inline constexpr double kNormFloor = 1e-12;
inline constexpr double kBceClamp = 1e-7;

struct ModelDims {
  Index nodes = 0;
  Index features = 0;
  Index hidden = 256;
  Index latent = 64;
};

// Attribute encoder (theta: D->h->d), structure encoder (psi: N->h->d) and
// decoder (phi: d->h->D). No bias terms.
struct ModelParams {
  static constexpr std::size_t kCount = 6;
  static const std::array<std::string, kCount>& names();

  Matrix theta1, theta2, psi1, psi2, phi1, phi2;

  static ModelParams glorot(const ModelDims& dims, RngStream stream);
  static ModelParams zeros(const ModelDims& dims);

  std::array<Matrix*, kCount> all();
  std::array<const Matrix*, kCount> all() const;
  void validate(const ModelDims& dims) const;
};

// How the latent rows of attribute-missing nodes are seeded before refinement.
enum class MissingInit { kStructure, kZero };

enum class Variant { kRitr, kItr, kOursZ, kOursS, kNoStc, kNoItr, kNoIr, kNoAsu };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);

// Switches that define each variant.
struct VariantTraits {
  bool pretrain_stc = true;        // run the consistency pre-training phase
  bool consistency_in_joint = true;  // include beta * L_C in the joint objective
  bool noise_corruption = true;    // Gaussian fill of unobserved entries while training
  MissingInit init = MissingInit::kStructure;
  bool refine = true;              // H = R H_I
  bool recompose = true;           // restore attribute rows after refinement
  bool update_affinity = true;     // periodic R = gamma A + (1 - gamma) S
};

VariantTraits traits_of(Variant v);

// Per-(graph, pattern) constants used by every forward pass.
struct ModelInputs {
  Index nodes = 0;
  Index features = 0;
  std::vector<NodeId> incomplete;
  std::vector<NodeId> missing;
  NormalizedAdjacency adj;          // full graph
  NormalizedAdjacency adj_incomplete;  // induced sub-graph on incomplete nodes
  Matrix consistency_target;        // dense r-th power of adj_incomplete
  IncompleteAttributes observed;    // X^I and M

  static ModelInputs build(const GraphDataset& graph, const AbsencePattern& pattern, int r_order);
};

// Propagation matrix for refinement: starts as the sparse normalized
// adjacency and becomes dense after the first blend with S.
class Affinity {
 public:
  Affinity() = default;
  explicit Affinity(SparseMatrix sparse) : sparse_(std::move(sparse)), is_sparse_(true) {}
  explicit Affinity(Matrix dense) : dense_(std::move(dense)), is_sparse_(false) {}

  bool is_sparse() const { return is_sparse_; }
  Index dim() const { return is_sparse_ ? sparse_.rows() : dense_.rows(); }
  Matrix to_dense() const { return is_sparse_ ? Matrix(sparse_) : dense_; }
  const SparseMatrix& sparse() const { return sparse_; }
  const Matrix& dense() const { return dense_; }

  // R * x, with R held constant.
  ad::Var apply(ad::Tape& tape, ad::Var x) const;

 private:
  SparseMatrix sparse_;
  Matrix dense_;
  bool is_sparse_ = true;
};

struct LayerOptions {
  bool training = false;
  double dropout = 0.0;
  RngStream* stream = nullptr;  // required when training with dropout > 0
};

struct ParamVars {
  ad::Var theta1, theta2, psi1, psi2, phi1, phi2;

  static ParamVars record(ad::Tape& tape, const ModelParams& params);
  std::array<ad::Var, ModelParams::kCount> all() const;
};

struct EncoderOutput {
  ad::Var layer1;
  ad::Var output;
};

// Observed entries copied verbatim, unobserved entries drawn from N(0, 1).
Matrix corrupt_incomplete(const IncompleteAttributes& x, RngStream& noise);

EncoderOutput encode_attributes(ad::Tape& tape, ad::Var x_tilde, const SparseMatrix& adj_incomplete,
                                ad::Var theta1, ad::Var theta2, const LayerOptions& opt);

// The identity input is never materialized: I * psi1 == psi1.
EncoderOutput encode_structure(ad::Tape& tape, const SparseMatrix& adj, ad::Var psi1, ad::Var psi2,
                               const LayerOptions& opt);

// Cosine similarities between attribute rows and the structure rows picked
// at `incomplete` (rows normalized with a 1e-12 norm floor).
ad::Var correlation_matrix(ad::Tape& tape, ad::Var attr_layer1, ad::Var struct_layer1,
                           std::span<const NodeId> incomplete);

ad::Var consistency_loss(ad::Tape& tape, ad::Var c, const Matrix& high_order_adj);

// Positional placement: incomplete rows from the attribute embeddings,
// missing rows from the structure embeddings (or zeros).
ad::Var initial_impute(ad::Tape& tape, ad::Var h_attr, ad::Var h_struct,
                       std::span<const NodeId> incomplete, std::span<const NodeId> missing,
                       MissingInit init);

ad::Var refine_impute(ad::Tape& tape, const Affinity& affinity, ad::Var h_init);

// Incomplete rows replaced by the attribute embeddings, missing rows kept.
ad::Var recompose(ad::Tape& tape, ad::Var h_refined, ad::Var h_attr,
                  std::span<const NodeId> incomplete, std::span<const NodeId> missing);

// Clamped cosine self-similarity, then D^-1/2 Y D^-1/2. A zero row keeps only
// its self-loop.
Matrix self_correlation(const Matrix& h);

Affinity update_affinity(const SparseMatrix& adj, const Matrix& s, double gamma);

// Two GCN layers, ReLU then identity. With `rows`, only those output rows
// are produced (the hidden layer is still computed for every node).
ad::Var decode_attributes(ad::Tape& tape, ad::Var h, const SparseMatrix& adj, ad::Var phi1,
                          ad::Var phi2, const LayerOptions& opt,
                          std::optional<std::span<const NodeId>> rows = std::nullopt);

// Logits H_S H~^T; sigmoid gives the rebuilt adjacency.
ad::Var adjacency_logits(ad::Tape& tape, ad::Var h_struct, ad::Var h_tilde);
Matrix reconstruct_adjacency(const Matrix& h_struct, const Matrix& h_tilde);

// ||M .* (X^I - X^I_hat)||_F^2 / (2 N^I)
ad::Var attribute_loss(ad::Tape& tape, ad::Var x_hat_incomplete, const IncompleteAttributes& x);

ad::Var structure_loss(ad::Tape& tape, ad::Var logits, const SparseMatrix& adj);

// alpha * L_A + L_S + beta * L_C. Throws NumericError naming a non-finite
// component. Invalid vars are treated as absent terms.
ad::Var total_loss(ad::Tape& tape, ad::Var l_attr, ad::Var l_struct, ad::Var l_cons, double alpha,
                   double beta);

// ---- assembled passes -------------------------------------------------

struct EncodeResult {
  EncoderOutput attr;
  EncoderOutput structure;
  ad::Var correlation;  // invalid when not requested
  ad::Var l_cons;       // invalid when not requested
};

EncodeResult encode(ad::Tape& tape, const ModelInputs& in, const ParamVars& p,
                    const Matrix& x_tilde, const LayerOptions& opt, bool with_consistency);

struct ImputeResult {
  ad::Var h_init;
  ad::Var h_refined;
  ad::Var h_tilde;
};

ImputeResult impute(ad::Tape& tape, const ModelInputs& in, const EncodeResult& enc,
                    const Affinity& affinity, const VariantTraits& traits);

struct DecodeResult {
  ad::Var x_hat;   // incomplete rows only when `all_rows` is false
  ad::Var logits;  // invalid when losses are not requested
  ad::Var l_attr;
  ad::Var l_struct;
};

DecodeResult decode(ad::Tape& tape, const ModelInputs& in, const ParamVars& p,
                    const EncodeResult& enc, const ImputeResult& imp, const LayerOptions& opt,
                    bool all_rows, bool with_losses);

}  // namespace ritr::model
