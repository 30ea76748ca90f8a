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

// Scalar-loop oracles and toy fixtures shared by the unit tests and the
// acceptance runner. Nothing here calls the routine it checks.

#pragma once

#include "ritr/graph_io.hpp"
#include "ritr/model.hpp"
#include "ritr/optim.hpp"
#include "ritr/rng.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace ritr::testing {

inline Matrix random_matrix(Index rows, Index cols, RngStream s, double lo = -1.0,
                            double hi = 1.0) {
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = lo + (hi - lo) * s.uniform();
  return m;
}

// ---- ranking ------------------------------------------------------------

// rank[d] = number of dimensions placed ahead of d.
inline std::vector<Index> brute_ranks(std::span<const double> scores) {
  const auto n = static_cast<Index>(scores.size());
  std::vector<Index> rank(n, 0);
  for (Index d = 0; d < n; ++d)
    for (Index e = 0; e < n; ++e)
      if (scores[e] > scores[d] || (scores[e] == scores[d] && e < d)) ++rank[d];
  return rank;
}

inline double brute_recall(std::span<const double> scores, std::span<const Index> relevant,
                           Index k) {
  const auto rank = brute_ranks(scores);
  std::vector<Index> rel(relevant.begin(), relevant.end());
  std::sort(rel.begin(), rel.end());
  rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
  Index hits = 0;
  for (Index d : rel)
    if (rank[d] < k) ++hits;
  return static_cast<double>(hits) / static_cast<double>(rel.size());
}

inline double brute_ndcg(std::span<const double> scores, std::span<const Index> relevant,
                         Index k) {
  const auto rank = brute_ranks(scores);
  const auto n = static_cast<Index>(scores.size());
  std::vector<char> is_rel(n, 0);
  for (Index d : relevant) is_rel[d] = 1;
  std::vector<Index> at(n);
  for (Index d = 0; d < n; ++d) at[rank[d]] = d;
  double dcg = 0.0;
  for (Index r = 0; r < k; ++r)
    if (is_rel[at[r]]) dcg += 1.0 / std::log2(static_cast<double>(r) + 2.0);
  Index ideal = 0;
  for (Index d = 0; d < n; ++d) ideal += is_rel[d];
  double idcg = 0.0;
  for (Index r = 0; r < std::min(k, ideal); ++r) idcg += 1.0 / std::log2(static_cast<double>(r) + 2.0);
  return dcg / idcg;
}

// ---- model pieces -------------------------------------------------------

inline double row_norm(const Matrix& m, Index i) {
  double s = 0.0;
  for (Index j = 0; j < m.cols(); ++j) s += m(i, j) * m(i, j);
  return std::sqrt(s);
}

inline Matrix cosine_oracle(const Matrix& a, const Matrix& b, std::span<const NodeId> pick) {
  Matrix c(a.rows(), static_cast<Index>(pick.size()));
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < c.cols(); ++j) {
      const Index r = pick[j];
      double dot = 0.0;
      for (Index q = 0; q < a.cols(); ++q) dot += a(i, q) * b(r, q);
      c(i, j) = dot / (std::max(row_norm(a, i), 1e-12) * std::max(row_norm(b, r), 1e-12));
    }
  }
  return c;
}

inline double consistency_oracle(const Matrix& c, const Matrix& t) {
  const Index n = c.rows();
  double diag = 0.0, off = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j) diag += (c(i, i) - 1.0) * (c(i, i) - 1.0);
      else off += (c(i, j) - t(i, j)) * (c(i, j) - t(i, j));
    }
  }
  double l = diag / static_cast<double>(n);
  if (n >= 2) l += off / static_cast<double>(n * (n - 1));
  return l;
}

inline Matrix self_correlation_oracle(const Matrix& h) {
  const Index n = h.rows();
  Matrix y(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const double ni = row_norm(h, i), nj = row_norm(h, j);
      if (i == j) {
        y(i, j) = 1.0;
      } else if (ni <= 1e-12 || nj <= 1e-12) {
        y(i, j) = 0.0;
      } else {
        double dot = 0.0;
        for (Index q = 0; q < h.cols(); ++q) dot += h(i, q) * h(j, q);
        y(i, j) = std::max(0.0, dot / (ni * nj));
      }
    }
  }
  std::vector<double> deg(n, 0.0);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) deg[i] += y(i, j);
  Matrix s(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) s(i, j) = y(i, j) / std::sqrt(deg[i] * deg[j]);
  return s;
}

inline double bce_oracle(double t, double z, double eps = 1e-7) {
  const double p = 1.0 / (1.0 + std::exp(-z));
  double log_p, log_q;  // ln p, ln (1 - p)
  if (p < eps) {
    log_p = std::log(eps);
    log_q = std::log1p(-eps);
  } else if (p > 1.0 - eps) {
    log_p = std::log1p(-eps);
    log_q = std::log(eps);
  } else if (z >= 0) {
    log_p = -std::log1p(std::exp(-z));
    log_q = -z + log_p;
  } else {
    log_q = -std::log1p(std::exp(z));
    log_p = z + log_q;
  }
  return -(t * log_p + (1.0 - t) * log_q);
}

inline double structure_loss_oracle(const Matrix& logits, const Matrix& target) {
  double s = 0.0;
  for (Index i = 0; i < logits.rows(); ++i)
    for (Index j = 0; j < logits.cols(); ++j) s += bce_oracle(target(i, j), logits(i, j));
  return s / static_cast<double>(logits.size());
}

// D^-1/2 (A + I) D^-1/2 from an edge list, by loops.
inline Matrix normalized_oracle(Index n, std::span<const Edge> edges) {
  Matrix a = Matrix::Identity(n, n);
  for (const Edge& e : edges) {
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  std::vector<double> d(n, 0.0);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) d[i] += a(i, j);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) a(i, j) /= std::sqrt(d[i] * d[j]);
  return a;
}

// ---- toy fixtures -------------------------------------------------------

// Six nodes, seven edges, five non-negative features; nodes 1 and 4 are
// attribute-missing and the incomplete rows hide a few entries.
struct ToyProblem {
  GraphDataset graph;
  AbsencePattern pattern;
};

inline ToyProblem toy_problem() {
  ToyProblem t;
  GraphDataset& g = t.graph;
  g.node_count = 6;
  g.feature_dim = 5;
  g.class_count = 2;
  const std::vector<Edge> raw{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {1, 4}};
  g.edges = canonical_edges(raw, 6);
  g.features = random_matrix(6, 5, RngStream::named(11, "toy"), 0.0, 1.0);
  g.labels = std::vector<int>{0, 0, 0, 1, 1, 1};
  AbsencePattern& p = t.pattern;
  p.node_count = 6;
  p.feature_dim = 5;
  p.missing_ratio = 2.0 / 6.0;
  p.incomplete_ratio = 0.2;
  p.incomplete_nodes = {0, 2, 3, 5};
  p.missing_nodes = {1, 4};
  p.incomplete_mask = Matrix::Ones(4, 5);
  p.incomplete_mask(0, 1) = 0.0;
  p.incomplete_mask(1, 3) = 0.0;
  p.incomplete_mask(2, 0) = 0.0;
  p.incomplete_mask(3, 4) = 0.0;
  return t;
}

// Full joint objective on the toy problem as a function of the six weight
// matrices: dropout off, noise frozen, R a fixed dense blend.
struct ToyObjective {
  model::ModelInputs inputs;
  Matrix x_tilde;
  model::Affinity affinity;
  model::ModelDims dims;

  explicit ToyObjective(const ToyProblem& t, Index hidden = 4, Index latent = 3)
      : inputs(model::ModelInputs::build(t.graph, t.pattern, 2)) {
    RngStream noise = RngStream::named(5, "noise");
    x_tilde = model::corrupt_incomplete(inputs.observed, noise);
    const Matrix h = random_matrix(6, latent, RngStream::named(5, "h"), 0.0, 1.0);
    affinity = model::update_affinity(inputs.adj.entries, model::self_correlation(h), 0.5);
    dims = {6, 5, hidden, latent};
  }

  std::vector<Matrix> initial(std::uint64_t seed) const {
    const auto p = model::ModelParams::glorot(dims, RngStream::named(seed, "init"));
    std::vector<Matrix> out;
    for (const Matrix* m : p.all()) out.push_back(*m);
    return out;
  }

  ad::Var build(ad::Tape& tape, std::span<const ad::Var> v) const {
    const model::ParamVars p{v[0], v[1], v[2], v[3], v[4], v[5]};
    const model::LayerOptions opt;
    const auto traits = model::traits_of(model::Variant::kRitr);
    const auto enc = model::encode(tape, inputs, p, x_tilde, opt, true);
    const auto imp = model::impute(tape, inputs, enc, affinity, traits);
    const auto dec = model::decode(tape, inputs, p, enc, imp, opt, false, true);
    return model::total_loss(tape, dec.l_attr, dec.l_struct, enc.l_cons, 10.0, 10.0);
  }

  GradCheckReport check(std::uint64_t seed, double h = 1e-5, double tol = 1e-4) const {
    const auto& names = model::ModelParams::names();
    return grad_check([this](ad::Tape& tape, std::span<const ad::Var> v) { return build(tape, v); },
                      initial(seed), std::span<const std::string>(names.data(), names.size()), h,
                      tol);
  }
};

}  // namespace ritr::testing
