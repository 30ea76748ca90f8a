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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ritr/error.hpp"
#include "ritr/model.hpp"
#include "support.hpp"

#include <chrono>
#include <cmath>

using namespace ritr;
using namespace ritr::model;
using ritr::testing::random_matrix;

namespace {

SparseMatrix sparse_identity(Index n) {
  SparseMatrix m(n, n);
  m.setIdentity();
  return m;
}

SparseMatrix two_node_adj() {
  return Matrix::Constant(2, 2, 0.5).sparseView();
}

}  // namespace

TEST_CASE("corrupt_incomplete keeps observed entries and fills the rest with N(0,1)") {
  IncompleteAttributes x;
  x.values = Matrix(1, 3);
  x.values << 1, 0, 0;
  x.mask = Matrix(1, 3);
  x.mask << 1, 0, 1;
  RngStream s(1);
  RngStream copy = s;
  const Matrix out = corrupt_incomplete(x, s);
  CHECK(out(0, 0) == 1.0);
  CHECK(out(0, 2) == 0.0);
  CHECK(out(0, 1) == copy.normal());

  x.mask.setOnes();
  CHECK(corrupt_incomplete(x, s) == x.values);

  IncompleteAttributes big{Matrix::Zero(1000, 1000), Matrix::Zero(1000, 1000)};
  RngStream n(2);
  const Matrix z = corrupt_incomplete(big, n);
  const double mean = z.mean();
  CHECK(std::abs(mean) < 0.01);
  CHECK(std::abs((z.array() - mean).square().mean() - 1.0) < 0.02);
}

TEST_CASE("zero weights give zero embeddings and zero reconstruction") {
  ad::Tape tape;
  const SparseMatrix a = sparse_identity(3);
  const auto x = tape.constant(random_matrix(3, 4, RngStream(3)));
  const auto enc = encode_attributes(tape, x, a, tape.parameter(Matrix::Zero(4, 5)),
                                     tape.parameter(Matrix::Zero(5, 2)), {});
  CHECK(tape.value(enc.output).isZero(0));
  const auto st = encode_structure(tape, a, tape.parameter(Matrix::Zero(3, 5)),
                                   tape.parameter(Matrix::Zero(5, 2)), {});
  CHECK(tape.value(st.output).isZero(0));
  CHECK(tape.value(st.output).rows() == 3);
  CHECK(tape.value(st.output).cols() == 2);
  const auto dec = decode_attributes(tape, tape.constant(random_matrix(3, 2, RngStream(4))), a,
                                     tape.parameter(Matrix::Zero(2, 5)),
                                     tape.parameter(Matrix::Zero(5, 4)), {});
  CHECK(tape.value(dec).isZero(0));
}

TEST_CASE("single self-loop node with scalar widths follows the hand chain") {
  ad::Tape tape;
  const SparseMatrix a = sparse_identity(1);
  const auto x = tape.constant(Matrix::Constant(1, 1, 2.0));
  const auto enc = encode_attributes(tape, x, a, tape.parameter(Matrix::Constant(1, 1, 3.0)),
                                     tape.parameter(Matrix::Constant(1, 1, -0.5)), {});
  // relu(2 * 3) = 6, relu(6 * -0.5) = 0
  CHECK(tape.value(enc.layer1)(0, 0) == 6.0);
  CHECK(tape.value(enc.output)(0, 0) == 0.0);
  const auto dec = decode_attributes(tape, tape.constant(Matrix::Constant(1, 1, 1.5)), a,
                                     tape.parameter(Matrix::Constant(1, 1, 2.0)),
                                     tape.parameter(Matrix::Constant(1, 1, -1.0)), {});
  // relu(1.5 * 2) = 3, identity(3 * -1) = -3
  CHECK(tape.value(dec)(0, 0) == -3.0);
}

TEST_CASE("two-node symmetric graph gives identical structure rows") {
  ad::Tape tape;
  const auto st = encode_structure(tape, two_node_adj(),
                                   tape.parameter(random_matrix(2, 4, RngStream(5), 0, 1)),
                                   tape.parameter(random_matrix(4, 3, RngStream(6))), {});
  const Matrix h1 = tape.value(st.layer1);
  CHECK(h1.row(0) == h1.row(1));
  const std::vector<NodeId> both{0, 1};
  const auto c = correlation_matrix(tape, st.layer1, st.layer1, both);
  CHECK(tape.value(c)(0, 1) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("correlation matrix: unit diagonal, orthogonal zeros, loop oracle") {
  ad::Tape tape;
  const Matrix unit = Matrix::Identity(3, 3);
  const std::vector<NodeId> rows{0, 1, 2};
  const auto c = correlation_matrix(tape, tape.constant(unit), tape.constant(unit), rows);
  CHECK(tape.value(c) == Matrix::Identity(3, 3));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ad::Tape t;
    const Matrix a = random_matrix(4, 3, RngStream::named(seed, "a"));
    const Matrix b = random_matrix(7, 3, RngStream::named(seed, "b"));
    const std::vector<NodeId> pick{6, 0, 3, 2};
    const Matrix got = t.value(correlation_matrix(t, t.constant(a), t.constant(b), pick));
    CHECK((got - testing::cosine_oracle(a, b, pick)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("consistency loss cases and loop oracle") {
  ad::Tape tape;
  CHECK(tape.scalar(consistency_loss(tape, tape.constant(Matrix::Identity(4, 4)),
                                     Matrix::Zero(4, 4))) == 0.0);
  CHECK(tape.scalar(consistency_loss(tape, tape.constant(Matrix::Zero(4, 4)), Matrix::Zero(4, 4))) ==
        1.0);
  // a single incomplete node keeps only the diagonal term
  CHECK(tape.scalar(consistency_loss(tape, tape.constant(Matrix::Constant(1, 1, 0.5)),
                                     Matrix::Constant(1, 1, 0.9))) == 0.25);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Matrix c = random_matrix(5, 5, RngStream::named(seed, "c"));
    const Matrix t = random_matrix(5, 5, RngStream::named(seed, "t"), 0, 1);
    ad::Tape tp;
    const double got = tp.scalar(consistency_loss(tp, tp.constant(c), t));
    CHECK(std::abs(got - testing::consistency_oracle(c, t)) < 1e-12);
  }
}

TEST_CASE("initial placement, refinement and recomposition follow the row rules") {
  ad::Tape tape;
  const Matrix ha = random_matrix(2, 3, RngStream(7));
  const Matrix hs = random_matrix(3, 3, RngStream(8));
  const std::vector<NodeId> inc{0, 2}, mis{1};
  const auto a = tape.constant(ha);
  const auto s = tape.constant(hs);
  const Matrix hi = tape.value(initial_impute(tape, a, s, inc, mis, MissingInit::kStructure));
  CHECK(hi.row(0) == ha.row(0));
  CHECK(hi.row(1) == hs.row(1));
  CHECK(hi.row(2) == ha.row(1));
  const Matrix hz = tape.value(initial_impute(tape, a, s, inc, mis, MissingInit::kZero));
  CHECK(hz.row(1).isZero(0));

  const std::vector<NodeId> all{0, 1, 2}, none{};
  const Matrix ha3 = random_matrix(3, 3, RngStream(9));
  CHECK(tape.value(initial_impute(tape, tape.constant(ha3), s, all, none, MissingInit::kStructure)) ==
        ha3);

  const auto hiv = tape.constant(hi);
  const Affinity eye(sparse_identity(3));
  const auto refined = refine_impute(tape, eye, hiv);
  CHECK(tape.value(refined) == hi);
  CHECK(tape.value(recompose(tape, refined, a, inc, mis)) == hi);

  ad::Tape t2;
  const Matrix h2 = random_matrix(2, 4, RngStream(10));
  const Matrix out = t2.value(refine_impute(t2, Affinity(two_node_adj()), t2.constant(h2)));
  const Matrix mean = 0.5 * (h2.row(0) + h2.row(1));
  CHECK((out.row(0) - mean).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((out.row(1) - mean).cwiseAbs().maxCoeff() < 1e-15);

  const Matrix r = random_matrix(5, 5, RngStream(11));
  const Matrix h5 = random_matrix(5, 3, RngStream(12));
  ad::Tape t3;
  CHECK((t3.value(refine_impute(t3, Affinity(r), t3.constant(h5))) - r * h5).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("row-source audit on a random pattern") {
  const auto p = generate_pattern(40, 5, 0.5, 0.0, 0.0, 3);
  const Matrix ha = random_matrix(static_cast<Index>(p.incomplete_nodes.size()), 4, RngStream(13));
  const Matrix hs = random_matrix(40, 4, RngStream(14));
  const Matrix r = random_matrix(40, 40, RngStream(15), 0, 0.1);
  ad::Tape tape;
  const auto a = tape.constant(ha);
  const auto s = tape.constant(hs);
  const auto hi = initial_impute(tape, a, s, p.incomplete_nodes, p.missing_nodes,
                                 MissingInit::kStructure);
  const auto h = refine_impute(tape, Affinity(r), hi);
  const Matrix ht = tape.value(recompose(tape, h, a, p.incomplete_nodes, p.missing_nodes));
  const Matrix hiv = tape.value(hi), hv = tape.value(h);
  for (std::size_t i = 0; i < p.incomplete_nodes.size(); ++i) {
    CHECK(hiv.row(p.incomplete_nodes[i]) == ha.row(i));
    CHECK(ht.row(p.incomplete_nodes[i]) == ha.row(i));
  }
  for (NodeId v : p.missing_nodes) {
    CHECK(hiv.row(v) == hs.row(v));
    CHECK(ht.row(v) == hv.row(v));
  }
}

TEST_CASE("self-correlation: orthonormal rows, duplicated rows, loop oracle") {
  CHECK(self_correlation(Matrix::Identity(3, 3)) == Matrix::Identity(3, 3));
  Matrix dup(2, 2);
  dup << 0.6, 0.8, 0.6, 0.8;
  CHECK((self_correlation(dup) - Matrix::Constant(2, 2, 0.5)).cwiseAbs().maxCoeff() < 1e-15);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Matrix h = random_matrix(6, 4, RngStream::named(seed, "h"), 0, 1);
    CHECK((self_correlation(h) - testing::self_correlation_oracle(h)).cwiseAbs().maxCoeff() < 1e-12);
    const Matrix signed_h = random_matrix(6, 4, RngStream::named(seed, "s"));
    CHECK((self_correlation(signed_h) - testing::self_correlation_oracle(signed_h))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
  Matrix with_zero = random_matrix(4, 3, RngStream(16), 0, 1);
  with_zero.row(2).setZero();
  CHECK((self_correlation(with_zero) - testing::self_correlation_oracle(with_zero))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("affinity blend endpoints") {
  const SparseMatrix a = two_node_adj();
  const Matrix s = self_correlation(random_matrix(2, 3, RngStream(17), 0, 1));
  CHECK(update_affinity(a, s, 1.0).to_dense() == Matrix(a));
  CHECK(update_affinity(a, s, 0.0).to_dense() == s);
  CHECK(update_affinity(sparse_identity(3), Matrix::Identity(3, 3), 0.5).to_dense() ==
        Matrix::Identity(3, 3));
  CHECK_THROWS_AS(update_affinity(a, s, 1.5), ArgumentError);
}

TEST_CASE("the affinity receives no gradient") {
  const Matrix r = random_matrix(3, 3, RngStream(18));
  ad::Tape tape;
  const auto h = tape.parameter(random_matrix(3, 2, RngStream(19)));
  const auto out = refine_impute(tape, Affinity(r), h);
  tape.backward(tape.sum(out));
  CHECK(tape.has_grad(h));
  Matrix r2 = r;
  r2(0, 0) += 1.0;
  ad::Tape t2;
  CHECK(t2.value(refine_impute(t2, Affinity(r2), t2.constant(tape.value(h)))) != tape.value(out));
}

TEST_CASE("decoder is deterministic in eval mode") {
  const auto toy = testing::toy_problem();
  const testing::ToyObjective obj(toy);
  const auto w = obj.initial(2);
  auto run = [&] {
    ad::Tape tape;
    const auto h = tape.constant(random_matrix(6, 3, RngStream(20)));
    return tape.value(decode_attributes(tape, h, obj.inputs.adj.entries, tape.parameter(w[4]),
                                        tape.parameter(w[5]), {}));
  };
  CHECK(run() == run());
}

TEST_CASE("reconstructed adjacency: sigmoid of the product") {
  const Matrix hs = random_matrix(4, 3, RngStream(21));
  const Matrix ht = random_matrix(4, 3, RngStream(22));
  CHECK(reconstruct_adjacency(Matrix::Zero(4, 3), ht) == Matrix::Constant(4, 4, 0.5));
  const Matrix a = reconstruct_adjacency(hs, ht);
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j) {
      double dot = 0;
      for (Index q = 0; q < 3; ++q) dot += hs(i, q) * ht(j, q);
      CHECK(std::abs(a(i, j) - 1.0 / (1.0 + std::exp(-dot))) < 1e-12);
      CHECK(a(i, j) > 0.0);
      CHECK(a(i, j) < 1.0);
    }
}

TEST_CASE("attribute loss cases and masking of its gradient") {
  IncompleteAttributes x{Matrix::Identity(2, 2), Matrix::Ones(2, 2)};
  ad::Tape tape;
  CHECK(tape.scalar(attribute_loss(tape, tape.constant(Matrix::Zero(2, 2)), x)) == 0.5);
  CHECK(tape.scalar(attribute_loss(tape, tape.constant(x.values), x)) == 0.0);
  IncompleteAttributes none{Matrix::Identity(2, 2), Matrix::Zero(2, 2)};
  CHECK(tape.scalar(attribute_loss(tape, tape.constant(random_matrix(2, 2, RngStream(23))), none)) ==
        0.0);

  IncompleteAttributes part{random_matrix(3, 4, RngStream(24)), Matrix::Ones(3, 4)};
  part.mask(0, 1) = 0;
  part.mask(2, 3) = 0;
  ad::Tape t2;
  const auto xh = t2.parameter(random_matrix(3, 4, RngStream(25)));
  t2.backward(attribute_loss(t2, xh, part));
  CHECK(t2.grad(xh)(0, 1) == 0.0);
  CHECK(t2.grad(xh)(2, 3) == 0.0);
  CHECK(t2.grad(xh)(1, 1) != 0.0);
}

TEST_CASE("structure loss: ln 2 at p = t = 0.5, near zero when saturated, loop oracle") {
  ad::Tape tape;
  const SparseMatrix half = Matrix::Constant(2, 2, 0.5).sparseView();
  CHECK(tape.scalar(structure_loss(tape, tape.constant(Matrix::Zero(2, 2)), half)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));
  const SparseMatrix ones = Matrix::Ones(2, 2).sparseView();
  CHECK(tape.scalar(structure_loss(tape, tape.constant(Matrix::Constant(2, 2, 40.0)), ones)) < 1e-6);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Matrix z = random_matrix(4, 4, RngStream::named(seed, "z"), -20, 20);
    Matrix t = random_matrix(4, 4, RngStream::named(seed, "t"), -0.5, 1.0).cwiseMax(0.0);
    ad::Tape tp;
    const double got = tp.scalar(structure_loss(tp, tp.constant(z), t.sparseView()));
    CHECK(std::abs(got - testing::structure_loss_oracle(z, t)) < 1e-12);
  }
}

TEST_CASE("total loss weights and non-finite components") {
  ad::Tape tape;
  const auto one = tape.constant(Matrix::Ones(1, 1));
  CHECK(tape.scalar(total_loss(tape, one, one, one, 10.0, 10.0)) == 21.0);
  const auto two = tape.constant(Matrix::Constant(1, 1, 2.0));
  CHECK(tape.scalar(total_loss(tape, one, two, one, 0.0, 0.0)) == 2.0);
}

TEST_CASE("variant switches") {
  CHECK(parse_variant("ritr") == Variant::kRitr);
  CHECK(parse_variant("no_stc") == Variant::kNoStc);
  CHECK(to_string(Variant::kOursZ) == "ours_z");
  CHECK_THROWS_AS(parse_variant("nope"), ArgumentError);
  CHECK_FALSE(traits_of(Variant::kNoStc).pretrain_stc);
  CHECK_FALSE(traits_of(Variant::kNoStc).noise_corruption);
  CHECK(traits_of(Variant::kOursZ).init == MissingInit::kZero);
  CHECK_FALSE(traits_of(Variant::kOursS).refine);
  CHECK_FALSE(traits_of(Variant::kNoIr).recompose);
  CHECK_FALSE(traits_of(Variant::kNoAsu).update_affinity);
  CHECK_FALSE(traits_of(Variant::kItr).pretrain_stc);
}

TEST_CASE("gradient check of the joint objective on the 6-node graph") {
  const auto toy = testing::toy_problem();
  const testing::ToyObjective obj(toy);
  const auto start = std::chrono::steady_clock::now();
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto report = obj.check(seed);
    for (const auto& e : report.entries) {
      INFO(e.name << " seed " << seed << " rel " << e.max_rel_error);
      CHECK(e.ok);
    }
  }
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(10));
}
