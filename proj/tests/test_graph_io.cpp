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
#include "ritr/graph_io.hpp"
#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <set>

using namespace ritr;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("ritr_test_graph_io_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

GraphDataset random_graph(Index n, double p_edge, std::uint64_t seed) {
  RngStream s = RngStream::named(seed, "graph");
  GraphDataset g;
  g.node_count = n;
  g.feature_dim = 3;
  g.features = Matrix::Zero(n, 3);
  std::vector<Edge> raw;
  for (Index u = 0; u < n; ++u)
    for (Index v = u + 1; v < n; ++v)
      if (s.bernoulli(p_edge)) raw.push_back({u, v});
  g.edges = canonical_edges(raw, n);
  return g;
}

}  // namespace

TEST_CASE("two nodes with both edge directions load as one undirected edge") {
  const auto dir = scratch("dedup");
  write(dir / "meta.json", R"({"nodes": 2, "dim": 2, "classes": 2})");
  write(dir / "features.txt", "1 0\n0 1\n");
  write(dir / "edges.txt", "0 1\n1 0\n");
  write(dir / "labels.txt", "0 0\n1 1\n");
  const GraphDataset g = load_dataset(dir);
  CHECK(g.node_count == 2);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0] == Edge{0, 1});
  REQUIRE(g.labels.has_value());
  CHECK((*g.labels)[1] == 1);
}

TEST_CASE("nan feature is a data error") {
  const auto dir = scratch("nan");
  write(dir / "meta.json", R"({"nodes": 2, "dim": 2, "classes": 0})");
  write(dir / "features.txt", "1 nan\n0 1\n");
  write(dir / "edges.txt", "0 1\n");
  CHECK_THROWS_AS(load_dataset(dir), DataError);
}

TEST_CASE("edge endpoint out of range is rejected") {
  const auto dir = scratch("range");
  write(dir / "meta.json", R"({"nodes": 2, "dim": 1, "classes": 0})");
  write(dir / "features.txt", "1\n0\n");
  write(dir / "edges.txt", "0 2\n");
  CHECK_THROWS_AS(load_dataset(dir), Error);
}

TEST_CASE("save then load reproduces the dataset") {
  const auto t = testing::toy_problem();
  const auto dir = scratch("roundtrip");
  save_dataset(t.graph, dir);
  const GraphDataset g = load_dataset(dir);
  CHECK(g.edges == t.graph.edges);
  CHECK(g.features == t.graph.features);
  CHECK(*g.labels == *t.graph.labels);
}

TEST_CASE("two-node normalization is 0.5 everywhere") {
  GraphDataset g;
  g.node_count = 2;
  g.feature_dim = 1;
  g.features = Matrix::Zero(2, 1);
  g.edges = {{0, 1}};
  const Matrix a = normalize_adjacency(g).dense();
  CHECK(a.isApprox(Matrix::Constant(2, 2, 0.5), 1e-15));
  const Matrix sq = power_adjacency(normalize_adjacency(g), 2).dense();
  CHECK(sq.isApprox(Matrix::Constant(2, 2, 0.5), 1e-15));
}

TEST_CASE("an isolated node in a subset keeps only its self-loop") {
  GraphDataset g;
  g.node_count = 3;
  g.feature_dim = 1;
  g.features = Matrix::Zero(3, 1);
  g.edges = {{0, 1}};
  const std::vector<NodeId> subset{2};
  const Matrix a = normalize_adjacency(g, std::span<const NodeId>(subset)).dense();
  REQUIRE(a.rows() == 1);
  CHECK(a(0, 0) == 1.0);
}

TEST_CASE("normalization matches the loop oracle and is exactly symmetric") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const GraphDataset g = random_graph(30, 0.15, seed);
    const Matrix a = normalize_adjacency(g).dense();
    const Matrix o = testing::normalized_oracle(30, g.edges);
    CHECK((a - o).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(a == a.transpose());
    CHECK(a.maxCoeff() <= 1.0);
  }
}

TEST_CASE("induced sub-graph normalization matches the oracle on the sub-graph") {
  const GraphDataset g = random_graph(20, 0.2, 9);
  const std::vector<NodeId> subset{1, 3, 4, 8, 12, 19};
  std::vector<Edge> sub;
  for (const Edge& e : g.edges) {
    auto iu = std::find(subset.begin(), subset.end(), e.u);
    auto iv = std::find(subset.begin(), subset.end(), e.v);
    if (iu != subset.end() && iv != subset.end())
      sub.push_back({iu - subset.begin(), iv - subset.begin()});
  }
  const Matrix a = normalize_adjacency(g, std::span<const NodeId>(subset)).dense();
  CHECK((a - testing::normalized_oracle(6, sub)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("adjacency powers match dense repeated products") {
  const GraphDataset small = random_graph(5, 0.5, 3);
  const auto adj = normalize_adjacency(small);
  CHECK(power_adjacency(adj, 1).dense() == adj.dense());
  const Matrix d = adj.dense();
  Matrix o3 = Matrix::Zero(5, 5);
  for (Index i = 0; i < 5; ++i)
    for (Index j = 0; j < 5; ++j)
      for (Index k = 0; k < 5; ++k)
        for (Index l = 0; l < 5; ++l) o3(i, j) += d(i, k) * d(k, l) * d(l, j);
  CHECK((power_adjacency(adj, 3).dense() - o3).cwiseAbs().maxCoeff() < 1e-12);

  const GraphDataset mid = random_graph(50, 0.1, 4);
  const auto a50 = normalize_adjacency(mid);
  const Matrix d50 = a50.dense();
  CHECK((power_adjacency(a50, 4).dense() - d50 * d50 * d50 * d50).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("pattern sizes follow the ratios") {
  const auto p = generate_pattern(10, 4, 0.6, 0.1, 0.0, 1);
  CHECK(p.missing_nodes.size() == 6);
  CHECK(p.validation_nodes.size() == 1);
  CHECK(p.incomplete_nodes.size() == 4);
  CHECK(p.incomplete_mask == Matrix::Ones(4, 4));

  const auto cora = generate_pattern(2708, 1433, 0.6, 0.1, 0.6, 7);
  CHECK(cora.missing_nodes.size() == 1625);
  CHECK(cora.validation_nodes.size() == 271);
  CHECK(cora.test_nodes().size() == 1625 - 271);
  CHECK(cora.incomplete_nodes.size() == 2708 - 1625);
  // each row hides round(0.6 * 1433) = 860 entries
  CHECK(cora.incomplete_mask.sum() == doctest::Approx(1083.0 * (1433 - 860)));
}

TEST_CASE("patterns partition the nodes and every incomplete row keeps an entry") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto p = generate_pattern(37, 6, 0.4, 0.1, 0.9, seed);
    std::set<NodeId> all(p.incomplete_nodes.begin(), p.incomplete_nodes.end());
    for (NodeId v : p.missing_nodes) CHECK(all.insert(v).second);
    CHECK(all.size() == 37);
    for (NodeId v : p.validation_nodes)
      CHECK(std::binary_search(p.missing_nodes.begin(), p.missing_nodes.end(), v));
    for (Index i = 0; i < p.incomplete_mask.rows(); ++i) CHECK(p.incomplete_mask.row(i).sum() >= 1.0);
  }
}

TEST_CASE("same seed gives a byte-identical pattern, other seeds differ") {
  const auto a = generate_pattern(100, 20, 0.6, 0.1, 0.5, 3);
  const auto b = generate_pattern(100, 20, 0.6, 0.1, 0.5, 3);
  const auto c = generate_pattern(100, 20, 0.6, 0.1, 0.5, 4);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_json() != c.to_json());
  const auto dir = scratch("pattern");
  a.save(dir / "p.json");
  CHECK(AbsencePattern::load(dir / "p.json").to_json() == a.to_json());
}

TEST_CASE("bad ratios are argument errors") {
  CHECK_THROWS_AS(generate_pattern(10, 4, 1.2, 0.1, 0.0, 0), ArgumentError);
  CHECK_THROWS_AS(generate_pattern(10, 4, 0.5, -0.1, 0.0, 0), ArgumentError);
  CHECK_THROWS_AS(generate_pattern(10, 4, 0.5, 0.1, 1.0, 0), ArgumentError);
}

TEST_CASE("a corrupt pattern file is a format error") {
  const auto dir = scratch("badpattern");
  write(dir / "p.json", "{\"seed\": 1, ");
  CHECK_THROWS_AS(AbsencePattern::load(dir / "p.json"), IoError);
}

TEST_CASE("apply_pattern keeps observed values bit for bit and zeroes the rest") {
  GraphDataset g;
  g.node_count = 2;
  g.feature_dim = 3;
  g.features = Matrix(2, 3);
  g.features << 1, 2, 3, 4, 5, 6;
  AbsencePattern p;
  p.node_count = 2;
  p.feature_dim = 3;
  p.incomplete_nodes = {0};
  p.missing_nodes = {1};
  p.incomplete_mask = Matrix(1, 3);
  p.incomplete_mask << 1, 0, 1;
  const auto x = apply_pattern(g, p);
  CHECK(x.values(0, 0) == 1.0);
  CHECK(x.values(0, 1) == 0.0);
  CHECK(x.values(0, 2) == 3.0);
  CHECK(x.mask == p.incomplete_mask);

  const auto r = generate_pattern(60, 30, 0.5, 0.1, 0.4, 2);
  GraphDataset big;
  big.node_count = 60;
  big.feature_dim = 30;
  big.features = testing::random_matrix(60, 30, RngStream::named(2, "x"));
  const auto xi = apply_pattern(big, r);
  for (std::size_t i = 0; i < r.incomplete_nodes.size(); ++i)
    for (Index j = 0; j < 30; ++j)
      if (xi.mask(i, j) == 1.0) CHECK(xi.values(i, j) == big.features(r.incomplete_nodes[i], j));
  CHECK(xi.mask.sum() == doctest::Approx(r.incomplete_nodes.size() * (30 - 12)));
}
