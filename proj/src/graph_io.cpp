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

#include "ritr/graph_io.hpp"

#include "ritr/error.hpp"
#include "ritr/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string_view>

namespace ritr {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr int kPatternVersion = 1;
constexpr int kMaxRowRedraws = 100;

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool skippable(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

template <typename T>
T parse_number(std::string_view token, const std::string& file, std::size_t line) {
  T value{};
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(file, line, "cannot parse '" + std::string(token) + "'");
  }
  return value;
}

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void check_ratio(const char* name, double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw ArgumentError(std::string(name) + " must lie in [0, 1), got " + format_double(r));
  }
}

Index ratio_count(double ratio, Index total) {
  return static_cast<Index>(std::llround(ratio * static_cast<double>(total)));
}

}  // namespace

void GraphDataset::validate() const {
  if (node_count <= 0 || feature_dim <= 0) {
    throw DataError("graph must have positive node count and feature dimension");
  }
  if (features.rows() != node_count || features.cols() != feature_dim) {
    throw DataError("feature matrix shape does not match node_count x feature_dim");
  }
  if (!all_finite(features)) throw DataError("features contain NaN or Inf");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 0 || e.v >= node_count || e.u >= e.v) {
      throw RangeError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") is out of range or not canonical");
    }
    if (i > 0 && !(edges[i - 1] < e)) throw DataError("edges are not sorted and unique");
  }
  if (labels) {
    if (static_cast<Index>(labels->size()) != node_count) {
      throw DataError("label count does not match node count");
    }
    for (int c : *labels) {
      if (c < 0 || c >= class_count) throw RangeError("label " + std::to_string(c) + " >= classes");
    }
  }
}

std::vector<std::vector<NodeId>> GraphDataset::adjacency_lists() const {
  std::vector<std::vector<NodeId>> adj(static_cast<std::size_t>(node_count));
  for (const Edge& e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<Edge> canonical_edges(std::span<const Edge> raw, Index node_count) {
  std::vector<Edge> out;
  out.reserve(raw.size());
  for (const Edge& e : raw) {
    if (e.u < 0 || e.v < 0 || e.u >= node_count || e.v >= node_count) {
      throw RangeError("edge endpoint out of range: (" + std::to_string(e.u) + ", " +
                       std::to_string(e.v) + ")");
    }
    if (e.u == e.v) continue;
    out.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DatasetPaths DatasetPaths::in_directory(const fs::path& dir) {
  DatasetPaths p;
  p.meta = dir / "meta.json";
  p.edges = dir / "edges.txt";
  p.features = dir / "features.txt";
  if (fs::exists(dir / "labels.txt")) p.labels = dir / "labels.txt";
  return p;
}

GraphDataset load_dataset(const DatasetPaths& paths) {
  GraphDataset g;
  {
    auto in = open_input(paths.meta);
    json meta;
    try {
      in >> meta;
      g.node_count = meta.at("nodes").get<Index>();
      g.feature_dim = meta.at("dim").get<Index>();
      g.class_count = meta.value("classes", Index{0});
    } catch (const json::exception& e) {
      throw FormatError(paths.meta.string() + ": " + e.what());
    }
    if (g.node_count <= 0 || g.feature_dim <= 0 || g.class_count < 0) {
      throw DataError(paths.meta.string() + ": nodes and dim must be positive");
    }
  }

  {
    const std::string name = paths.features.string();
    auto in = open_input(paths.features);
    g.features = Matrix::Zero(g.node_count, g.feature_dim);
    std::string line;
    std::size_t line_no = 0;
    Index row = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (skippable(line)) continue;
      if (row >= g.node_count) throw ParseError(name, line_no, "more feature rows than nodes");
      const auto tokens = split_ws(line);
      if (static_cast<Index>(tokens.size()) != g.feature_dim) {
        throw ParseError(name, line_no,
                         "expected " + std::to_string(g.feature_dim) + " values, got " +
                             std::to_string(tokens.size()));
      }
      for (Index j = 0; j < g.feature_dim; ++j) {
        const double v = parse_number<double>(tokens[static_cast<std::size_t>(j)], name, line_no);
        if (!std::isfinite(v)) {
          throw DataError(name + ":" + std::to_string(line_no) + ": non-finite feature value");
        }
        g.features(row, j) = v;
      }
      ++row;
    }
    if (row != g.node_count) {
      throw ParseError(name, line_no, "expected " + std::to_string(g.node_count) +
                                          " feature rows, got " + std::to_string(row));
    }
  }

  {
    const std::string name = paths.edges.string();
    auto in = open_input(paths.edges);
    std::vector<Edge> raw;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (skippable(line)) continue;
      const auto tokens = split_ws(line);
      if (tokens.size() != 2) throw ParseError(name, line_no, "expected 'u v'");
      const auto u = parse_number<NodeId>(tokens[0], name, line_no);
      const auto v = parse_number<NodeId>(tokens[1], name, line_no);
      if (u < 0 || v < 0 || u >= g.node_count || v >= g.node_count) {
        throw RangeError(name + ":" + std::to_string(line_no) + ": node id out of range");
      }
      raw.push_back({u, v});
    }
    g.edges = canonical_edges(raw, g.node_count);
  }

  if (paths.labels) {
    const std::string name = paths.labels->string();
    auto in = open_input(*paths.labels);
    std::vector<int> labels(static_cast<std::size_t>(g.node_count), -1);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (skippable(line)) continue;
      const auto tokens = split_ws(line);
      if (tokens.size() != 2) throw ParseError(name, line_no, "expected 'node class'");
      const auto node = parse_number<NodeId>(tokens[0], name, line_no);
      const auto cls = parse_number<int>(tokens[1], name, line_no);
      if (node < 0 || node >= g.node_count) {
        throw RangeError(name + ":" + std::to_string(line_no) + ": node id out of range");
      }
      if (cls < 0 || cls >= g.class_count) {
        throw RangeError(name + ":" + std::to_string(line_no) + ": class id out of range");
      }
      labels[static_cast<std::size_t>(node)] = cls;
    }
    if (std::find(labels.begin(), labels.end(), -1) != labels.end()) {
      throw DataError(name + ": not every node has a label");
    }
    g.labels = std::move(labels);
  }

  g.validate();
  return g;
}

void save_dataset(const GraphDataset& graph, const fs::path& dir) {
  graph.validate();
  fs::create_directories(dir);
  auto open = [](const fs::path& p) {
    std::ofstream out(p);
    if (!out) throw IoError("cannot write " + p.string());
    return out;
  };
  {
    auto out = open(dir / "meta.json");
    out << json{{"nodes", graph.node_count}, {"dim", graph.feature_dim},
                {"classes", graph.class_count}}
               .dump()
        << '\n';
  }
  {
    auto out = open(dir / "features.txt");
    for (Index i = 0; i < graph.node_count; ++i) {
      for (Index j = 0; j < graph.feature_dim; ++j) {
        if (j) out << ' ';
        out << format_double(graph.features(i, j));
      }
      out << '\n';
    }
  }
  {
    auto out = open(dir / "edges.txt");
    for (const Edge& e : graph.edges) out << e.u << ' ' << e.v << '\n';
  }
  if (graph.labels) {
    auto out = open(dir / "labels.txt");
    for (std::size_t i = 0; i < graph.labels->size(); ++i) {
      out << i << ' ' << (*graph.labels)[i] << '\n';
    }
  }
}

NormalizedAdjacency normalize_adjacency(const GraphDataset& graph,
                                        std::optional<std::span<const NodeId>> node_subset) {
  // Map global ids to local positions (identity when no subset is given).
  std::vector<Index> local(static_cast<std::size_t>(graph.node_count), -1);
  Index n = graph.node_count;
  if (node_subset) {
    const auto subset = *node_subset;
    if (subset.empty()) throw ArgumentError("normalize_adjacency: empty node subset");
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (subset[i] < 0 || subset[i] >= graph.node_count) {
        throw RangeError("normalize_adjacency: subset id out of range");
      }
      if (i > 0 && subset[i] <= subset[i - 1]) {
        throw ArgumentError("normalize_adjacency: subset must be sorted and duplicate-free");
      }
      local[static_cast<std::size_t>(subset[i])] = static_cast<Index>(i);
    }
    n = static_cast<Index>(subset.size());
  } else {
    std::iota(local.begin(), local.end(), Index{0});
  }

  std::vector<double> degree(static_cast<std::size_t>(n), 1.0);
  std::vector<std::pair<Index, Index>> kept;
  for (const Edge& e : graph.edges) {
    const Index a = local[static_cast<std::size_t>(e.u)];
    const Index b = local[static_cast<std::size_t>(e.v)];
    if (a < 0 || b < 0) continue;
    kept.emplace_back(a, b);
    degree[static_cast<std::size_t>(a)] += 1.0;
    degree[static_cast<std::size_t>(b)] += 1.0;
  }

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(kept.size() * 2 + static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    triplets.emplace_back(i, i, 1.0 / degree[static_cast<std::size_t>(i)]);
  }
  for (const auto& [a, b] : kept) {
    // Same expression for both mirror entries keeps the matrix exactly symmetric.
    const double w = 1.0 / std::sqrt(degree[static_cast<std::size_t>(a)] *
                                      degree[static_cast<std::size_t>(b)]);
    triplets.emplace_back(a, b, w);
    triplets.emplace_back(b, a, w);
  }
  NormalizedAdjacency out;
  out.entries.resize(n, n);
  out.entries.setFromTriplets(triplets.begin(), triplets.end());
  out.entries.makeCompressed();
  out.order = 1;
  return out;
}

NormalizedAdjacency power_adjacency(const NormalizedAdjacency& adj, int r) {
  if (r < 1) throw ArgumentError("power_adjacency: order must be >= 1");
  NormalizedAdjacency out;
  out.entries = adj.entries;
  for (int k = 1; k < r; ++k) {
    SparseMatrix next = out.entries * adj.entries;
    out.entries = std::move(next);
  }
  out.entries.makeCompressed();
  out.order = adj.order * r;
  return out;
}

std::vector<NodeId> AbsencePattern::test_nodes() const {
  std::vector<NodeId> out;
  std::set_difference(missing_nodes.begin(), missing_nodes.end(), validation_nodes.begin(),
                      validation_nodes.end(), std::back_inserter(out));
  return out;
}

void AbsencePattern::validate() const {
  if (node_count <= 0 || feature_dim <= 0) throw FormatError("pattern: bad dimensions");
  std::vector<int> seen(static_cast<std::size_t>(node_count), 0);
  auto mark = [&](const std::vector<NodeId>& ids, const char* what) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (ids[i] < 0 || ids[i] >= node_count) throw FormatError(std::string("pattern: ") + what + " id out of range");
      if (i > 0 && ids[i] <= ids[i - 1]) throw FormatError(std::string("pattern: ") + what + " not ascending");
      ++seen[static_cast<std::size_t>(ids[i])];
    }
  };
  mark(incomplete_nodes, "incomplete");
  mark(missing_nodes, "missing");
  for (int s : seen) {
    if (s != 1) throw FormatError("pattern: incomplete and missing sets do not partition the nodes");
  }
  if (!std::includes(missing_nodes.begin(), missing_nodes.end(), validation_nodes.begin(),
                     validation_nodes.end())) {
    throw FormatError("pattern: validation nodes must be a subset of missing nodes");
  }
  if (incomplete_mask.rows() != static_cast<Index>(incomplete_nodes.size()) ||
      incomplete_mask.cols() != feature_dim) {
    throw FormatError("pattern: mask shape mismatch");
  }
  for (Index i = 0; i < incomplete_mask.rows(); ++i) {
    if (incomplete_mask.row(i).sum() < 1.0) throw FormatError("pattern: mask row with no observed entry");
  }
}

std::string AbsencePattern::to_json() const {
  // Run-length encoding of the row-major mask; runs alternate starting with
  // observed (1) entries, so a leading 0-length run is allowed.
  std::vector<std::int64_t> runs;
  double current = 1.0;
  std::int64_t run = 0;
  const double* data = incomplete_mask.data();
  const Index total = incomplete_mask.size();
  for (Index k = 0; k < total; ++k) {
    if (data[k] == current) {
      ++run;
    } else {
      runs.push_back(run);
      current = 1.0 - current;
      run = 1;
    }
  }
  runs.push_back(run);

  json j;
  j["version"] = kPatternVersion;
  j["seed"] = seed;
  j["missing_ratio"] = missing_ratio;
  j["val_ratio"] = val_ratio;
  j["incomplete_ratio"] = incomplete_ratio;
  j["nodes"] = node_count;
  j["dim"] = feature_dim;
  j["incomplete_nodes"] = incomplete_nodes;
  j["missing_nodes"] = missing_nodes;
  j["validation_nodes"] = validation_nodes;
  j["mask_rle"] = {{"rows", incomplete_mask.rows()}, {"cols", incomplete_mask.cols()},
                   {"runs", runs}};
  return j.dump() + "\n";
}

AbsencePattern AbsencePattern::from_json(const std::string& text) {
  AbsencePattern p;
  try {
    const json j = json::parse(text);
    if (j.at("version").get<int>() != kPatternVersion) {
      throw FormatError("pattern: unsupported version");
    }
    p.seed = j.at("seed").get<std::uint64_t>();
    p.missing_ratio = j.at("missing_ratio").get<double>();
    p.val_ratio = j.at("val_ratio").get<double>();
    p.incomplete_ratio = j.at("incomplete_ratio").get<double>();
    p.node_count = j.at("nodes").get<Index>();
    p.feature_dim = j.at("dim").get<Index>();
    p.incomplete_nodes = j.at("incomplete_nodes").get<std::vector<NodeId>>();
    p.missing_nodes = j.at("missing_nodes").get<std::vector<NodeId>>();
    p.validation_nodes = j.at("validation_nodes").get<std::vector<NodeId>>();
    const auto& rle = j.at("mask_rle");
    const auto rows = rle.at("rows").get<Index>();
    const auto cols = rle.at("cols").get<Index>();
    const auto runs = rle.at("runs").get<std::vector<std::int64_t>>();
    if (rows < 0 || cols < 0) throw FormatError("pattern: bad mask shape");
    p.incomplete_mask = Matrix::Zero(rows, cols);
    double* data = p.incomplete_mask.data();
    Index pos = 0;
    double value = 1.0;
    for (std::int64_t len : runs) {
      if (len < 0 || pos + len > rows * cols) throw FormatError("pattern: mask runs overflow");
      std::fill(data + pos, data + pos + len, value);
      pos += len;
      value = 1.0 - value;
    }
    if (pos != rows * cols) throw FormatError("pattern: mask runs do not cover the mask");
  } catch (const json::exception& e) {
    throw FormatError(std::string("pattern: ") + e.what());
  }
  p.validate();
  return p;
}

void AbsencePattern::save(const fs::path& path) const {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << to_json();
  if (!out) throw IoError("write failed for " + path.string());
}

AbsencePattern AbsencePattern::load(const fs::path& path) {
  auto in = open_input(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

AbsencePattern generate_pattern(Index node_count, Index feature_dim, double missing_ratio,
                                double val_ratio, double incomplete_ratio, std::uint64_t seed) {
  if (node_count <= 0 || feature_dim <= 0) {
    throw ArgumentError("generate_pattern: node count and dimension must be positive");
  }
  check_ratio("missing_ratio", missing_ratio);
  check_ratio("val_ratio", val_ratio);
  check_ratio("incomplete_ratio", incomplete_ratio);
  if (val_ratio > missing_ratio) {
    throw ArgumentError("generate_pattern: val_ratio must not exceed missing_ratio");
  }

  AbsencePattern p;
  p.seed = seed;
  p.missing_ratio = missing_ratio;
  p.val_ratio = val_ratio;
  p.incomplete_ratio = incomplete_ratio;
  p.node_count = node_count;
  p.feature_dim = feature_dim;

  RngStream root = RngStream::named(seed, "mask");
  RngStream node_stream = root.fork("nodes");
  std::vector<NodeId> perm(static_cast<std::size_t>(node_count));
  std::iota(perm.begin(), perm.end(), NodeId{0});
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[node_stream.below(i)]);
  }
  const Index n_missing = ratio_count(missing_ratio, node_count);
  const Index n_val = std::min(ratio_count(val_ratio, node_count), n_missing);
  if (n_missing >= node_count) {
    throw ArgumentError("generate_pattern: missing ratio leaves no incomplete nodes");
  }
  p.missing_nodes.assign(perm.begin(), perm.begin() + n_missing);
  p.validation_nodes.assign(perm.begin(), perm.begin() + n_val);
  p.incomplete_nodes.assign(perm.begin() + n_missing, perm.end());
  std::sort(p.missing_nodes.begin(), p.missing_nodes.end());
  std::sort(p.validation_nodes.begin(), p.validation_nodes.end());
  std::sort(p.incomplete_nodes.begin(), p.incomplete_nodes.end());

  const auto n_inc = static_cast<Index>(p.incomplete_nodes.size());
  const Index n_masked = ratio_count(incomplete_ratio, feature_dim);
  p.incomplete_mask = Matrix::Ones(n_inc, feature_dim);
  RngStream row_root = root.fork("rows");
  std::vector<Index> cols(static_cast<std::size_t>(feature_dim));
  for (Index i = 0; i < n_inc; ++i) {
    RngStream rs = row_root.fork(static_cast<std::uint64_t>(i));
    bool ok = false;
    for (int attempt = 0; attempt < kMaxRowRedraws && !ok; ++attempt) {
      std::iota(cols.begin(), cols.end(), Index{0});
      auto row = p.incomplete_mask.row(i);
      row.setOnes();
      // Partial Fisher-Yates: the first n_masked slots are the masked columns.
      for (Index k = 0; k < n_masked; ++k) {
        const auto pick = k + static_cast<Index>(rs.below(static_cast<std::uint64_t>(feature_dim - k)));
        std::swap(cols[static_cast<std::size_t>(k)], cols[static_cast<std::size_t>(pick)]);
        row(cols[static_cast<std::size_t>(k)]) = 0.0;
      }
      ok = row.sum() >= 1.0;
    }
    if (!ok) {
      throw ArgumentError("generate_pattern: incomplete_ratio leaves a row with no observed entry");
    }
  }
  return p;
}

IncompleteAttributes apply_pattern(const GraphDataset& graph, const AbsencePattern& pattern) {
  if (pattern.node_count != graph.node_count || pattern.feature_dim != graph.feature_dim) {
    throw ArgumentError("apply_pattern: pattern dimensions do not match the graph");
  }
  IncompleteAttributes out;
  out.mask = pattern.incomplete_mask;
  out.values = gather_rows(graph.features, pattern.incomplete_nodes);
  // select() keeps observed entries bit-for-bit.
  out.values = (out.mask.array() != 0.0).select(out.values, 0.0);
  return out;
}

}  // namespace ritr
