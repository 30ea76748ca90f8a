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

#include "ritr/error.hpp"
#include "ritr/trainer.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <cstring>
#include <fstream>
#include <sstream>

namespace ritr::train {

using model::Affinity;
using model::ModelParams;
using nlohmann::json;

namespace {

static_assert(std::endian::native == std::endian::little,
              "checkpoint blobs are written in host order, which must be little-endian");

constexpr const char* kFormat = "ritr-checkpoint";
constexpr int kVersion = 1;

std::uint64_t fnv1a(const char* data, std::size_t n) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<unsigned char>(data[i]);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

class BlobWriter {
 public:
  explicit BlobWriter(std::filesystem::path dir) : dir_(std::move(dir)) {}

  json matrix(const std::string& name, const Matrix& m) {
    json e = write(name, "f64", reinterpret_cast<const char*>(m.data()),
                   static_cast<std::size_t>(m.size()) * sizeof(double));
    e["rows"] = m.rows();
    e["cols"] = m.cols();
    return e;
  }

  json indices(const std::string& name, const std::vector<std::int64_t>& v) {
    return write(name, "i64", reinterpret_cast<const char*>(v.data()),
                 v.size() * sizeof(std::int64_t));
  }

 private:
  json write(const std::string& name, const char* dtype, const char* bytes, std::size_t n) {
    const std::string file = name + ".bin";
    std::ofstream os(dir_ / file, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot write " + (dir_ / file).string());
    os.write(bytes, static_cast<std::streamsize>(n));
    if (!os) throw IoError("short write to " + (dir_ / file).string());
    return json{{"file", file}, {"dtype", dtype}, {"bytes", n}, {"fnv1a", hex(fnv1a(bytes, n))}};
  }

  std::filesystem::path dir_;
};

std::string read_bytes(const std::filesystem::path& dir, const json& e, const char* dtype) {
  if (e.at("dtype").get<std::string>() != dtype) {
    throw FormatError("blob " + e.at("file").get<std::string>() + " has unexpected dtype");
  }
  const auto path = dir / e.at("file").get<std::string>();
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  if (bytes.size() != e.at("bytes").get<std::size_t>()) {
    throw FormatError("blob " + path.string() + " is truncated or padded");
  }
  if (hex(fnv1a(bytes.data(), bytes.size())) != e.at("fnv1a").get<std::string>()) {
    throw FormatError("blob " + path.string() + " fails its checksum");
  }
  return bytes;
}

Matrix read_matrix(const std::filesystem::path& dir, const json& e) {
  const std::string bytes = read_bytes(dir, e, "f64");
  const Index rows = e.at("rows").get<Index>();
  const Index cols = e.at("cols").get<Index>();
  if (rows < 0 || cols < 0 ||
      static_cast<std::size_t>(rows * cols) * sizeof(double) != bytes.size()) {
    throw FormatError("blob " + e.at("file").get<std::string>() + " does not match its shape");
  }
  Matrix m(rows, cols);
  std::memcpy(m.data(), bytes.data(), bytes.size());
  return m;
}

std::vector<std::int64_t> read_indices(const std::filesystem::path& dir, const json& e) {
  const std::string bytes = read_bytes(dir, e, "i64");
  if (bytes.size() % sizeof(std::int64_t) != 0) throw FormatError("ragged index blob");
  std::vector<std::int64_t> v(bytes.size() / sizeof(std::int64_t));
  std::memcpy(v.data(), bytes.data(), bytes.size());
  return v;
}

json write_params(BlobWriter& w, const std::string& prefix, const ModelParams& p) {
  json out = json::object();
  const auto& names = ModelParams::names();
  const auto mats = p.all();
  for (std::size_t k = 0; k < ModelParams::kCount; ++k) {
    out[names[k]] = w.matrix(prefix + "." + names[k], *mats[k]);
  }
  return out;
}

ModelParams read_params(const std::filesystem::path& dir, const json& j) {
  ModelParams p;
  const auto& names = ModelParams::names();
  auto mats = p.all();
  for (std::size_t k = 0; k < ModelParams::kCount; ++k) *mats[k] = read_matrix(dir, j.at(names[k]));
  return p;
}

json write_affinity(BlobWriter& w, const std::string& prefix, const Affinity& a) {
  if (!a.is_sparse()) return json{{"kind", "dense"}, {"values", w.matrix(prefix, a.dense())}};
  SparseMatrix s = a.sparse();
  s.makeCompressed();
  const Index n = s.rows();
  std::vector<std::int64_t> outer(s.outerIndexPtr(), s.outerIndexPtr() + n + 1);
  std::vector<std::int64_t> inner(s.innerIndexPtr(), s.innerIndexPtr() + s.nonZeros());
  Matrix values = Eigen::Map<const Matrix>(s.valuePtr(), 1, s.nonZeros());
  return json{{"kind", "sparse"},
              {"dim", n},
              {"outer", w.indices(prefix + ".outer", outer)},
              {"inner", w.indices(prefix + ".inner", inner)},
              {"values", w.matrix(prefix + ".values", values)}};
}

Affinity read_affinity(const std::filesystem::path& dir, const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "dense") return Affinity(read_matrix(dir, j.at("values")));
  if (kind != "sparse") throw FormatError("unknown affinity kind '" + kind + "'");
  const Index n = j.at("dim").get<Index>();
  const auto outer = read_indices(dir, j.at("outer"));
  const auto inner = read_indices(dir, j.at("inner"));
  const Matrix values = read_matrix(dir, j.at("values"));
  if (static_cast<Index>(outer.size()) != n + 1 || static_cast<std::int64_t>(inner.size()) != outer.back() ||
      values.size() != static_cast<Index>(inner.size())) {
    throw FormatError("sparse affinity blobs are inconsistent");
  }
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(inner.size());
  for (Index r = 0; r < n; ++r) {
    for (auto k = outer[static_cast<std::size_t>(r)]; k < outer[static_cast<std::size_t>(r) + 1];
         ++k) {
      const auto c = inner[static_cast<std::size_t>(k)];
      if (c < 0 || c >= n) throw FormatError("sparse affinity column out of range");
      trip.emplace_back(r, c, values(0, k));
    }
  }
  SparseMatrix s(n, n);
  s.setFromTriplets(trip.begin(), trip.end());
  return Affinity(std::move(s));
}

double finite_or(const json& j, double fallback) { return j.is_null() ? fallback : j.get<double>(); }

}  // namespace

void save_checkpoint(const TrainState& s, const TrainConfig& config,
                     const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  BlobWriter w(dir);

  json m;
  m["format"] = kFormat;
  m["version"] = kVersion;
  m["config"] = config.to_json();
  m["phase"] = std::string(to_string(s.phase));
  m["iteration"] = s.iteration;
  m["params"] = write_params(w, "params", s.params);
  m["affinity"] = write_affinity(w, "affinity", s.affinity);

  json adam;
  adam["step"] = s.adam.step;
  adam["lr"] = s.adam.options.lr;
  adam["beta1"] = s.adam.options.beta1;
  adam["beta2"] = s.adam.options.beta2;
  adam["eps"] = s.adam.options.eps;
  adam["weight_decay"] = s.adam.options.weight_decay;
  adam["m"] = json::array();
  adam["v"] = json::array();
  for (std::size_t k = 0; k < s.adam.m.size(); ++k) {
    adam["m"].push_back(w.matrix("adam.m" + std::to_string(k), s.adam.m[k]));
    adam["v"].push_back(w.matrix("adam.v" + std::to_string(k), s.adam.v[k]));
  }
  m["adam"] = adam;

  json es;
  es["best_score"] = std::isfinite(s.best_score) ? json(s.best_score) : json(nullptr);
  es["best_iteration"] = s.best_iteration;
  es["bad_evals"] = s.bad_evals;
  es["early_stopped"] = s.early_stopped;
  if (s.best_params) {
    es["best_params"] = write_params(w, "best", *s.best_params);
    es["best_affinity"] = write_affinity(w, "best_affinity", *s.best_affinity);
  }
  m["early_stopping"] = es;

  const std::string log_file = "trainlog.jsonl";
  {
    std::ofstream os(dir / log_file, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot write " + (dir / log_file).string());
    os << s.log.to_jsonl(true);
  }
  m["log"] = log_file;

  std::ofstream os(dir / "manifest.json", std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot write " + (dir / "manifest.json").string());
  os << m.dump(2) << '\n';
  if (!os) throw IoError("short write to " + (dir / "manifest.json").string());
}

Checkpoint load_checkpoint(const std::filesystem::path& dir) {
  const auto manifest = dir / "manifest.json";
  std::ifstream is(manifest, std::ios::binary);
  if (!is) throw IoError("cannot open " + manifest.string());
  json m;
  try {
    m = json::parse(is);
  } catch (const json::exception& e) {
    throw FormatError("checkpoint manifest is not valid JSON: " + std::string(e.what()));
  }
  try {
    if (!m.is_object() || m.value("format", "") != kFormat) {
      throw FormatError("not a checkpoint manifest: " + manifest.string());
    }
    if (m.at("version").get<int>() != kVersion) {
      throw FormatError("unsupported checkpoint version " + m.at("version").dump());
    }
    Checkpoint c;
    c.config = TrainConfig::from_json(m.at("config"));
    TrainState& s = c.state;
    s.phase = parse_phase(m.at("phase").get<std::string>());
    s.iteration = m.at("iteration").get<int>();
    s.params = read_params(dir, m.at("params"));
    s.affinity = read_affinity(dir, m.at("affinity"));

    const json& a = m.at("adam");
    s.adam.step = a.at("step").get<std::int64_t>();
    s.adam.options.lr = a.at("lr").get<double>();
    s.adam.options.beta1 = a.at("beta1").get<double>();
    s.adam.options.beta2 = a.at("beta2").get<double>();
    s.adam.options.eps = a.at("eps").get<double>();
    s.adam.options.weight_decay = a.at("weight_decay").get<double>();
    if (a.at("m").size() != a.at("v").size()) throw FormatError("adam moment counts differ");
    for (std::size_t k = 0; k < a.at("m").size(); ++k) {
      s.adam.m.push_back(read_matrix(dir, a.at("m")[k]));
      s.adam.v.push_back(read_matrix(dir, a.at("v")[k]));
    }

    const json& es = m.at("early_stopping");
    s.best_score = finite_or(es.at("best_score"), -std::numeric_limits<double>::infinity());
    s.best_iteration = es.at("best_iteration").get<int>();
    s.bad_evals = es.at("bad_evals").get<int>();
    s.early_stopped = es.at("early_stopped").get<bool>();
    if (es.contains("best_params")) {
      s.best_params = read_params(dir, es.at("best_params"));
      s.best_affinity = read_affinity(dir, es.at("best_affinity"));
    }

    const auto log_path = dir / m.at("log").get<std::string>();
    std::ifstream ls(log_path, std::ios::binary);
    if (!ls) throw IoError("cannot open " + log_path.string());
    std::stringstream buf;
    buf << ls.rdbuf();
    s.log = TrainLog::from_jsonl(buf.str());
    return c;
  } catch (const json::exception& e) {
    throw FormatError("malformed checkpoint manifest: " + std::string(e.what()));
  }
}

}  // namespace ritr::train
