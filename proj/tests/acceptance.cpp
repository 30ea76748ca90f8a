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

// Acceptance runner: one PASS / FAIL / BLOCKED line per criterion.
//
// Criteria 8 and 9 are self-contained. The others need the Cora and
// Citeseer datasets in $RITR_DATA_DIR/{cora,citeseer} (see
// tools/linqs_to_dataset.py) and report BLOCKED without them.
// $RITR_ACCEPT_ONLY=1,3,8 restricts the run to the listed criteria.
//
// Exit: 1 if any criterion failed, 77 if none failed but some were
// blocked, 0 otherwise.

#include "ritr/error.hpp"
#include "ritr/eval.hpp"
#include "ritr/synthetic.hpp"
#include "ritr/trainer.hpp"
#include "support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace ritr;

namespace {

constexpr int kSkip = 77;

enum class Verdict { kPass, kFail, kBlocked };

struct Line {
  int id;
  Verdict verdict;
  std::string text;
};

std::vector<Line> g_lines;
std::ofstream g_report;

void emit(const std::string& s) {
  std::printf("%s\n", s.c_str());
  std::fflush(stdout);
  if (g_report) g_report << s << '\n';
}

void record(int id, Verdict v, const std::string& text) {
  static const char* tag[] = {"PASS", "FAIL", "BLOCKED"};
  g_lines.push_back({id, v, text});
  emit(std::string("[") + tag[static_cast<int>(v)] + "] " + std::to_string(id) + ". " + text);
}

void note(const std::string& text) { emit("       " + text); }

std::string fmt(double v, int prec = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

// ---- datasets and cached runs -------------------------------------------

std::optional<fs::path> data_root() {
  const char* env = std::getenv("RITR_DATA_DIR");
  if (!env || !*env) return std::nullopt;
  return fs::path(env);
}

std::map<std::string, GraphDataset> g_datasets;

const GraphDataset* dataset(const std::string& name) {
  if (auto it = g_datasets.find(name); it != g_datasets.end()) return &it->second;
  const auto root = data_root();
  if (!root || !fs::exists(*root / name / "meta.json")) return nullptr;
  auto [it, _] = g_datasets.emplace(name, load_dataset(*root / name));
  return &it->second;
}

struct RunKey {
  std::string dataset;
  double incomplete = 0.0;
  model::Variant variant = model::Variant::kRitr;
  std::uint64_t seed = 0;
  int copy = 0;  // distinguishes deliberate repeats

  std::string str() const {
    return dataset + "/air" + fmt(incomplete) + "/" + std::string(model::to_string(variant)) +
           "/seed" + std::to_string(seed) + "/copy" + std::to_string(copy);
  }
};

struct RunResult {
  eval::RankingReport report;
  train::TrainLog log;
  Matrix x_hat;
  AbsencePattern pattern;
  double wall_seconds = 0.0;
  double best_score = 0.0;
  bool early_stopped = false;
};

std::map<std::string, RunResult> g_runs;
const std::vector<int> kKs{10, 20, 50};

const RunResult& run(const RunKey& key) {
  if (auto it = g_runs.find(key.str()); it != g_runs.end()) return it->second;
  const GraphDataset& g = *dataset(key.dataset);
  RunResult r;
  r.pattern = generate_pattern(g.node_count, g.feature_dim, 0.6, 0.1, key.incomplete, key.seed);
  train::TrainConfig cfg;
  cfg.variant = key.variant;
  cfg.seed = key.seed;
  const auto start = std::chrono::steady_clock::now();
  const train::Trainer trainer(g, r.pattern, cfg);
  auto state = trainer.initial_state();
  trainer.run(state);
  r.x_hat = trainer.impute(state.params, state.affinity);
  r.wall_seconds = seconds_since(start);
  r.report = eval::profile_eval(r.x_hat, g, r.pattern, kKs);
  r.log = std::move(state.log);
  r.best_score = state.best_score;
  r.early_stopped = state.early_stopped;
  note("run " + key.str() + ": " + fmt(r.wall_seconds, 0) + " s, R@10 " +
       fmt(100 * r.report.recall_at(10)) + " R@50 " + fmt(100 * r.report.recall_at(50)) +
       " N@50 " + fmt(100 * r.report.ndcg_at(50)));
  return g_runs.emplace(key.str(), std::move(r)).first->second;
}

double published(const std::string& ds, const std::string& setting, const std::string& method,
                 const std::string& metric) {
  const auto v = eval::reference_value(ds, setting, method, metric);
  if (!v) throw StateError("no published value for " + ds + "/" + setting + "/" + method + "/" + metric);
  return *v;
}

bool require_data(int id, const std::string& label, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    if (!dataset(n)) {
      record(id, Verdict::kBlocked, label + ": dataset '" + n + "' not found under " +
                                        (data_root() ? data_root()->string() : "$RITR_DATA_DIR (unset)"));
      return false;
    }
  }
  return true;
}

// Percentage points of a fraction against a published percentage.
bool within(double fraction, double paper_pct, double tol, std::string& detail,
            const std::string& name) {
  const double ours = 100.0 * fraction;
  const bool ok = std::abs(ours - paper_pct) <= tol;
  detail += name + " " + fmt(ours) + " vs " + fmt(paper_pct) + (ok ? "" : " (out)") + "; ";
  return ok;
}

// ---- criteria -----------------------------------------------------------

void profiling_missing(int id, const std::string& ds, double max_minutes) {
  const std::string label = "attribute-missing profiling, " + ds;
  if (!require_data(id, label, {ds == "Cora" ? "cora" : "citeseer"})) return;
  const auto& r = run({ds == "Cora" ? "cora" : "citeseer", 0.0, model::Variant::kRitr, 0});
  bool ok = true;
  std::string detail;
  for (int k : kKs) {
    const std::string m = "Recall@" + std::to_string(k);
    ok &= within(r.report.recall_at(k), published(ds, "missing60", "RITR", m), 2.0, detail, m);
  }
  for (int k : kKs) {
    const std::string m = "NDCG@" + std::to_string(k);
    ok &= within(r.report.ndcg_at(k), published(ds, "missing60", "RITR", m), 2.0, detail, m);
  }
  if (max_minutes > 0) {
    const bool fast = r.wall_seconds <= max_minutes * 60;
    detail += "wall " + fmt(r.wall_seconds / 60, 1) + " min";
    ok &= fast;
  }
  record(id, ok ? Verdict::kPass : Verdict::kFail, label + ": " + detail);
}

void hybrid_cora(int id) {
  const std::string label = "hybrid-absent profiling, Cora";
  if (!require_data(id, label, {"cora"})) return;
  const auto& r = run({"cora", 0.6, model::Variant::kRitr, 0});
  bool ok = true;
  std::string detail;
  ok &= within(r.report.recall_at(50), published("Cora", "hybrid60", "Ours-S-A", "Recall@50"), 2.0,
               detail, "Recall@50");
  ok &= within(r.report.ndcg_at(50), published("Cora", "hybrid60", "Ours-S-A", "NDCG@50"), 2.0,
               detail, "NDCG@50");
  const GraphDataset& g = *dataset("cora");
  for (auto kind : {eval::BaselineKind::kZero, eval::BaselineKind::kMean}) {
    const auto b = eval::profile_eval(eval::baseline_impute(g, r.pattern, kind), g, r.pattern, kKs);
    bool beats = true;
    for (int k : kKs) {
      beats &= r.report.recall_at(k) > b.recall_at(k);
      beats &= r.report.ndcg_at(k) > b.ndcg_at(k);
    }
    detail += std::string("beats ") + std::string(eval::to_string(kind)) + " " +
              (beats ? "yes" : "no") + "; ";
    ok &= beats;
  }
  record(id, ok ? Verdict::kPass : Verdict::kFail, label + ": " + detail);
}

struct Means {
  double recall50 = 0, ndcg50 = 0;
};

Means seed_means(const std::string& ds, model::Variant v) {
  Means m;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto& r = run({ds, 0.6, v, seed});
    m.recall50 += r.report.recall_at(50) / 3.0;
    m.ndcg50 += r.report.ndcg_at(50) / 3.0;
  }
  return m;
}

void variant_ordering(int id) {
  const std::string label = "variant ordering Ours-S-A > Ours-S > Ours-Z";
  if (!require_data(id, label, {"cora", "citeseer"})) return;
  bool ok = true;
  std::string detail;
  for (const char* ds : {"cora", "citeseer"}) {
    const Means z = seed_means(ds, model::Variant::kOursZ);
    const Means s = seed_means(ds, model::Variant::kOursS);
    const Means a = seed_means(ds, model::Variant::kRitr);
    const bool r_ok = a.recall50 > s.recall50 && s.recall50 > z.recall50;
    const bool n_ok = a.ndcg50 > s.ndcg50 && s.ndcg50 > z.ndcg50;
    detail += std::string(ds) + " R@50 " + fmt(100 * a.recall50) + "/" + fmt(100 * s.recall50) + "/" +
              fmt(100 * z.recall50) + " N@50 " + fmt(100 * a.ndcg50) + "/" + fmt(100 * s.ndcg50) +
              "/" + fmt(100 * z.ndcg50) + "; ";
    ok &= r_ok && n_ok;
  }
  record(id, ok ? Verdict::kPass : Verdict::kFail, label + ": " + detail);
}

void ablation(int id) {
  const std::string label = "ablation RITR >= w/o STC >= w/o ITR, Cora NDCG@50";
  if (!require_data(id, label, {"cora"})) return;
  const Means full = seed_means("cora", model::Variant::kRitr);
  const Means no_stc = seed_means("cora", model::Variant::kNoStc);
  const Means no_itr = seed_means("cora", model::Variant::kNoItr);
  const bool ok = full.ndcg50 >= no_stc.ndcg50 && no_stc.ndcg50 >= no_itr.ndcg50;
  record(id, ok ? Verdict::kPass : Verdict::kFail,
         label + ": " + fmt(100 * full.ndcg50) + " / " + fmt(100 * no_stc.ndcg50) + " / " +
             fmt(100 * no_itr.ndcg50));
}

void air_trend(int id) {
  const std::string label = "AIR robustness, Cora Recall@10";
  if (!require_data(id, label, {"cora"})) return;
  bool ok = true;
  std::string detail;
  double prev = 1e9;
  for (int air = 10; air <= 70; air += 10) {
    const auto& r = run({"cora", air / 100.0, model::Variant::kRitr, 0});
    const double ours = 100 * r.report.recall_at(10);
    const double paper =
        published("Cora", "hybrid60_air" + std::to_string(air), "RITR", "Recall@10");
    const bool mono = ours <= prev + 0.5;
    const bool close = std::abs(ours - paper) <= 2.0;
    detail += std::to_string(air) + "% " + fmt(ours) + " vs " + fmt(paper) +
              (mono ? "" : " (rises)") + (close ? "" : " (out)") + "; ";
    ok &= mono && close;
    prev = ours;
  }
  record(id, ok ? Verdict::kPass : Verdict::kFail, label + ": " + detail);
}

void classification(int id) {
  const std::string label = "node classification, Cora missing 60%, mode X";
  if (!require_data(id, label, {"cora"})) return;
  const auto& r = run({"cora", 0.0, model::Variant::kRitr, 0});
  const GraphDataset& g = *dataset("cora");
  const auto cls =
      eval::classify_nodes(r.x_hat, g, r.pattern.test_nodes(), eval::ClassifierMode::kX, 0);
  const double paper = published("Cora", "missing60", "RITR", "Accuracy[X]");
  const double ours = 100 * cls.mean;
  const bool ok = std::abs(ours - paper) <= 3.0;
  record(id, ok ? Verdict::kPass : Verdict::kFail,
         label + ": " + fmt(ours) + " +- " + fmt(100 * cls.stddev) + " vs " + fmt(paper));
}

void gradient_suite(int id) {
  const auto start = std::chrono::steady_clock::now();
  const auto toy = testing::toy_problem();
  const testing::ToyObjective obj(toy);
  const auto report = obj.check(1);
  const double secs = seconds_since(start);
  std::string detail;
  for (const auto& e : report.entries) detail += e.name + " " + fmt(e.max_rel_error * 1e6, 3) + "e-6; ";
  const bool ok = report.ok() && secs < 10.0;
  record(id, ok ? Verdict::kPass : Verdict::kFail,
         "gradient suite, 6-node graph, max rel err " + fmt(report.max_rel_error() * 1e6, 3) +
             "e-6 (< 1e-4), " + fmt(secs, 3) + " s: " + detail);
}

void metric_oracles(int id) {
  const auto start = std::chrono::steady_clock::now();
  RngStream s = RngStream::named(2024, "acceptance-metrics");
  long mismatches = 0, comparisons = 0;
  for (int inst = 0; inst < 1000; ++inst) {
    RngStream si = s.fork(static_cast<std::uint64_t>(inst));
    const Matrix xh = testing::random_matrix(20, 15, si.fork("scores"));
    RngStream sr = si.fork("relevant");
    for (Index v = 0; v < 20; ++v) {
      std::vector<Index> rel;
      for (Index d = 0; d < 15; ++d)
        if (sr.uniform() < 0.25) rel.push_back(d);
      if (rel.empty()) continue;
      const std::vector<double> row(xh.row(v).data(), xh.row(v).data() + 15);
      for (Index k = 1; k <= 15; ++k) {
        comparisons += 2;
        if (eval::recall_at_k(row, rel, k) != testing::brute_recall(row, rel, k)) ++mismatches;
        if (eval::ndcg_at_k(row, rel, k) != testing::brute_ndcg(row, rel, k)) ++mismatches;
      }
    }
  }

  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RngStream r = RngStream::named(seed, "acceptance-oracles");
    const Matrix c = testing::random_matrix(5, 5, r.fork("c"));
    const Matrix t = testing::random_matrix(5, 5, r.fork("t"), 0, 1);
    ad::Tape tape;
    worst = std::max(worst, std::abs(tape.scalar(model::consistency_loss(tape, tape.constant(c), t)) -
                                     testing::consistency_oracle(c, t)));
    const Matrix h = testing::random_matrix(6, 4, r.fork("h"));
    worst = std::max(worst, (model::self_correlation(h) - testing::self_correlation_oracle(h))
                                .cwiseAbs()
                                .maxCoeff());
    const Matrix a = testing::random_matrix(4, 3, r.fork("a"));
    const Matrix b = testing::random_matrix(7, 3, r.fork("b"));
    const std::vector<NodeId> pick{5, 1, 0, 3};
    worst = std::max(worst, (tape.value(model::correlation_matrix(tape, tape.constant(a),
                                                                  tape.constant(b), pick)) -
                             testing::cosine_oracle(a, b, pick))
                                .cwiseAbs()
                                .maxCoeff());
    const Matrix z = testing::random_matrix(4, 4, r.fork("z"), -20, 20);
    const Matrix target = testing::random_matrix(4, 4, r.fork("y"), -0.5, 1).cwiseMax(0.0);
    worst = std::max(worst, std::abs(tape.scalar(model::structure_loss(tape, tape.constant(z),
                                                                       target.sparseView())) -
                                     testing::structure_loss_oracle(z, target)));
  }
  const bool ok = mismatches == 0 && worst < 1e-12;
  record(id, ok ? Verdict::kPass : Verdict::kFail,
         "metric and loss oracles: " + std::to_string(comparisons) + " ranking comparisons, " +
             std::to_string(mismatches) + " mismatches; loss oracles max abs diff " + sci(worst) +
             " (< 1e-12) (" + fmt(seconds_since(start), 2) + " s)");
}

void determinism(int id) {
  const std::string label = "determinism, two full Cora runs";
  if (!require_data(id, label, {"cora"})) return;
  const auto& a = run({"cora", 0.0, model::Variant::kRitr, 0, 0});
  const auto& b = run({"cora", 0.0, model::Variant::kRitr, 0, 1});
  const bool logs = a.log.to_jsonl(false) == b.log.to_jsonl(false);
  const bool metrics = a.report.to_csv() == b.report.to_csv();
  record(id, logs && metrics ? Verdict::kPass : Verdict::kFail,
         label + ": logs " + (logs ? "identical" : "differ") + ", metrics " +
             (metrics ? "identical" : "differ"));
}

struct Convergence {
  bool ok = false;
  std::string detail;
};

Convergence convergence_of(const train::TrainLog& log, double final_val) {
  std::optional<double> loss50, loss_last, val50;
  int last = 0;
  for (const auto& r : log.records) {
    if (r.phase != train::Phase::kTrain) continue;
    if (r.iteration == 50) {
      loss50 = r.total;
      val50 = r.val_recall10;
    }
    loss_last = r.total;
    last = r.iteration;
  }
  Convergence c;
  if (!loss50 || !val50) {
    c.detail = "fewer than 50 joint iterations";
    return c;
  }
  c.ok = *loss_last < *loss50 && final_val > *val50;
  c.detail = "loss@50 " + fmt(*loss50, 4) + " -> loss@" + std::to_string(last) + " " +
             fmt(*loss_last, 4) + ", val R@10@50 " + fmt(100 * *val50) + " -> " +
             fmt(100 * final_val);
  return c;
}

void convergence(int id) {
  const std::string label = "convergence, Cora and Citeseer";
  if (!require_data(id, label, {"cora", "citeseer"})) return;
  bool ok = true;
  std::string detail;
  for (const char* ds : {"cora", "citeseer"}) {
    const auto& r = run({ds, 0.0, model::Variant::kRitr, 0});
    const auto c = convergence_of(r.log, r.best_score);
    detail += std::string(ds) + ": " + c.detail + "; ";
    ok &= c.ok;
  }
  record(id, ok ? Verdict::kPass : Verdict::kFail, label + ": " + detail);
}

// Synthetic stand-ins, reported for information only. They never decide a
// criterion.
void synthetic_proxies() {
  SyntheticSpec spec;
  spec.nodes = 400;
  spec.features = 300;
  spec.classes = 5;
  spec.p_in = 0.04;
  spec.p_out = 0.002;
  const GraphDataset g = make_synthetic(spec);
  const auto pattern = generate_pattern(g.node_count, g.feature_dim, 0.6, 0.1, 0.6, 0);
  // Default schedule: under hybrid absence validation recall only starts
  // to climb after a few hundred joint iterations.
  const train::TrainConfig cfg;
  const train::Trainer trainer(g, pattern, cfg);
  auto a = trainer.initial_state();
  auto b = trainer.initial_state();
  trainer.run(a);
  trainer.run(b);
  const auto ra = eval::profile_eval(trainer.impute(a.params, a.affinity), g, pattern, kKs);
  const auto rb = eval::profile_eval(trainer.impute(b.params, b.affinity), g, pattern, kKs);
  emit("[PROXY] synthetic 400-node graph (not a criterion result):");
  note("determinism: logs " +
       std::string(a.log.to_jsonl(false) == b.log.to_jsonl(false) ? "identical" : "differ") +
       ", metrics " + (ra.to_csv() == rb.to_csv() ? "identical" : "differ"));
  note("convergence: " + convergence_of(a.log, a.best_score).detail);
  std::string cmp = "hybrid 60%: RITR R@10/R@50/N@50 " + fmt(100 * ra.recall_at(10)) + "/" +
                    fmt(100 * ra.recall_at(50)) + "/" + fmt(100 * ra.ndcg_at(50));
  for (auto kind : {eval::BaselineKind::kZero, eval::BaselineKind::kMean,
                    eval::BaselineKind::kNeighAggre}) {
    const auto r = eval::profile_eval(eval::baseline_impute(g, pattern, kind), g, pattern, kKs);
    cmp += "; " + std::string(eval::to_string(kind)) + " " + fmt(100 * r.recall_at(10)) + "/" +
           fmt(100 * r.recall_at(50)) + "/" + fmt(100 * r.ndcg_at(50));
  }
  note(cmp);
}

std::set<int> selected() {
  std::set<int> out;
  const char* env = std::getenv("RITR_ACCEPT_ONLY");
  if (!env || !*env) {
    for (int i = 1; i <= 11; ++i) out.insert(i);
    out.insert(0);  // proxies
    return out;
  }
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) out.insert(item == "proxy" ? 0 : std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  tune_allocator();
  const fs::path report = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_report.txt");
  g_report.open(report);
  const auto want = selected();
  const std::vector<std::pair<int, std::function<void()>>> criteria{
      {1, [] { profiling_missing(1, "Cora", 30.0); }},
      {2, [] { profiling_missing(2, "Citeseer", 0.0); }},
      {3, [] { hybrid_cora(3); }},
      {4, [] { variant_ordering(4); }},
      {5, [] { ablation(5); }},
      {6, [] { air_trend(6); }},
      {7, [] { classification(7); }},
      {8, [] { gradient_suite(8); }},
      {9, [] { metric_oracles(9); }},
      {10, [] { determinism(10); }},
      {11, [] { convergence(11); }},
  };
  for (const auto& [id, fn] : criteria) {
    if (!want.count(id)) continue;
    try {
      fn();
    } catch (const std::exception& e) {
      record(id, Verdict::kFail, std::string("error: ") + e.what());
    }
  }
  if (want.count(0)) synthetic_proxies();

  int pass = 0, fail = 0, blocked = 0;
  for (const auto& l : g_lines) {
    pass += l.verdict == Verdict::kPass;
    fail += l.verdict == Verdict::kFail;
    blocked += l.verdict == Verdict::kBlocked;
  }
  emit("summary: " + std::to_string(pass) + " passed, " + std::to_string(fail) + " failed, " +
       std::to_string(blocked) + " blocked");
  if (fail) return 1;
  return blocked ? kSkip : 0;
}
