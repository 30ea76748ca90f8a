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

// ritr: mask / train / eval / sweep / synth.
//
// Exit codes: 0 ok, 2 bad arguments or data, 3 numeric failure, 4 I/O.

#include "ritr/error.hpp"
#include "ritr/eval.hpp"
#include "ritr/graph_io.hpp"
#include "ritr/synthetic.hpp"
#include "ritr/trainer.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fcntl.h>
#include <spawn.h>
#include <sys/wait.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

extern char** environ;

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ritr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitArgument = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

// ---- small helpers ------------------------------------------------------

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot write " + path.string());
  os << text;
  if (!os) throw IoError("short write to " + path.string());
}

json read_json(const fs::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path.string());
  try {
    return json::parse(is);
  } catch (const json::exception& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

std::vector<int> parse_ks(const std::string& text) {
  std::vector<int> ks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int k = std::stoi(item, &used);
      if (used != item.size() || k < 1) throw std::invalid_argument(item);
      ks.push_back(k);
    } catch (const std::exception&) {
      throw ArgumentError("bad cut-off '" + item + "' in --ks");
    }
  }
  if (ks.empty()) throw ArgumentError("--ks must list at least one cut-off");
  return ks;
}

std::string join_ks(const std::vector<int>& ks) {
  std::string s;
  for (std::size_t i = 0; i < ks.size(); ++i) s += (i ? "," : "") + std::to_string(ks[i]);
  return s;
}

// Option whose value only counts when it was given on the command line.
template <typename T>
struct Flag {
  T value{};
  CLI::Option* opt = nullptr;
  bool given() const { return opt != nullptr && opt->count() > 0; }
};

template <typename T>
Flag<T>& add(CLI::App* app, Flag<T>& f, const std::string& name, const std::string& help) {
  f.opt = app->add_option(name, f.value, help);
  return f;
}

// ---- experiment configuration -------------------------------------------

struct PatternSpec {
  std::optional<fs::path> file;
  double missing = 0.6;
  double val = 0.1;
  double incomplete = 0.0;
  std::uint64_t seed = 0;

  json to_json() const {
    json j{{"missing", missing}, {"val", val}, {"incomplete", incomplete}, {"seed", seed}};
    if (file) j["file"] = file->string();
    return j;
  }
  void overlay(const json& j) {
    for (const auto& [k, v] : j.items()) {
      if (k == "file") file = fs::path(v.get<std::string>());
      else if (k == "missing") missing = v.get<double>();
      else if (k == "val") val = v.get<double>();
      else if (k == "incomplete") incomplete = v.get<double>();
      else if (k == "seed") seed = v.get<std::uint64_t>();
      else throw ArgumentError("unknown pattern option '" + k + "'");
    }
  }
};

struct ExperimentConfig {
  fs::path data;
  PatternSpec pattern;
  train::TrainConfig train;
  std::vector<int> ks{10, 20, 50};
  fs::path out;

  json to_json() const {
    return json{{"data", data.string()},
                {"pattern", pattern.to_json()},
                {"train", train.to_json()},
                {"ks", ks},
                {"out", out.string()}};
  }

  void overlay_file(const fs::path& path) {
    const json j = read_json(path);
    if (!j.is_object()) throw ArgumentError(path.string() + ": config must be a JSON object");
    try {
      for (const auto& [k, v] : j.items()) {
        if (k == "data") data = v.get<std::string>();
        else if (k == "out") out = v.get<std::string>();
        else if (k == "pattern") pattern.overlay(v);
        else if (k == "train") train = train::TrainConfig::from_json(v, train);
        else if (k == "ks") ks = v.get<std::vector<int>>();
        else throw ArgumentError(path.string() + ": unknown key '" + k + "'");
      }
    } catch (const json::exception& e) {
      throw ArgumentError(path.string() + ": " + e.what());
    }
  }
};

// Flags shared by train and sweep.
struct TrainFlags {
  Flag<std::string> variant;
  Flag<double> alpha, beta, gamma, lr, dropout, weight_decay;
  Flag<int> r_order, pretrain_iters, train_iters, update_interval, patience, eval_every, min_iters;
  Flag<Index> hidden, latent;
  Flag<std::uint64_t> seed;
  bool no_joint_consistency = false;

  void attach(CLI::App* app) {
    add(app, variant, "--variant", "ritr, itr, ours_z, ours_s, no_stc, no_itr, no_ir, no_asu");
    add(app, alpha, "--alpha", "weight of the attribute loss");
    add(app, beta, "--beta", "weight of the consistency loss");
    add(app, gamma, "--gamma", "blend between adjacency and self-correlation");
    add(app, r_order, "--r-order", "power of the sub-graph adjacency used as consistency target");
    add(app, pretrain_iters, "--pretrain-iters", "consistency pre-training iterations");
    add(app, train_iters, "--train-iters", "joint training iterations");
    add(app, update_interval, "--update-interval", "iterations between affinity updates");
    add(app, lr, "--lr", "Adam learning rate");
    add(app, hidden, "--hidden", "hidden width");
    add(app, latent, "--latent", "latent width");
    add(app, dropout, "--dropout", "dropout rate");
    add(app, weight_decay, "--weight-decay", "L2 coefficient");
    add(app, patience, "--patience", "early-stopping patience, in evaluations");
    add(app, eval_every, "--eval-every", "iterations between validation passes");
    add(app, min_iters, "--min-iters", "iterations before early stopping may fire");
    add(app, seed, "--seed", "root seed for init, noise and dropout");
    app->add_flag("--no-joint-consistency", no_joint_consistency,
                  "drop the consistency term after pre-training");
  }

  void apply(train::TrainConfig& c) const {
    if (variant.given()) c.variant = model::parse_variant(variant.value);
    if (alpha.given()) c.alpha = alpha.value;
    if (beta.given()) c.beta = beta.value;
    if (gamma.given()) c.gamma = gamma.value;
    if (r_order.given()) c.r_order = r_order.value;
    if (pretrain_iters.given()) c.pretrain_iters = pretrain_iters.value;
    if (train_iters.given()) c.train_iters = train_iters.value;
    if (update_interval.given()) c.update_interval = update_interval.value;
    if (lr.given()) c.lr = lr.value;
    if (hidden.given()) c.hidden = hidden.value;
    if (latent.given()) c.latent = latent.value;
    if (dropout.given()) c.dropout = dropout.value;
    if (weight_decay.given()) c.weight_decay = weight_decay.value;
    if (patience.given()) c.patience = patience.value;
    if (eval_every.given()) c.eval_every = eval_every.value;
    if (min_iters.given()) c.min_iters = min_iters.value;
    if (seed.given()) c.seed = seed.value;
    if (no_joint_consistency) c.consistency_in_joint = false;
  }

  // Re-emits the given flags for a child process.
  void forward(std::vector<std::string>& args) const {
    auto put = [&](const char* name, const auto& f) {
      if (f.given()) {
        std::ostringstream os;
        os.precision(17);
        os << f.value;
        args.insert(args.end(), {name, os.str()});
      }
    };
    put("--variant", variant);
    put("--alpha", alpha);
    put("--beta", beta);
    put("--gamma", gamma);
    put("--r-order", r_order);
    put("--pretrain-iters", pretrain_iters);
    put("--train-iters", train_iters);
    put("--update-interval", update_interval);
    put("--lr", lr);
    put("--hidden", hidden);
    put("--latent", latent);
    put("--dropout", dropout);
    put("--weight-decay", weight_decay);
    put("--patience", patience);
    put("--eval-every", eval_every);
    put("--min-iters", min_iters);
    put("--seed", seed);
    if (no_joint_consistency) args.push_back("--no-joint-consistency");
  }
};

struct PatternFlags {
  Flag<std::string> file;
  Flag<double> missing, val, incomplete;
  Flag<std::uint64_t> seed;

  void attach(CLI::App* app, bool with_file) {
    if (with_file) add(app, file, "--pattern", "absence pattern JSON (overrides the ratios)");
    add(app, missing, "--missing", "fraction of nodes with no attributes");
    add(app, val, "--val", "fraction of nodes used for validation (taken from the missing ones)");
    add(app, incomplete, "--incomplete", "fraction of entries hidden on the remaining nodes");
    add(app, seed, "--mask-seed", "seed of the absence pattern");
  }

  void apply(PatternSpec& p) const {
    if (file.given()) p.file = fs::path(file.value);
    if (missing.given()) p.missing = missing.value;
    if (val.given()) p.val = val.value;
    if (incomplete.given()) p.incomplete = incomplete.value;
    if (seed.given()) p.seed = seed.value;
  }
};

AbsencePattern resolve_pattern(const PatternSpec& spec, const GraphDataset& g) {
  if (spec.file) {
    AbsencePattern p = AbsencePattern::load(*spec.file);
    if (p.node_count != g.node_count || p.feature_dim != g.feature_dim) {
      throw ArgumentError(spec.file->string() + " was generated for a different graph");
    }
    return p;
  }
  return generate_pattern(g.node_count, g.feature_dim, spec.missing, spec.val, spec.incomplete,
                          spec.seed);
}

std::string plotdata_csv(const train::TrainLog& log) {
  std::ostringstream os;
  os.precision(17);
  os << "step,phase,iteration,loss,val_recall10\n";
  for (const auto& r : log.records) {
    os << r.step << ',' << train::to_string(r.phase) << ',' << r.iteration << ',' << r.total << ',';
    if (r.val_recall10) os << *r.val_recall10;
    os << '\n';
  }
  return os.str();
}

// ---- mask ---------------------------------------------------------------

struct MaskArgs {
  std::string data;
  std::string out;
  PatternFlags pattern;
};

int cmd_mask(const MaskArgs& a) {
  PatternSpec spec;
  a.pattern.apply(spec);
  const GraphDataset g = load_dataset(fs::path(a.data));
  const AbsencePattern p = generate_pattern(g.node_count, g.feature_dim, spec.missing, spec.val,
                                            spec.incomplete, spec.seed);
  p.save(a.out);
  std::cout << "nodes " << g.node_count << "  missing " << p.missing_nodes.size()
            << "  validation " << p.validation_nodes.size() << "  test " << p.test_nodes().size()
            << "  incomplete " << p.incomplete_nodes.size() << "  hidden entries "
            << static_cast<Index>(p.incomplete_mask.size() - p.incomplete_mask.sum()) << '\n';
  return kExitOk;
}

// ---- train --------------------------------------------------------------

struct TrainArgs {
  std::string data;
  std::string out;
  std::string config;
  std::string resume;
  std::string ks;
  std::int64_t checkpoint_every = 0;
  std::int64_t max_steps = -1;
  PatternFlags pattern;
  TrainFlags train;
};

int cmd_train(const TrainArgs& a) {
  const auto started = std::chrono::steady_clock::now();
  ExperimentConfig cfg;
  if (!a.config.empty()) cfg.overlay_file(a.config);
  if (!a.data.empty()) cfg.data = a.data;
  if (!a.out.empty()) cfg.out = a.out;
  if (!a.ks.empty()) cfg.ks = parse_ks(a.ks);
  a.pattern.apply(cfg.pattern);
  a.train.apply(cfg.train);

  std::optional<train::Checkpoint> resumed;
  if (!a.resume.empty()) {
    if (!fs::exists(fs::path(a.resume) / "manifest.json")) {
      throw ArgumentError("no checkpoint at " + a.resume);
    }
    resumed = train::load_checkpoint(a.resume);
    cfg.train = resumed->config;
    const fs::path sibling = fs::path(a.resume).parent_path() / "pattern.json";
    if (!a.pattern.file.given() && fs::exists(sibling)) cfg.pattern.file = sibling;
  }
  if (cfg.data.empty()) throw ArgumentError("--data is required");
  if (cfg.out.empty()) throw ArgumentError("--out is required");
  cfg.train.validate();

  const GraphDataset g = load_dataset(cfg.data);
  const AbsencePattern pattern = resolve_pattern(cfg.pattern, g);
  pattern.save(cfg.out / "pattern.json");
  write_text(cfg.out / "config.json", cfg.to_json().dump(2) + "\n");

  const train::Trainer trainer(g, pattern, cfg.train);
  train::TrainState state = resumed ? std::move(resumed->state) : trainer.initial_state();
  const fs::path ckpt = cfg.out / "checkpoint";
  std::int64_t steps = 0;
  while (state.phase != train::Phase::kDone && (a.max_steps < 0 || steps < a.max_steps)) {
    trainer.step(state);
    ++steps;
    if (a.checkpoint_every > 0 && steps % a.checkpoint_every == 0) {
      train::save_checkpoint(state, cfg.train, ckpt);
    }
  }
  train::save_checkpoint(state, cfg.train, ckpt);
  // Wall-clock times live apart from the log so reruns hash identically.
  write_text(cfg.out / "trainlog.jsonl", state.log.to_jsonl(false));
  write_text(cfg.out / "plotdata.csv", plotdata_csv(state.log));
  {
    std::ostringstream os;
    os << "step,wall_ms\n";
    for (const auto& r : state.log.records) os << r.step << ',' << r.wall_ms << '\n';
    write_text(cfg.out / "timing.csv", os.str());
  }

  json summary;
  summary["command"] = "train";
  summary["config"] = cfg.to_json();
  summary["checkpoint"] = ckpt.string();
  summary["trainlog"] = (cfg.out / "trainlog.jsonl").string();
  const bool done = state.phase == train::Phase::kDone;
  summary["status"] = done ? "complete" : "partial";
  json tr;
  tr["phase"] = std::string(train::to_string(state.phase));
  tr["records"] = state.log.records.size();
  tr["best_iteration"] = state.best_iteration;
  tr["early_stopped"] = state.early_stopped;
  if (!state.log.records.empty()) tr["final_loss"] = state.log.records.back().total;
  summary["training"] = tr;

  if (done) {
    const Matrix x_hat = trainer.impute(state.params, state.affinity);
    const auto report = eval::profile_eval(x_hat, g, pattern, cfg.ks);
    summary["metrics"] = report.to_json();
    write_text(cfg.out / "metrics.csv", report.to_csv());
    std::cout << "test nodes " << report.evaluated;
    for (std::size_t i = 0; i < report.ks.size(); ++i) {
      std::cout << "  R@" << report.ks[i] << ' ' << report.recall[i] << "  N@" << report.ks[i]
                << ' ' << report.ndcg[i];
    }
    std::cout << '\n';
  } else {
    std::cout << "stopped after " << steps << " steps; checkpoint at " << ckpt.string() << '\n';
  }
  summary["wall_clock_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  write_text(cfg.out / "summary.json", summary.dump(2) + "\n");
  return kExitOk;
}

// ---- eval ---------------------------------------------------------------

struct EvalArgs {
  std::string data;
  std::string out;
  std::string checkpoint;
  std::string baseline;
  std::string ks = "10,20,50";
  std::vector<std::string> classify;
  int cls_repeats = 10;
  int cls_folds = 5;
  int cls_iters = 1000;
  std::uint64_t cls_seed = 0;
  std::string reference_dataset;
  std::string reference_setting = "missing60";
  PatternFlags pattern;
};

int cmd_eval(const EvalArgs& a) {
  if (a.checkpoint.empty() == a.baseline.empty()) {
    throw ArgumentError("give exactly one of --checkpoint or --baseline");
  }
  const auto ks = parse_ks(a.ks);
  PatternSpec spec;
  std::optional<train::Checkpoint> ckpt;
  if (!a.checkpoint.empty()) {
    const fs::path dir(a.checkpoint);
    if (!fs::exists(dir / "manifest.json")) throw ArgumentError("no checkpoint at " + a.checkpoint);
    ckpt = train::load_checkpoint(dir);
    // A train run stores its pattern beside the checkpoint directory.
    const fs::path sibling = dir.parent_path() / "pattern.json";
    if (fs::exists(sibling)) spec.file = sibling;
  }
  a.pattern.apply(spec);
  if (!spec.file && !a.pattern.missing.given() && ckpt) {
    throw ArgumentError("no pattern found beside the checkpoint; pass --pattern");
  }

  const GraphDataset g = load_dataset(fs::path(a.data));
  const AbsencePattern pattern = resolve_pattern(spec, g);

  Matrix x_hat;
  std::string source;
  if (ckpt) {
    const train::Trainer trainer(g, pattern, ckpt->config);
    x_hat = trainer.impute(ckpt->state.params, ckpt->state.affinity);
    source = "checkpoint";
    write_text(fs::path(a.out) / "plotdata.csv", plotdata_csv(ckpt->state.log));
  } else {
    x_hat = eval::baseline_impute(g, pattern, eval::parse_baseline(a.baseline));
    source = "baseline:" + a.baseline;
  }

  const auto ranking = eval::profile_eval(x_hat, g, pattern, ks);
  json report;
  report["command"] = "eval";
  report["source"] = source;
  report["pattern"] = spec.to_json();
  report["ranking"] = ranking.to_json();
  std::string csv = ranking.to_csv();

  const auto test = pattern.test_nodes();
  eval::ClassifierOptions copt;
  copt.repeats = a.cls_repeats;
  copt.folds = a.cls_folds;
  copt.iterations = a.cls_iters;
  for (const auto& mode_text : a.classify) {
    const auto mode = eval::parse_classifier_mode(mode_text);
    const auto cls = eval::classify_nodes(x_hat, g, test, mode, a.cls_seed, copt);
    report["classification"].push_back(cls.to_json());
    std::ostringstream os;
    os.precision(17);
    os << "accuracy[" << eval::to_string(mode) << "],," << cls.mean << '\n';
    csv += os.str();
    std::cout << "accuracy " << eval::to_string(mode) << ' ' << cls.mean << " +- " << cls.stddev
              << '\n';
  }

  if (!a.reference_dataset.empty()) {
    std::ostringstream os;
    os.precision(17);
    os << "method,metric,value,source\n";
    for (const auto& e : eval::reference_results()) {
      if (e.dataset == a.reference_dataset && e.setting == a.reference_setting) {
        os << e.method << ',' << e.metric << ',' << e.value << ",published\n";
      }
    }
    for (std::size_t i = 0; i < ranking.ks.size(); ++i) {
      os << source << ",Recall@" << ranking.ks[i] << ',' << 100.0 * ranking.recall[i]
         << ",measured\n";
      os << source << ",NDCG@" << ranking.ks[i] << ',' << 100.0 * ranking.ndcg[i]
         << ",measured\n";
    }
    write_text(fs::path(a.out) / "comparison.csv", os.str());
  }

  write_text(fs::path(a.out) / "report.json", report.dump(2) + "\n");
  write_text(fs::path(a.out) / "metrics.csv", csv);
  std::cout << source << "  test nodes " << ranking.evaluated;
  for (std::size_t i = 0; i < ranking.ks.size(); ++i) {
    std::cout << "  R@" << ranking.ks[i] << ' ' << ranking.recall[i] << "  N@" << ranking.ks[i]
              << ' ' << ranking.ndcg[i];
  }
  std::cout << '\n';
  return kExitOk;
}

// ---- sweep --------------------------------------------------------------

struct SweepArgs {
  std::string data;
  std::string out;
  std::string config;
  std::string ks;
  std::vector<std::string> grid;
  int jobs = 1;
  PatternFlags pattern;
  TrainFlags train;
};

struct GridAxis {
  std::string key;
  std::vector<std::string> values;
};

const std::map<std::string, std::string>& grid_flags() {
  static const std::map<std::string, std::string> m{
      {"air", "--incomplete"}, {"incomplete", "--incomplete"}, {"missing", "--missing"},
      {"alpha", "--alpha"},    {"beta", "--beta"},             {"gamma", "--gamma"},
      {"seed", "--seed"},      {"mask_seed", "--mask-seed"},   {"variant", "--variant"},
      {"update_interval", "--update-interval"}};
  return m;
}

std::vector<GridAxis> parse_grid(const std::vector<std::string>& specs) {
  std::vector<GridAxis> axes;
  for (const auto& s : specs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw ArgumentError("grid '" + s + "' is not key=v1,v2");
    GridAxis ax;
    ax.key = s.substr(0, eq);
    if (!grid_flags().count(ax.key)) throw ArgumentError("unknown grid key '" + ax.key + "'");
    std::stringstream ss(s.substr(eq + 1));
    std::string v;
    while (std::getline(ss, v, ',')) {
      if (!v.empty()) ax.values.push_back(v);
    }
    if (ax.values.empty()) throw ArgumentError("grid '" + ax.key + "' has no values");
    axes.push_back(ax);
  }
  if (axes.empty()) throw ArgumentError("sweep needs at least one --grid axis");
  return axes;
}

pid_t spawn(const std::vector<std::string>& args, const fs::path& log) {
  std::vector<char*> argv;
  for (const auto& s : args) argv.push_back(const_cast<char*>(s.c_str()));
  argv.push_back(nullptr);
  posix_spawn_file_actions_t fa;
  posix_spawn_file_actions_init(&fa);
  posix_spawn_file_actions_addopen(&fa, 1, log.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  posix_spawn_file_actions_adddup2(&fa, 1, 2);
  pid_t pid = 0;
  const int rc = posix_spawn(&pid, argv[0], &fa, nullptr, argv.data(), environ);
  posix_spawn_file_actions_destroy(&fa);
  if (rc != 0) throw IoError("cannot start " + args[0]);
  return pid;
}

int cmd_sweep(const SweepArgs& a, const std::string& self) {
  const auto axes = parse_grid(a.grid);
  if (a.data.empty() && a.config.empty()) throw ArgumentError("--data or --config is required");
  if (a.jobs < 1) throw ArgumentError("--jobs must be >= 1");
  const std::vector<int> ks = a.ks.empty() ? std::vector<int>{10, 20, 50} : parse_ks(a.ks);

  // Cartesian product, first axis slowest.
  std::vector<std::vector<std::string>> points{{}};
  for (const auto& ax : axes) {
    std::vector<std::vector<std::string>> next;
    for (const auto& p : points) {
      for (const auto& v : ax.values) {
        next.push_back(p);
        next.back().push_back(v);
      }
    }
    points.swap(next);
  }

  const fs::path out(a.out);
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) throw IoError("cannot create " + out.string());

  std::vector<int> status(points.size(), -1);
  std::vector<fs::path> dirs(points.size());
  std::map<pid_t, std::size_t> running;
  std::size_t next = 0;
  auto reap_one = [&] {
    int ws = 0;
    const pid_t pid = waitpid(-1, &ws, 0);
    if (pid <= 0) return;
    const auto idx = running.at(pid);
    running.erase(pid);
    status[idx] = WIFEXITED(ws) ? WEXITSTATUS(ws) : 128;
    std::cout << "point " << idx << " exit " << status[idx] << '\n';
  };
  while (next < points.size() || !running.empty()) {
    while (next < points.size() && static_cast<int>(running.size()) < a.jobs) {
      dirs[next] = out / ("point_" + std::to_string(next));
      std::vector<std::string> args{self, "train", "--out", dirs[next].string(), "--ks", join_ks(ks)};
      if (!a.config.empty()) args.insert(args.end(), {"--config", a.config});
      if (!a.data.empty()) args.insert(args.end(), {"--data", a.data});
      auto put = [&](const char* name, const auto& f) {
        if (f.given()) {
          std::ostringstream os;
          os.precision(17);
          os << f.value;
          args.insert(args.end(), {name, os.str()});
        }
      };
      put("--missing", a.pattern.missing);
      put("--val", a.pattern.val);
      put("--incomplete", a.pattern.incomplete);
      put("--mask-seed", a.pattern.seed);
      a.train.forward(args);
      for (std::size_t k = 0; k < axes.size(); ++k) {
        args.insert(args.end(), {grid_flags().at(axes[k].key), points[next][k]});
      }
      fs::create_directories(dirs[next], ec);
      running[spawn(args, dirs[next] / "stdout.txt")] = next;
      ++next;
    }
    reap_one();
  }

  std::ostringstream csv;
  csv.precision(17);
  for (const auto& ax : axes) csv << ax.key << ',';
  for (int k : ks) csv << "Recall@" << k << ',';
  for (int k : ks) csv << "NDCG@" << k << ',';
  csv << "exit_code\n";
  bool all_ok = true;
  json table = json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    json row;
    for (std::size_t k = 0; k < axes.size(); ++k) {
      csv << points[i][k] << ',';
      row[axes[k].key] = points[i][k];
    }
    std::optional<eval::RankingReport> rep;
    if (status[i] == 0) {
      const json s = read_json(dirs[i] / "summary.json");
      if (s.contains("metrics")) {
        eval::RankingReport r;
        for (int k : ks) {
          r.ks.push_back(k);
          r.recall.push_back(s["metrics"]["recall"][std::to_string(k)].get<double>());
          r.ndcg.push_back(s["metrics"]["ndcg"][std::to_string(k)].get<double>());
        }
        rep = r;
        row["metrics"] = s["metrics"];
      }
    }
    for (std::size_t q = 0; q < ks.size(); ++q) {
      if (rep) csv << rep->recall[q];
      csv << ',';
    }
    for (std::size_t q = 0; q < ks.size(); ++q) {
      if (rep) csv << rep->ndcg[q];
      csv << ',';
    }
    csv << status[i] << '\n';
    row["exit_code"] = status[i];
    row["dir"] = dirs[i].string();
    table.push_back(row);
    all_ok = all_ok && status[i] == 0;
  }
  write_text(out / "sweep.csv", csv.str());
  write_text(out / "sweep.json", table.dump(2) + "\n");
  std::cout << "wrote " << (out / "sweep.csv").string() << '\n';
  return all_ok ? kExitOk : kExitFailure;
}

// ---- synth --------------------------------------------------------------

int cmd_synth(const SyntheticSpec& spec, const std::string& out) {
  const GraphDataset g = make_synthetic(spec);
  save_dataset(g, out);
  std::cout << "nodes " << g.node_count << "  edges " << g.edges.size() << "  dim "
            << g.feature_dim << "  classes " << g.class_count << '\n';
  return kExitOk;
}

std::string self_path(const char* argv0) {
  std::error_code ec;
  const auto p = fs::read_symlink("/proc/self/exe", ec);
  return ec ? std::string(argv0) : p.string();
}

}  // namespace

int main(int argc, char** argv) {
  tune_allocator();
  CLI::App app{"Graph attribute imputation with initializing-then-refining networks"};
  app.require_subcommand(1);

  MaskArgs mask;
  auto* m = app.add_subcommand("mask", "generate an absence pattern");
  m->add_option("--data", mask.data, "dataset directory")->required();
  m->add_option("--out", mask.out, "pattern file to write")->required();
  mask.pattern.attach(m, false);

  TrainArgs tr;
  auto* t = app.add_subcommand("train", "pre-train and train a model, then score the test nodes");
  t->add_option("--data", tr.data, "dataset directory");
  t->add_option("--out", tr.out, "output directory");
  t->add_option("--config", tr.config, "JSON experiment config");
  t->add_option("--resume", tr.resume, "checkpoint directory to continue from");
  t->add_option("--ks", tr.ks, "comma-separated cut-offs (default 10,20,50)");
  t->add_option("--checkpoint-every", tr.checkpoint_every, "save a checkpoint every N steps");
  t->add_option("--max-steps", tr.max_steps, "stop after N steps and keep the checkpoint");
  tr.pattern.attach(t, true);
  tr.train.attach(t);

  EvalArgs ev;
  auto* e = app.add_subcommand("eval", "score a checkpoint or a baseline");
  e->add_option("--data", ev.data, "dataset directory")->required();
  e->add_option("--out", ev.out, "output directory")->required();
  e->add_option("--checkpoint", ev.checkpoint, "checkpoint directory");
  e->add_option("--baseline", ev.baseline, "zero, mean or neigh_aggre");
  e->add_option("--ks", ev.ks, "comma-separated cut-offs");
  e->add_option("--classify", ev.classify, "X and/or X+A");
  e->add_option("--cls-repeats", ev.cls_repeats, "cross-validation repeats");
  e->add_option("--cls-folds", ev.cls_folds, "folds per repeat");
  e->add_option("--cls-iters", ev.cls_iters, "classifier training iterations per fold");
  e->add_option("--cls-seed", ev.cls_seed, "seed of the fold split and classifier");
  e->add_option("--reference-dataset", ev.reference_dataset,
                "add published numbers for this dataset to comparison.csv");
  e->add_option("--reference-setting", ev.reference_setting,
                "missing60, hybrid60 or hybrid60_air<NN>");
  ev.pattern.attach(e, true);

  SweepArgs sw;
  auto* s = app.add_subcommand("sweep", "run train over a grid and tabulate the results");
  s->add_option("--data", sw.data, "dataset directory");
  s->add_option("--out", sw.out, "output directory")->required();
  s->add_option("--config", sw.config, "JSON experiment config passed to every run");
  s->add_option("--ks", sw.ks, "comma-separated cut-offs");
  s->add_option("--grid", sw.grid, "key=v1,v2,... (air, missing, alpha, beta, gamma, seed, ...)");
  s->add_option("--jobs", sw.jobs, "runs in flight at once");
  sw.pattern.attach(s, false);
  sw.train.attach(s);

  SyntheticSpec syn;
  std::string syn_out;
  auto* y = app.add_subcommand("synth", "write a planted-partition dataset");
  y->add_option("--out", syn_out, "dataset directory")->required();
  y->add_option("--nodes", syn.nodes, "node count");
  y->add_option("--features", syn.features, "vocabulary size");
  y->add_option("--classes", syn.classes, "class count");
  y->add_option("--p-in", syn.p_in, "edge probability inside a class");
  y->add_option("--p-out", syn.p_out, "edge probability across classes");
  y->add_option("--words", syn.words_per_node, "words drawn per node");
  y->add_option("--purity", syn.topic_purity, "share of words drawn from the class topic");
  y->add_option("--seed", syn.seed, "generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? kExitOk : kExitArgument;
  }

  try {
    if (*m) return cmd_mask(mask);
    if (*t) return cmd_train(tr);
    if (*e) return cmd_eval(ev);
    if (*s) return cmd_sweep(sw, self_path(argv[0]));
    if (*y) return cmd_synth(syn, syn_out);
  } catch (const ArgumentError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitArgument;
  } catch (const NumericError& err) {
    std::cerr << "numeric failure: " << err.what() << '\n';
    return kExitNumeric;
  } catch (const IoError& err) {
    std::cerr << "i/o error: " << err.what() << '\n';
    return kExitIo;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
