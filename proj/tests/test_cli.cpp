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

// Drives the built `ritr` binary end to end.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kRoot = fs::temp_directory_path() / "ritr_test_cli";

int run(const std::string& args) {
  const std::string cmd = std::string(RITR_CLI) + " " + args + " >>" +
                          (kRoot / "log.txt").string() + " 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::string p(const std::string& rel) { return (kRoot / rel).string(); }

const char* kSmall =
    " --pretrain-iters 5 --train-iters 20 --min-iters 20 --eval-every 5 --hidden 16 --latent 8";

struct Setup {
  Setup() {
    fs::remove_all(kRoot);
    fs::create_directories(kRoot);
    REQUIRE(run("synth --out " + p("ds") + " --nodes 150 --features 80 --classes 3") == 0);
  }
};

}  // namespace

TEST_CASE_FIXTURE(Setup, "mask writes identical files and rejects bad ratios") {
  CHECK(run("mask --data " + p("ds") + " --out " + p("a.json") + " --missing 0.6 --incomplete 0.6 --mask-seed 7") == 0);
  CHECK(run("mask --data " + p("ds") + " --out " + p("b.json") + " --missing 0.6 --incomplete 0.6 --mask-seed 7") == 0);
  CHECK(slurp(p("a.json")) == slurp(p("b.json")));
  CHECK(json::parse(slurp(p("a.json")))["missing_nodes"].size() == 90);
  CHECK(run("mask --data " + p("ds") + " --out " + p("c.json") + " --missing 1.2") == 2);
  CHECK(run("mask --data " + p("nowhere") + " --out " + p("c.json")) == 4);
  CHECK(run("mask --bogus") == 2);
  CHECK(run("--help") == 0);
}

TEST_CASE_FIXTURE(Setup, "train writes its artifacts and reruns are byte-identical") {
  const std::string base = "train --data " + p("ds") + " --incomplete 0.5" + kSmall;
  REQUIRE(run(base + " --out " + p("r1")) == 0);
  REQUIRE(run(base + " --out " + p("r2")) == 0);
  for (const char* f : {"summary.json", "metrics.csv", "trainlog.jsonl", "plotdata.csv",
                        "config.json", "pattern.json", "checkpoint/manifest.json"})
    CHECK(fs::exists(kRoot / "r1" / f));
  for (const char* f : {"metrics.csv", "trainlog.jsonl", "plotdata.csv", "pattern.json"})
    CHECK(slurp(kRoot / "r1" / f) == slurp(kRoot / "r2" / f));
  auto s1 = json::parse(slurp(kRoot / "r1" / "summary.json"));
  auto s2 = json::parse(slurp(kRoot / "r2" / "summary.json"));
  CHECK(s1["status"] == "complete");
  CHECK(s1["metrics"]["recall"].contains("50"));
  s1.erase("wall_clock_seconds");
  s2.erase("wall_clock_seconds");
  s1["config"].erase("out");
  s2["config"].erase("out");
  s1.erase("checkpoint");
  s2.erase("checkpoint");
  s1.erase("trainlog");
  s2.erase("trainlog");
  CHECK(s1 == s2);
}

TEST_CASE_FIXTURE(Setup, "untrained run still reports metrics") {
  REQUIRE(run("train --data " + p("ds") + " --out " + p("z") +
              " --pretrain-iters 0 --train-iters 0 --hidden 8 --latent 4") == 0);
  const auto s = json::parse(slurp(kRoot / "z" / "summary.json"));
  CHECK(s["status"] == "complete");
  CHECK(s["metrics"]["evaluated_nodes"].get<int>() > 0);
}

TEST_CASE_FIXTURE(Setup, "flags override the config file, which overrides defaults") {
  std::ofstream(kRoot / "cfg.json")
      << R"({"data": ")" << p("ds") << R"(", "train": {"alpha": 3, "beta": 2, "hidden": 8, "latent": 4,
           "pretrain_iters": 2, "train_iters": 3}, "pattern": {"missing": 0.5}})";
  REQUIRE(run("train --config " + p("cfg.json") + " --alpha 5 --out " + p("c")) == 0);
  const auto c = json::parse(slurp(kRoot / "c" / "config.json"));
  CHECK(c["train"]["alpha"] == 5.0);
  CHECK(c["train"]["beta"] == 2.0);
  CHECK(c["train"]["gamma"] == 0.5);
  CHECK(c["pattern"]["missing"] == 0.5);
  std::ofstream(kRoot / "bad.json") << R"({"trian": {}})";
  CHECK(run("train --config " + p("bad.json") + " --out " + p("d")) == 2);
}

TEST_CASE_FIXTURE(Setup, "interrupted and resumed training matches a straight run") {
  const std::string base = "train --data " + p("ds") + std::string(kSmall);
  REQUIRE(run(base + " --out " + p("full")) == 0);
  REQUIRE(run(base + " --out " + p("half") + " --max-steps 12") == 0);
  CHECK(json::parse(slurp(kRoot / "half" / "summary.json"))["status"] == "partial");
  REQUIRE(run("train --resume " + p("half/checkpoint") + " --data " + p("ds") + " --out " + p("half")) == 0);
  CHECK(slurp(kRoot / "half" / "trainlog.jsonl") == slurp(kRoot / "full" / "trainlog.jsonl"));
  CHECK(slurp(kRoot / "half" / "metrics.csv") == slurp(kRoot / "full" / "metrics.csv"));
}

TEST_CASE_FIXTURE(Setup, "numeric blow-up exits 3") {
  CHECK(run("train --data " + p("ds") + " --out " + p("nan") +
            " --lr 1e300 --pretrain-iters 3 --train-iters 3 --hidden 8 --latent 4") == 3);
}

TEST_CASE_FIXTURE(Setup, "eval: baselines, checkpoints, cut-offs and classification") {
  REQUIRE(run("mask --data " + p("ds") + " --out " + p("pat.json")) == 0);
  const std::string ev = "eval --data " + p("ds") + " --pattern " + p("pat.json");
  REQUIRE(run(ev + " --baseline zero --out " + p("e1") + " --ks 10,20,50") == 0);
  REQUIRE(run(ev + " --baseline zero --out " + p("e2") + " --ks 10,20,50") == 0);
  CHECK(slurp(kRoot / "e1" / "report.json") == slurp(kRoot / "e2" / "report.json"));
  const auto r = json::parse(slurp(kRoot / "e1" / "report.json"));
  std::vector<std::string> keys;
  for (const auto& [k, v] : r["ranking"]["recall"].items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"10", "20", "50"});
  REQUIRE(run(ev + " --baseline mean --out " + p("e3") + " --ks 5 --classify X --cls-repeats 1 --cls-iters 50") == 0);
  const auto m = json::parse(slurp(kRoot / "e3" / "report.json"));
  CHECK(m["ranking"]["recall"].size() == 1);
  CHECK(m["classification"][0]["mode"] == "X");

  CHECK(run("eval --data " + p("ds") + " --checkpoint " + p("missing_ckpt") + " --out " + p("e4")) == 2);
  CHECK(run(ev + " --out " + p("e5")) == 2);
  CHECK(run(ev + " --baseline zero --ks 0 --out " + p("e6")) == 2);

  REQUIRE(run("train --data " + p("ds") + " --out " + p("t") + std::string(kSmall)) == 0);
  REQUIRE(run("eval --data " + p("ds") + " --checkpoint " + p("t/checkpoint") + " --out " + p("e7") +
              " --reference-dataset Cora") == 0);
  const auto t = json::parse(slurp(kRoot / "t" / "summary.json"));
  const auto e = json::parse(slurp(kRoot / "e7" / "report.json"));
  CHECK(t["metrics"] == e["ranking"]);
  CHECK(fs::exists(kRoot / "e7" / "comparison.csv"));
  CHECK(fs::exists(kRoot / "e7" / "plotdata.csv"));
}

TEST_CASE_FIXTURE(Setup, "sweep tabulates a grid and records failures") {
  CHECK(run("sweep --data " + p("ds") + " --out " + p("s0")) == 2);
  CHECK(run("sweep --data " + p("ds") + " --out " + p("s0") + " --grid air=") == 2);
  REQUIRE(run("sweep --data " + p("ds") + " --out " + p("s1") + " --grid air=0.1,0.3,0.5 --jobs 2" +
              kSmall) == 0);
  std::istringstream csv(slurp(kRoot / "s1" / "sweep.csv"));
  std::string line;
  int rows = 0;
  std::getline(csv, line);
  CHECK(line.rfind("air,Recall@10", 0) == 0);
  while (std::getline(csv, line)) {
    ++rows;
    CHECK(line.substr(line.size() - 2) == ",0");
  }
  CHECK(rows == 3);

  CHECK(run("sweep --data " + p("ds") + " --out " + p("s2") + " --grid gamma=0.5,7" + kSmall) != 0);
  const auto s2 = slurp(kRoot / "s2" / "sweep.csv");
  CHECK(s2.find("\n0.5,") != std::string::npos);
  CHECK(s2.find(",2\n") != std::string::npos);
}
