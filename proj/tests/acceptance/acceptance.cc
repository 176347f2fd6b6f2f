// Copyright 2026 The RRPS Arena Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs every headline acceptance criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fails.
// Optional arguments select criteria by name substring.

#include <algorithm>
#include <array>
#include <cstdarg>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rrps/bots/population.h"
#include "rrps/cli/commands.h"
#include "rrps/engine/episode.h"
#include "rrps/engine/seeding.h"
#include "rrps/learners/config.h"
#include "rrps/learners/exploiter.h"
#include "rrps/learners/qlearning.h"
#include "rrps/learners/regret.h"
#include "rrps/learners/regret_agent.h"
#include "rrps/learners/saol.h"
#include "rrps/learners/swap.h"
#include "rrps/pbe/holdout.h"
#include "rrps/pbe/metrics.h"
#include "rrps/pbe/predictability.h"

namespace rrps {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Fmt(const char* format, ...) __attribute__((format(printf, 1, 2)));
std::string Fmt(const char* format, ...) {
  char buf[1024];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

const bots::Population& Pop() {
  static const bots::Population pop = bots::Population::Default();
  return pop;
}

int Slot(const std::string& name) { return *Pop().SlotOf(name); }

// ---------------------------------------------------------------------------

Outcome PayoffOracle() {
  // Rock blunts scissors, scissors cut paper, paper covers rock.
  const std::set<std::pair<char, char>> wins = {
      {'R', 'S'}, {'S', 'P'}, {'P', 'R'}};
  int checked = 0;
  bool ok = true;
  for (char a : std::string("RPS")) {
    for (char b : std::string("RPS")) {
      const int expected = a == b ? 0 : (wins.count({a, b}) ? 1 : -1);
      const Action x = *ParseAction(a);
      const Action y = *ParseAction(b);
      const Rewards r = JointPayoff(x, y);
      ok = ok && Payoff(x, y) == expected && r.r0 == expected &&
           r.r0 + r.r1 == 0 && Payoff(x, y) == -Payoff(y, x);
      ++checked;
    }
  }
  return {ok && checked == 9,
          Fmt("%d cells match the rule; zero-sum and antisymmetric", checked)};
}

Outcome ExploitationCaps() {
  EpisodeConfig cfg;
  auto run = [&](const std::string& bot, int episodes) {
    std::vector<int> returns;
    for (int e = 0; e < episodes; ++e) {
      learners::OmniscientExploiter ex(Pop().MakeBot(Slot(bot)));
      auto target = Pop().MakeBot(Slot(bot));
      returns.push_back(
          PlayEpisode(ex, *target, cfg,
                      DeriveEpisodeSeed(1, seed_streams::kAgent, Slot(bot), e))
              .return0);
    }
    return returns;
  };
  const auto rock = run("rockbot", 100);
  const auto rot = run("rotatebot", 100);
  const auto freq = run("freqbot2", 100);
  const auto r226 = run("r226bot", 1000);
  // Best response to (0.2, 0.2, 0.6): the highest expected per-step payoff.
  const double q[3] = {0.2, 0.2, 0.6};
  double best = -1.0;
  for (int a = 0; a < 3; ++a) {
    double ev = 0.0;
    for (int b = 0; b < 3; ++b) {
      ev += q[b] * Payoff(ActionFromIndex(a), ActionFromIndex(b));
    }
    best = std::max(best, ev);
  }
  const double oracle = best * cfg.num_steps;
  auto min_of = [](const std::vector<int>& v) {
    return *std::min_element(v.begin(), v.end());
  };
  auto max_of = [](const std::vector<int>& v) {
    return *std::max_element(v.begin(), v.end());
  };
  double r226_mean = 0.0;
  for (int x : r226) r226_mean += x;
  r226_mean /= r226.size();
  const bool ok = min_of(rock) == 1000 && max_of(rock) == 1000 &&
                  min_of(rot) >= 999 && min_of(freq) >= 999 &&
                  std::abs(r226_mean - oracle) <= 10.0;
  return {ok, Fmt("rockbot %d..%d, rotatebot min %d, freqbot2 min %d, "
                  "r226bot mean %.3f vs oracle %.1f",
                  min_of(rock), max_of(rock), min_of(rot), min_of(freq),
                  r226_mean, oracle)};
}

Outcome UniformAgentMetrics() {
  pbe::EvalConfig cfg;
  cfg.episodes_per_bot = 100;
  cfg.seed = 2;
  const auto r = pbe::EvaluateAgent(
      "uniform", [] { return std::make_unique<learners::UniformAgent>(); },
      Pop(), cfg);
  const bool ok = std::abs(r.pop_return.mean) <= 2.0 &&
                  r.wp_expl.mean >= 0.0 && r.wp_expl.mean <= 15.0;
  return {ok, Fmt("pop_return %.3f (se %.3f), wp_expl %.3f vs %s",
                  r.pop_return.mean, r.pop_return.se, r.wp_expl.mean,
                  r.wp_expl_bot.c_str())};
}

Outcome NashRecovery() {
  constexpr int kSteps = 100000;
  double worst_freq = 0.0, worst_regret = 0.0;
  for (bool plus : {false, true}) {
    learners::RegretMatcher p0(3, plus), p1(3, plus);
    std::mt19937_64 gen(plus ? 4 : 3);
    std::array<std::array<double, 3>, 2> counts{};
    std::array<std::array<double, 3>, 2> hindsight{};  // sum of u(a, b_t)
    std::array<double, 2> earned{};
    for (int t = 0; t < kSteps; ++t) {
      ActionDistribution d0, d1;
      for (int i = 0; i < 3; ++i) {
        d0.p[i] = p0.Policy()[i];
        d1.p[i] = p1.Policy()[i];
      }
      const Action a0 = SampleAction(d0, UniformUnit(gen));
      const Action a1 = SampleAction(d1, UniformUnit(gen));
      std::array<double, 3> u0{}, u1{};
      for (int i = 0; i < 3; ++i) {
        u0[i] = Payoff(ActionFromIndex(i), a1);
        u1[i] = Payoff(ActionFromIndex(i), a0);
        hindsight[0][i] += u0[i];
        hindsight[1][i] += u1[i];
      }
      counts[0][Index(a0)] += 1;
      counts[1][Index(a1)] += 1;
      earned[0] += Payoff(a0, a1);
      earned[1] += Payoff(a1, a0);
      p0.Update(u0);
      p1.Update(u1);
    }
    for (int s = 0; s < 2; ++s) {
      for (int i = 0; i < 3; ++i) {
        worst_freq =
            std::max(worst_freq, std::abs(counts[s][i] / kSteps - 1.0 / 3));
      }
      const double best = *std::max_element(hindsight[s].begin(),
                                            hindsight[s].end());
      worst_regret = std::max(worst_regret, (best - earned[s]) / kSteps);
    }
  }
  return {worst_freq <= 0.05 && worst_regret <= 0.02,
          Fmt("RM and RM+: max |freq - 1/3| %.4f, max average regret %.4f",
              worst_freq, worst_regret)};
}

Outcome SwapStationarity() {
  // Adversarial runs: the opponent answers the learner's likeliest arm.
  double worst = 0.0;
  {
    learners::SwapRegret learner(3);
    for (int t = 0; t < 10000; ++t) {
      const auto& p = learner.Policy();
      const int top = static_cast<int>(std::max_element(p.begin(), p.end()) -
                                       p.begin());
      const Action opp = Beat(ActionFromIndex(top));
      std::array<double, 3> u{};
      for (int i = 0; i < 3; ++i) u[i] = Payoff(ActionFromIndex(i), opp);
      learner.Update(u);
      worst = std::max(worst,
                       learners::StationaryResidual(learner.Rows(),
                                                    learner.Policy()));
    }
  }
  {
    learners::SwapRegret learner(9);
    std::mt19937_64 gen(5);
    for (int t = 0; t < 10000; ++t) {
      const auto& p = learner.Policy();
      const int top = static_cast<int>(std::max_element(p.begin(), p.end()) -
                                       p.begin());
      std::vector<double> u(9);
      for (int i = 0; i < 9; ++i) u[i] = 2.0 * UniformUnit(gen) - 1.0;
      u[top] = -1.0;
      learner.Update(u);
      worst = std::max(worst,
                       learners::StationaryResidual(learner.Rows(),
                                                    learner.Policy()));
    }
  }
  const std::vector<std::vector<double>> cyclic = {
      {0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  const std::vector<double> row = {0.2, 0.3, 0.5};
  const std::vector<std::vector<double>> equal = {row, row, row};
  const auto pc = learners::StationaryDistribution(cyclic);
  const auto pe = learners::StationaryDistribution(equal);
  double analytic = 0.0;
  for (int i = 0; i < 3; ++i) {
    analytic = std::max(analytic, std::abs(pc[i] - 1.0 / 3));
    analytic = std::max(analytic, std::abs(pe[i] - row[i]));
  }
  return {worst <= 1e-9 && analytic <= 1e-12,
          Fmt("max residual %.3g over 2 x 10^4 adversarial steps; analytic "
              "error %.3g",
              worst, analytic)};
}

// Intervals [i 2^k, (i+1) 2^k - 1], i >= 1, that contain t.
int EnumerateIntervals(std::int64_t t) {
  int count = 0;
  for (std::int64_t len = 1; len <= t; len *= 2) {
    for (std::int64_t start = len; start <= t; start += len) {
      if (t <= start + len - 1) ++count;
    }
  }
  return count;
}

Outcome SaolStructure() {
  const std::vector<std::int64_t> times = {1, 8, 1023, 1024};
  const std::vector<int> expected = {1, 4, 10, 11};
  learners::Saol saol(3);
  std::mt19937_64 gen(6);
  bool ok = true;
  std::string counts;
  double min_weight = 1.0;
  std::size_t next = 0;
  for (int step = 0; step < 100000; ++step) {
    if (next < times.size() && saol.time() == times[next]) {
      const int got = static_cast<int>(saol.active().size());
      ok = ok && got == expected[next] &&
           got == EnumerateIntervals(times[next]);
      counts += Fmt("%st=%lld:%d", counts.empty() ? "" : " ",
                    static_cast<long long>(times[next]), got);
      ++next;
    }
    std::array<double, 3> u{};
    for (double& x : u) x = 2.0 * UniformUnit(gen) - 1.0;
    saol.Update(u);
    for (const auto& inst : saol.active()) {
      min_weight = std::min(min_weight, inst.weight);
      ok = ok && inst.weight > 0.0 && std::isfinite(inst.weight);
    }
  }
  ok = ok && next == times.size();
  return {ok, Fmt("active counts %s; min weight %.3g over 10^5 steps",
                  counts.c_str(), min_weight)};
}

Outcome ContextualExploitation() {
  learners::AgentConfig ac;
  ac.algorithm = "rm_plus";
  ac.recall = 1;
  ac.contexts = "discrete";
  ac.persist = true;
  auto agent = learners::MakeAgent(ac);
  auto rot = Pop().MakeBot(Slot("rotatebot"));
  EpisodeConfig cfg;
  int first = 0, late_min = 1000;
  for (int e = 0; e < 110; ++e) {
    const int r = PlayEpisode(*agent, *rot, cfg, DeriveEpisodeSeed(7, 0, 0, e))
                      .return0;
    if (e == 0) first = r;
    if (e >= 100) late_min = std::min(late_min, r);
  }

  learners::QConfig qc;
  qc.recall = 1;
  qc.alpha = 0.02;
  qc.total_episodes = 50000;
  learners::QLearner q(qc);
  auto copy = Pop().MakeBot(Slot("copybot"));
  std::vector<int> window;
  double sum = 0.0;
  int reached = -1;
  for (int e = 0; e < 50000 && reached < 0; ++e) {
    const int r =
        PlayEpisode(q, *copy, cfg, DeriveEpisodeSeed(8, 0, 0, e)).return0;
    window.push_back(r);
    sum += r;
    if (window.size() > 100) sum -= window[window.size() - 101];
    if (window.size() >= 100 && sum / 100.0 >= 900.0) reached = e + 1;
  }
  const bool ok = first >= 600 && late_min >= 900 && reached > 0;
  return {ok, Fmt("RM+ vs rotatebot: episode 1 %d, min over episodes "
                  "101-110 %d; Q vs copybot: 100-episode mean >= 900 after "
                  "%d episodes",
                  first, late_min, reached)};
}

Outcome Table4Direction() {
  pbe::EvalConfig cfg;
  cfg.episodes_per_bot = 100;
  cfg.seed = 9;
  bool ok = true;
  std::string detail;
  for (const std::string algo : {"rm", "rm_plus", "saol", "swap_rm_plus"}) {
    double wpe[2];
    for (int v = 0; v < 2; ++v) {
      learners::AgentConfig ac;
      ac.algorithm = algo;
      ac.contexts = v == 0 ? "experts" : "discrete";
      ac.recall = v == 0 ? 1 : 2;
      wpe[v] = pbe::EvaluateAgent(
                   ac.Label(), [ac] { return learners::MakeAgent(ac); }, Pop(),
                   cfg)
                   .wp_expl.mean;
    }
    ok = ok && wpe[0] < wpe[1];
    detail += Fmt("%s%s %.2f < %.2f", detail.empty() ? "" : "; ",
                  algo.c_str(), wpe[0], wpe[1]);
  }
  return {ok, "wp_expl experts R=1 vs discrete R=2: " + detail};
}

std::string FileDigest(const fs::path& path) {
  // 64-bit FNV-1a over the file bytes.
  std::ifstream in(path, std::ios::binary);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
  }
  return Fmt("%016llx", static_cast<unsigned long long>(h));
}

Outcome Determinism() {
  const fs::path root = fs::temp_directory_path() / "rrps_acceptance_det";
  fs::remove_all(root);
  std::vector<std::vector<std::string>> digests;
  for (const char* workers : {"1", "8"}) {
    const std::string out = (root / workers).string();
    const char* argv[] = {"rrps",      "crosstable", "--episodes", "100",
                          "--seed",    "2024",       "--workers",  workers,
                          "--out",     out.c_str()};
    std::istringstream in;
    std::ostringstream sink, err;
    const int code = cli::Main(10, argv, in, sink, err, nullptr);
    if (code != 0) return {false, "crosstable failed: " + err.str()};
    std::vector<std::string> d;
    for (const char* f : {"crosstable.csv", "crosstable_metrics.csv",
                          "crosstable_matches.jsonl"}) {
      d.push_back(FileDigest(fs::path(out) / f));
    }
    digests.push_back(d);
    fs::remove_all(out);
  }
  fs::remove_all(root);
  return {digests[0] == digests[1],
          Fmt("43x43 x 100 episodes; digests workers=1 %s/%s/%s, workers=8 "
              "%s/%s/%s",
              digests[0][0].c_str(), digests[0][1].c_str(),
              digests[0][2].c_str(), digests[1][0].c_str(),
              digests[1][1].c_str(), digests[1][2].c_str())};
}

Outcome Predictability() {
  pbe::PredictabilityConfig cfg;
  cfg.order = 1;
  cfg.episodes = 10;
  cfg.seed = 10;
  const auto m = pbe::ComputePredictability(Pop(), cfg);
  auto row = [&](const std::string& name) {
    const auto& r = m.accuracy[Slot(name)];
    return std::make_pair(*std::min_element(r.begin(), r.end()),
                          *std::max_element(r.begin(), r.end()));
  };
  const auto rock = row("rockbot");
  const auto rand = row("randbot");
  const auto rot = row("rotatebot");
  const bool ok = rock.first == 1.0 && rand.first >= 0.30 &&
                  rand.second <= 0.37 && rot.first >= 0.99;
  return {ok, Fmt("rockbot [%.4f, %.4f], randbot [%.4f, %.4f], rotatebot "
                  "[%.4f, %.4f]",
                  rock.first, rock.second, rand.first, rand.second, rot.first,
                  rot.second)};
}

Outcome Holdout() {
  pbe::HoldoutConfig cfg;
  cfg.folds = 20;
  cfg.seed = 11;
  bool partitions = true;
  auto check = [&](const pbe::HoldoutReport& rep) {
    for (const auto& f : rep.folds) {
      std::vector<int> all = f.train;
      all.insert(all.end(), f.test.begin(), f.test.end());
      std::sort(all.begin(), all.end());
      std::vector<int> slots(43);
      for (int s = 0; s < 43; ++s) slots[s] = s;
      partitions = partitions && f.train.size() == 33 && f.test.size() == 10 &&
                   all == slots;
    }
  };
  const auto uni = pbe::HoldoutEval(
      [] { return std::make_unique<learners::UniformAgent>(); }, Pop(), cfg);
  check(uni);
  // Per-step payoff of a uniform player has variance 2/3 against anything.
  const double sd = std::sqrt(2.0 / 3.0 * cfg.episode.num_steps);
  const double gap_se =
      sd * std::sqrt(1.0 / (33.0 * cfg.eval_episodes) +
                     1.0 / (10.0 * cfg.eval_episodes));
  double gap_mean = 0.0, gap_max = 0.0;
  for (const auto& f : uni.folds) {
    gap_mean += (f.train_mean - f.test_mean) / cfg.folds;
    gap_max = std::max(gap_max, std::abs(f.train_mean - f.test_mean));
  }
  const bool uniform_ok = gap_max <= 4.0 * gap_se &&
                          std::abs(gap_mean) <= 4.0 * gap_se /
                                                    std::sqrt(cfg.folds);

  learners::AgentConfig ac;
  ac.algorithm = "rm_plus";
  ac.recall = 1;
  ac.contexts = "discrete";
  ac.persist = true;
  const auto rm = pbe::HoldoutEval([ac] { return learners::MakeAgent(ac); },
                                   Pop(), cfg);
  check(rm);
  int ordered = 0;
  for (const auto& f : rm.folds) ordered += f.train_mean >= f.test_mean;
  const bool ok = partitions && uniform_ok && ordered * 5 >= cfg.folds * 4;
  return {ok, Fmt("partitions 33/10 %s; uniform gap mean %.3f, max %.3f "
                  "(gap se %.3f); RM+ train >= test on %d of %d folds "
                  "(means %.1f vs %.1f)",
                  partitions ? "exact" : "WRONG", gap_mean, gap_max, gap_se,
                  ordered, cfg.folds, rm.train_mean, rm.test_mean)};
}

struct Criterion {
  const char* name;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"payoff-oracle", PayoffOracle},
    {"exploitation-caps", ExploitationCaps},
    {"uniform-agent-metrics", UniformAgentMetrics},
    {"nash-recovery", NashRecovery},
    {"swap-stationarity", SwapStationarity},
    {"saol-structure", SaolStructure},
    {"contextual-exploitation", ContextualExploitation},
    {"experts-vs-discrete-exploitability", Table4Direction},
    {"determinism", Determinism},
    {"predictability", Predictability},
    {"holdout", Holdout},
};

}  // namespace
}  // namespace rrps

int main(int argc, char** argv) {
  using rrps::kCriteria;
  int failures = 0, ran = 0;
  for (const auto& c : kCriteria) {
    bool selected = argc == 1;
    for (int i = 1; i < argc; ++i) {
      selected = selected || std::string(c.name).find(argv[i]) !=
                                 std::string::npos;
    }
    if (!selected) continue;
    const auto start = std::chrono::steady_clock::now();
    rrps::Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    std::printf("%s %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    ++ran;
    if (!o.pass) ++failures;
  }
  std::printf("acceptance: %d of %d criteria passed\n", ran - failures, ran);
  return failures == 0 ? 0 : 1;
}
