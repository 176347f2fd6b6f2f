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

#include "rrps/cli/commands.h"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>

#include "CLI11.hpp"
#include "rrps/engine/match_log.h"
#include "rrps/engine/seeding.h"
#include "rrps/pbe/cross_table.h"
#include "rrps/pbe/metrics.h"
#include "rrps/pbe/predictability.h"
#include "rrps/pbe/ranking.h"

#ifndef RRPS_VERSION
#define RRPS_VERSION "0.0.0"
#endif

namespace rrps::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

const char* Version() { return RRPS_VERSION; }

namespace {

std::string Fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x == 0.0 ? 0.0 : x);
  return buf;
}

std::string JoinNames(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
  return s;
}

std::string UtcNow() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Collects the files a command writes, all under one directory.
class Outputs {
 public:
  explicit Outputs(const std::string& dir) : dir_(dir) {}

  // Opens `name` for writing, runs `write` and checks the stream. The
  // directory is created on first use so failed runs leave nothing behind.
  void Write(const std::string& name,
             const std::function<void(std::ostream&)>& write) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec || !fs::is_directory(dir_)) {
      throw std::runtime_error("cannot create output directory '" +
                               dir_.string() + "'");
    }
    const std::string path = (dir_ / name).string();
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write '" + path + "'");
    write(os);
    os.flush();
    if (!os) throw std::runtime_error("error while writing '" + path + "'");
    paths_.push_back(path);
  }

  const std::vector<std::string>& paths() const { return paths_; }

 private:
  fs::path dir_;
  std::vector<std::string> paths_;
};

int RequireBot(const bots::Population& pop, const std::string& name) {
  const auto slot = pop.SlotOf(name);
  if (!slot) {
    throw UsageError("unknown bot '" + name +
                     "'; catalog: " + JoinNames(pop.names()));
  }
  return *slot;
}

void PrintMetricsHeader(std::ostream& out) {
  out << "agent  pop_return (se)  wp_expl (se)  agg_score (se)\n";
}

void PrintMetrics(std::ostream& out, const pbe::MetricsRecord& r) {
  out << r.agent << "  " << Fixed(r.pop_return.mean, 3) << " ("
      << Fixed(r.pop_return.se, 3) << ")  " << Fixed(r.wp_expl.mean, 3)
      << " (" << Fixed(r.wp_expl.se, 3) << ")  " << Fixed(r.agg_score.mean, 3)
      << " (" << Fixed(r.agg_score.se, 3) << ")";
  if (!r.wp_expl_bot.empty()) out << "  worst vs " << r.wp_expl_bot;
  if (r.learned_expl) out << "  learned_expl " << Fixed(*r.learned_expl, 3);
  out << '\n';
}

void PrintRanking(std::ostream& out, const std::vector<pbe::RankRow>& rows,
                  std::size_t limit) {
  out << "rank  name  pop_return  wp_expl  agg_score\n";
  for (std::size_t i = 0; i < rows.size() && i < limit; ++i) {
    const auto& r = rows[i];
    out << r.rank << "  " << r.name << "  " << Fixed(r.pop_return, 3) << "  "
        << Fixed(r.wp_expl, 3) << "  " << Fixed(r.agg_score, 3) << '\n';
  }
  if (rows.size() > limit) out << "... " << rows.size() - limit << " more\n";
}

void CmdCrossTable(const RunConfig& c, std::ostream& out, Outputs& files) {
  const bots::Population pop = c.LoadPopulation();
  pbe::CrossTableConfig cc;
  cc.episodes_per_cell = c.episodes;
  cc.episode = c.Episode();
  cc.seed = c.seed;
  cc.workers = c.workers;

  pbe::CrossTable table;
  if (c.match_log) {
    files.Write("crosstable_matches.jsonl", [&](std::ostream& os) {
      table = pbe::ComputeCrossTable(
          pop, cc, [&](const std::vector<MatchRecord>& chunk) {
            WriteMatchLog(os, chunk);
          });
    });
  } else {
    table = pbe::ComputeCrossTable(pop, cc);
  }
  files.Write("crosstable.csv",
              [&](std::ostream& os) { pbe::WriteCrossTableCsv(os, table); });
  const auto records = pbe::MetricsFromCrossTable(table);
  files.Write("crosstable_metrics.csv",
              [&](std::ostream& os) { pbe::WriteMetricsCsv(os, records); });
  out << "cross-table: " << table.size() << "x" << table.size() << " bots, "
      << c.episodes << " episodes per cell, K=" << c.steps << '\n';
  PrintRanking(out, pbe::RankPopulation(records), 10);
}

void CmdEval(const RunConfig& c, std::ostream& out, Outputs& files) {
  const bots::Population pop = c.LoadPopulation();
  const learners::AgentConfig agent = c.agent;
  const pbe::AgentFactory factory = [agent] {
    return std::unique_ptr<Agent>(learners::MakeAgent(agent));
  };
  pbe::EvalConfig ec;
  ec.episodes_per_bot = c.episodes;
  ec.episode = c.Episode();
  ec.seed = c.seed;
  ec.workers = c.workers;
  pbe::MetricsRecord record =
      pbe::EvaluateAgent(agent.Label(), factory, pop, ec);
  if (c.learned_expl) {
    record.learned_expl =
        learners::TrainExploiter(agent.Label(), factory, c.Exploiter())
            .best_mean;
  }
  PrintMetricsHeader(out);
  PrintMetrics(out, record);
  files.Write("eval_metrics.csv",
              [&](std::ostream& os) { pbe::WriteMetricsCsv(os, {record}); });
  files.Write("eval_metrics.json", [&](std::ostream& os) {
    nlohmann::ordered_json j = record.ToJson();
    j["seed"] = c.seed;
    os << j.dump(2) << '\n';
  });
}

void CmdExploit(const RunConfig& c, std::ostream& out, Outputs& files) {
  const bots::Population pop = c.LoadPopulation();
  const int slot = RequireBot(pop, c.bot);
  const learners::ExploiterReport report = learners::TrainExploiter(
      c.bot, [&pop, slot] { return std::unique_ptr<Agent>(pop.MakeBot(slot)); },
      c.Exploiter());
  out << "exploiting " << report.bot << "\n";
  nlohmann::ordered_json curves = nlohmann::ordered_json::array();
  for (const auto& curve : report.curves) {
    out << "R=" << curve.recall << "  best window mean "
        << Fixed(curve.best_window_mean, 3) << "  final train mean "
        << Fixed(curve.final_train_mean, 3) << '\n';
    curves.push_back({{"recall", curve.recall},
                      {"episodes_trained", curve.episodes_trained},
                      {"best_window_mean", curve.best_window_mean},
                      {"final_train_mean", curve.final_train_mean}});
  }
  out << "best " << Fixed(report.best_mean, 3) << " at R=" << report.best_recall
      << '\n';
  files.Write("exploit_curves.csv", [&](std::ostream& os) {
    os << "recall,checkpoint,episodes_trained,eval_mean\n";
    for (const auto& curve : report.curves) {
      for (std::size_t k = 0; k < curve.eval_means.size(); ++k) {
        os << curve.recall << ',' << k << ',' << curve.checkpoints[k] << ','
           << pbe::FormatMean(curve.eval_means[k]) << '\n';
      }
    }
  });
  files.Write("exploit_report.json", [&](std::ostream& os) {
    nlohmann::ordered_json j;
    j["bot"] = report.bot;
    j["seed"] = c.seed;
    j["best_mean"] = report.best_mean;
    j["best_recall"] = report.best_recall;
    j["curves"] = curves;
    os << j.dump(2) << '\n';
  });
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return in;
}

void CmdRank(const RunConfig& c, std::ostream& out, Outputs& files) {
  pbe::CrossTable table;
  if (!c.crosstable.empty()) {
    std::ifstream in = OpenInput(c.crosstable);
    table = pbe::ReadCrossTableCsv(in);
  } else {
    pbe::CrossTableConfig cc;
    cc.episodes_per_cell = c.episodes;
    cc.episode = c.Episode();
    cc.seed = c.seed;
    cc.workers = c.workers;
    table = pbe::ComputeCrossTable(c.LoadPopulation(), cc);
  }
  std::vector<pbe::MetricsRecord> records = pbe::MetricsFromCrossTable(table);
  for (const std::string& path : c.metrics) {
    std::ifstream in = OpenInput(path);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw UsageError("'" + path + "' is not valid JSON");
    }
    records.push_back(pbe::MetricsRecord::FromJson(j));
  }
  const auto rows = pbe::RankPopulation(records);
  PrintRanking(out, rows, rows.size());
  files.Write("ranking.csv",
              [&](std::ostream& os) { pbe::WriteRankingCsv(os, rows); });
}

void CmdHoldout(const RunConfig& c, std::ostream& out, Outputs& files) {
  const bots::Population pop = c.LoadPopulation();
  const learners::AgentConfig agent = c.agent;
  const pbe::HoldoutReport report = pbe::HoldoutEval(
      [agent] { return learners::MakeAgent(agent); }, pop, c.Holdout());
  out << "fold  train_mean  test_mean\n";
  int train_ge_test = 0;
  for (std::size_t f = 0; f < report.folds.size(); ++f) {
    const auto& fold = report.folds[f];
    out << f << "  " << Fixed(fold.train_mean, 3) << "  "
        << Fixed(fold.test_mean, 3) << '\n';
    if (fold.train_mean >= fold.test_mean) ++train_ge_test;
  }
  out << "mean  " << Fixed(report.train_mean, 3) << "  "
      << Fixed(report.test_mean, 3) << "  (train >= test in " << train_ge_test
      << " of " << report.folds.size() << " folds)\n";
  files.Write("holdout.csv", [&](std::ostream& os) {
    pbe::WriteHoldoutCsv(os, report, pop);
  });
}

void CmdPredictability(const RunConfig& c, std::ostream& out,
                       Outputs& files) {
  const bots::Population pop = c.LoadPopulation();
  pbe::PredictabilityConfig pc;
  pc.order = c.order;
  pc.episodes = c.episodes;
  pc.episode = c.Episode();
  pc.seed = c.seed;
  pc.workers = c.workers;
  const pbe::PredictabilityMatrix m = pbe::ComputePredictability(pop, pc);
  out << "bot  mean accuracy (order " << c.order << ")\n";
  for (std::size_t i = 0; i < m.names.size(); ++i) {
    double sum = 0.0;
    for (double a : m.accuracy[i]) sum += a;
    out << m.names[i] << "  " << Fixed(sum / m.accuracy[i].size(), 3) << '\n';
  }
  files.Write("predictability.csv", [&](std::ostream& os) {
    pbe::WritePredictabilityCsv(os, m);
  });
}

enum class Input { kMove, kQuit };

// Reads lines until a move or a quit; end of input quits.
Input ReadMove(std::istream& in, std::ostream& out, Action& move) {
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    const auto e = line.find_last_not_of(" \t\r");
    const std::string key =
        b == std::string::npos ? "" : line.substr(b, e - b + 1);
    if (key == "q" || key == "Q") return Input::kQuit;
    if (key.size() == 1) {
      if (const auto a = ParseAction(static_cast<char>(std::toupper(
              static_cast<unsigned char>(key[0]))))) {
        move = *a;
        return Input::kMove;
      }
    }
    out << "invalid key '" << key << "'; enter R, P, S or q: " << std::flush;
  }
  return Input::kQuit;
}

void CmdPlay(const RunConfig& c, std::istream& in, std::ostream& out,
             Outputs& files) {
  const bots::Population pop = c.LoadPopulation();
  const int slot = RequireBot(pop, c.bot);
  std::unique_ptr<Agent> bot = pop.MakeBot(slot);
  const std::uint64_t seed =
      DeriveEpisodeSeed(c.seed, seed_streams::kPlay, slot, 0);
  // Same draw order as the engine: one uniform per seat per step, human
  // first, so a replay against a scripted agent matches.
  std::mt19937_64 gen(seed);
  bot->Reset();
  EpisodeResult result;
  History mine, theirs;
  out << "playing " << c.bot << " for " << c.steps
      << " steps; you are player 0\n";
  for (int t = 0; t < c.steps; ++t) {
    const ActionDistribution d = bot->Act(theirs);
    if (!d.IsValid()) throw InvalidPolicyError(c.bot, t, d);
    out << "step " << t + 1 << "/" << c.steps << "  score " << result.return0
        << "  move [R/P/S, q quits]: " << std::flush;
    Action human = Action::kRock;
    if (ReadMove(in, out, human) == Input::kQuit) {
      out << "\nquit\n";
      break;
    }
    UniformUnit(gen);  // the human's seat
    const Action a = SampleAction(d, UniformUnit(gen));
    const Rewards r = JointPayoff(human, a);
    mine.push_back({human, a});
    theirs.push_back({a, human});
    result.rewards0.push_back(r.r0);
    result.return0 += r.r0;
    bot->Observe(theirs, r.r1);
    out << "you " << ActionChar(human) << "  bot " << ActionChar(a)
        << "  reward " << r.r0 << '\n';
  }
  result.actions = mine;
  const MatchRecord record =
      MatchRecord::FromEpisode(0, pop.spec(slot).id, 0, seed, result);
  out << "final return: " << result.return0 << " after "
      << result.actions.size() << " steps\n";
  out << "match log: " << record.ToJsonLine() << '\n';
  files.Write("play_matches.jsonl",
              [&](std::ostream& os) { WriteMatchLog(os, {record}); });
}

}  // namespace

std::vector<std::string> RunCommand(const RunConfig& config, std::istream& in,
                                    std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const std::string started = UtcNow();
  Outputs files(config.out);
  const std::string& cmd = config.command;
  if (cmd == "crosstable") {
    CmdCrossTable(config, out, files);
  } else if (cmd == "eval") {
    CmdEval(config, out, files);
  } else if (cmd == "exploit") {
    CmdExploit(config, out, files);
  } else if (cmd == "rank") {
    CmdRank(config, out, files);
  } else if (cmd == "holdout") {
    CmdHoldout(config, out, files);
  } else if (cmd == "predictability") {
    CmdPredictability(config, out, files);
  } else if (cmd == "play") {
    CmdPlay(config, in, out, files);
  } else {
    throw UsageError("unknown command '" + cmd + "'");
  }
  const double wall = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  std::vector<std::string> artifacts = files.paths();
  files.Write(cmd + "_manifest.json", [&](std::ostream& os) {
    nlohmann::ordered_json m;
    m["command"] = cmd;
    m["version"] = Version();
    m["seed"] = config.seed;
    m["started_utc"] = started;
    m["wall_time_seconds"] = wall;
    m["config"] = config.ToJson();
    m["artifacts"] = artifacts;
    os << m.dump(2) << '\n';
  });
  for (const auto& p : files.paths()) out << "wrote " << p << '\n';
  return files.paths();
}

namespace {

// Flags that overlay config keys, applied only when given.
class Overrides {
 public:
  explicit Overrides(CLI::App* app) : app_(app) {}

  template <typename T>
  void Option(const std::string& flag, const std::string& key,
              const std::string& help) {
    auto value = std::make_shared<T>();
    CLI::Option* o = app_->add_option(flag, *value, help);
    setters_.push_back([o, value, key](json& j) {
      if (o->count() > 0) j[json::json_pointer(key)] = *value;
    });
  }

  void Flag(const std::string& flag, const std::string& key, bool value,
            const std::string& help) {
    CLI::Option* o = app_->add_flag(flag, help);
    setters_.push_back([o, key, value](json& j) {
      if (o->count() > 0) j[json::json_pointer(key)] = value;
    });
  }

  json Collect() const {
    json j = json::object();
    for (const auto& set : setters_) set(j);
    return j;
  }

 private:
  CLI::App* app_;
  std::vector<std::function<void(json&)>> setters_;
};

struct Subcommand {
  CLI::App* app = nullptr;
  std::string config_path;
  std::unique_ptr<Overrides> overrides;
};

void AddAgentFlags(Overrides& o) {
  o.Option<std::string>("--algorithm", "/agent/algorithm",
                        "uniform, rm, rm_plus, saol, swap_rm_plus or qlearn");
  o.Option<int>("--recall", "/agent/recall", "context recall R");
  o.Option<std::string>("--contexts", "/agent/contexts",
                        "none, discrete or experts");
  o.Flag("--persist", "/agent/persist", true,
         "keep learned state across episodes");
  o.Flag("--no-persist", "/agent/persist", false,
         "reset learned state every episode");
  o.Option<double>("--alpha", "/agent/alpha", "Q-learning step size");
  o.Option<double>("--gamma", "/agent/gamma", "Q-learning discount");
  o.Option<std::int64_t>("--agent-episodes", "/agent/episodes",
                         "Q-learning epsilon horizon in episodes");
  o.Flag("--allow-large-table", "/agent/allow_large_table", true,
         "allow Q tables above 1 GiB");
}

void AddExploitFlags(Overrides& o) {
  o.Option<std::vector<int>>("--recalls", "/exploit/recalls",
                             "exploiter recalls to try");
  o.Option<std::int64_t>("--exploit-episodes", "/exploit/episodes",
                         "training episodes per recall");
  o.Option<int>("--evaluations", "/exploit/evaluations",
                "greedy checkpoints per recall");
  o.Option<int>("--exploit-eval-episodes", "/exploit/eval_episodes",
                "episodes per checkpoint");
  o.Option<int>("--window", "/exploit/window", "checkpoints per window");
  o.Option<double>("--exploit-alpha", "/exploit/alpha",
                   "exploiter step size");
  o.Option<double>("--exploit-gamma", "/exploit/gamma", "exploiter discount");
}

json ReadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("config file '" + path + "' is not valid JSON: " +
                     e.what());
  }
}

}  // namespace

int Main(int argc, const char* const* argv, std::istream& in,
         std::ostream& out, std::ostream& err, const char* env_seed) {
  CLI::App app{"Population-based evaluation for repeated rock-paper-scissors",
               "rrps"};
  app.set_version_flag("--version", Version());
  app.require_subcommand(1);

  const std::map<std::string, std::string> help = {
      {"crosstable", "play every bot against every bot"},
      {"eval", "population return and exploitability of an agent"},
      {"exploit", "train a Q-learning exploiter against one bot"},
      {"rank", "rank bots and evaluated agents by aggregate score"},
      {"holdout", "train on some bots, test on the rest"},
      {"predictability", "how well a Markov predictor guesses each bot"},
      {"play", "play one episode against a bot from the terminal"}};
  std::map<std::string, Subcommand> subs;
  for (const std::string& name : CommandNames()) {
    Subcommand& s = subs[name];
    s.app = app.add_subcommand(name, help.at(name));
    s.overrides = std::make_unique<Overrides>(s.app);
    Overrides& o = *s.overrides;
    s.app->add_option("--config", s.config_path, "JSON config file");
    o.Option<std::string>("--population", "/population",
                          "\"builtin\" or a catalog JSON file");
    o.Option<int>("--steps", "/steps", "steps per episode (K)");
    o.Option<std::uint64_t>("--seed", "/seed",
                            std::string("master seed (default from ") +
                                kSeedEnvVar + ")");
    o.Option<std::string>("--out", "/out", "output directory");
    if (name != "play") {
      o.Option<int>("--workers", "/workers",
                    "worker threads, 0 = all; 1 is the canonical order");
    }
    if (name == "crosstable" || name == "eval" || name == "rank" ||
        name == "predictability") {
      o.Option<int>("--episodes", "/episodes", "episodes per pairing");
    }
    if (name == "crosstable") {
      o.Flag("--no-match-log", "/match_log", false, "skip the match log");
    }
    if (name == "eval" || name == "holdout") AddAgentFlags(o);
    if (name == "eval") {
      o.Flag("--learned-expl", "/learned_expl", true,
             "also train an exploiter against the agent");
    }
    if (name == "eval" || name == "exploit") AddExploitFlags(o);
    if (name == "exploit" || name == "play") {
      o.Option<std::string>("--bot", "/bot", "bot name from the catalog");
    }
    if (name == "rank") {
      o.Option<std::string>("--crosstable", "/crosstable",
                            "reuse a cross-table CSV");
      o.Option<std::vector<std::string>>("--metrics", "/metrics",
                                         "eval_metrics.json files to include");
    }
    if (name == "holdout") {
      o.Option<int>("--n-test", "/holdout/n_test", "test bots per fold");
      o.Option<int>("--folds", "/holdout/folds", "number of folds");
      o.Option<int>("--train-episodes", "/holdout/train_episodes",
                    "training episodes per fold");
      o.Option<int>("--eval-episodes", "/holdout/eval_episodes",
                    "evaluation episodes per bot");
    }
    if (name == "predictability") {
      o.Option<int>("--order", "/order", "Markov predictor order");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    const Subcommand& s = subs.at(name);
    RunConfig config = RunConfig::Defaults(name);
    if (const auto seed = ParseSeedEnv(env_seed)) config.seed = *seed;
    if (!s.config_path.empty()) config.Merge(ReadConfigFile(s.config_path));
    config.Merge(s.overrides->Collect());
    config.Validate();
    out << "config " << config.ToJson().dump() << '\n';
    RunCommand(config, in, out);
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace rrps::cli
