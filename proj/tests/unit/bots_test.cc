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

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "rrps/bots/bot.h"
#include "rrps/bots/population.h"
#include "rrps/bots/sequences.h"
#include "rrps/bots/simple_bots.h"
#include "rrps/engine/seeding.h"

namespace rrps::bots {
namespace {

constexpr Action R = Action::kRock;
constexpr Action P = Action::kPaper;
constexpr Action S = Action::kScissors;

const Population& Pop() {
  static const Population pop = Population::Default();
  return pop;
}

std::unique_ptr<Bot> Named(const std::string& name) {
  const auto slot = Pop().SlotOf(name);
  EXPECT_TRUE(slot.has_value()) << name;
  return Pop().MakeBot(*slot);
}

// Feeds `h` (bot's perspective) step by step and returns the distribution
// the bot produced before each step, plus one after the last.
std::vector<ActionDistribution> Drive(Agent& bot, const History& h) {
  bot.Reset();
  std::vector<ActionDistribution> out;
  History seen;
  for (const JointAction& step : h) {
    out.push_back(bot.Act(seen));
    seen.push_back(step);
    bot.Observe(seen, Payoff(step.mine, step.theirs));
  }
  out.push_back(bot.Act(seen));
  return out;
}

History RandomHistory(std::mt19937_64& gen, int length) {
  History h;
  for (int i = 0; i < length; ++i) {
    h.push_back(JointFromIndex(static_cast<int>(gen() % 9)));
  }
  return h;
}

void ExpectDist(const ActionDistribution& d, double r, double p, double s) {
  EXPECT_NEAR(d[R], r, 1e-12);
  EXPECT_NEAR(d[P], p, 1e-12);
  EXPECT_NEAR(d[S], s, 1e-12);
}

// Catalog -------------------------------------------------------------------

TEST(CatalogTest, DefaultHasRankedNames) {
  const std::vector<std::string> expected = {
      "greenberg",    "iocainebot",      "biopic",       "boom",
      "shofar",       "robertot",        "phasenbott",   "mod1bot",
      "sweetrock",    "piedra",          "markovbails",  "sunNervebot",
      "markov5",      "antirotnbot",     "halbot",       "mixed_strategy",
      "randbot",      "pibot",           "actr_lag2_decay", "marble",
      "granite",      "predbot",         "zq_move",      "multibot",
      "textbot",      "debruijn81",      "driftbot",     "adddriftbot2",
      "russrocker4",  "switchalot",      "addshiftbot3", "foxtrotbot",
      "flatbot3",     "inocencio",       "r226bot",      "sunCrazybot",
      "switchbot",    "peterbot",        "freqbot2",     "copybot",
      "rotatebot",    "rockbot",         "antiflatbot"};
  EXPECT_EQ(Pop().names(), expected);
  for (int i = 0; i < Pop().size(); ++i) EXPECT_EQ(Pop().spec(i).id, i);
}

TEST(CatalogTest, RejectsEmptyAndDuplicates) {
  EXPECT_THROW(Population::Build({}), std::invalid_argument);
  auto specs = DefaultCatalog();
  specs[5].name = specs[3].name;
  EXPECT_THROW(Population::Build(specs), std::invalid_argument);
  specs = DefaultCatalog();
  specs[7].id = 2;
  EXPECT_THROW(Population::Build(specs), std::invalid_argument);
  specs = DefaultCatalog();
  specs[0].params["windows"] = "wide";
  EXPECT_THROW(Population::Build(specs), std::invalid_argument);
}

TEST(CatalogTest, JsonRoundTrip) {
  std::stringstream ss;
  WriteCatalog(ss, DefaultCatalog());
  const auto back = ReadCatalog(ss);
  ASSERT_EQ(back.size(), DefaultCatalog().size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].ToJson(), DefaultCatalog()[i].ToJson());
  }
  std::stringstream bad("{\"not\": \"a list\"}");
  EXPECT_THROW(ReadCatalog(bad), std::invalid_argument);
  std::stringstream unknown(
      "[{\"id\": 0, \"name\": \"x\", \"family\": \"oracle\"}]");
  EXPECT_THROW(ReadCatalog(unknown), std::invalid_argument);
}

TEST(CatalogTest, SingleBotPopulation) {
  std::stringstream ss(
      "[{\"id\": 4, \"name\": \"solo\", \"family\": \"constant\", "
      "\"params\": {\"action\": \"S\"}}]");
  const Population pop = Population::Build(ReadCatalog(ss));
  ASSERT_EQ(pop.size(), 1);
  ExpectDist(pop.MakeBot(0)->Act({}), 0, 0, 1);
}

// Sequences ----------------------------------------------------------------

TEST(SequenceTest, PiDigits) {
  const std::string digits = PiDigits(1000);
  ASSERT_EQ(digits.size(), 1000u);
  EXPECT_EQ(digits.substr(0, 50),
            "31415926535897932384626433832795028841971693993751");
  // The run of six nines and the tail of the first thousand digits.
  EXPECT_EQ(digits.substr(760, 10), "3499999983");
  EXPECT_EQ(digits.substr(980, 20), "76611195909216420198");
}

TEST(SequenceTest, DeBruijnContainsEveryWindowOnce) {
  const std::vector<int> seq = DeBruijn(3, 4);
  ASSERT_EQ(seq.size(), 81u);
  std::set<int> windows;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    int code = 0;
    for (std::size_t k = 0; k < 4; ++k) code = 3 * code + seq[(i + k) % 81];
    windows.insert(code);
  }
  EXPECT_EQ(windows.size(), 81u);
  // Lexicographically least: starts with 0000 and ends with 2s.
  EXPECT_EQ(std::vector<int>(seq.begin(), seq.begin() + 5),
            (std::vector<int>{0, 0, 0, 0, 1}));
  EXPECT_EQ(seq.back(), 2);
}

TEST(SequenceTest, PiSequenceIsDigitsModThree) {
  const auto seq = PiSequence(10);
  const std::vector<Action> expected = {R, P, P, P, S, R, S, R, S, R};
  EXPECT_EQ(seq, expected);
  EXPECT_EQ(TextSequence().size(), kTextbotText.size());
}

// Spec examples -------------------------------------------------------------

TEST(BotExampleTest, FixedMixes) {
  std::mt19937_64 gen(1);
  const History h = RandomHistory(gen, 30);
  auto rand = Named("randbot");
  auto r226 = Named("r226bot");
  for (const auto& d : Drive(*rand, h)) ExpectDist(d, 1.0 / 3, 1.0 / 3, 1.0 / 3);
  for (const auto& d : Drive(*r226, h)) ExpectDist(d, 0.2, 0.2, 0.6);
}

TEST(BotExampleTest, Switchers) {
  const History h = {{R, P}};
  ExpectDist(Drive(*Named("switchalot"), h).back(), 0.12, 0.44, 0.44);
  ExpectDist(Drive(*Named("switchbot"), h).back(), 0.0, 0.5, 0.5);
  ExpectDist(Drive(*Named("switchbot"), {{S, R}}).back(), 0.5, 0.5, 0.0);
}

TEST(BotExampleTest, CopyAndRotate) {
  ExpectDist(Drive(*Named("copybot"), {{P, S}}).back(), 1, 0, 0);
  ExpectDist(Drive(*Named("rotatebot"), {{R, R}, {P, R}}).back(), 0, 0, 1);
  const auto rot = Drive(*Named("rotatebot"), {});
  ExpectDist(rot[0], 1, 0, 0);
}

TEST(BotExampleTest, FirstMovesUniform) {
  for (const char* name : {"copybot", "switchbot", "switchalot",
                           "antirotnbot", "driftbot", "adddriftbot2",
                           "foxtrotbot"}) {
    ExpectDist(Named(name)->Act({}), 1.0 / 3, 1.0 / 3, 1.0 / 3);
  }
}

TEST(BotExampleTest, FreqbotBeatsMostFrequent) {
  History h;
  for (int i = 0; i < 10; ++i) h.push_back({S, R});
  for (int i = 0; i < 5; ++i) h.push_back({S, P});
  for (int i = 0; i < 3; ++i) h.push_back({R, S});
  ExpectDist(Drive(*Named("freqbot2"), h).back(), 0, 1, 0);
  // Tie (R:1, P:1) goes to R, so it plays P.
  ExpectDist(Drive(*Named("freqbot2"), {{R, R}, {R, P}}).back(), 0, 1, 0);
}

TEST(BotExampleTest, FoxtrotAlternates) {
  const auto d = Drive(*Named("foxtrotbot"), {{R, S}, {S, S}, {P, R}});
  ExpectDist(d[1], 0, 1, 0);  // odd step: own previous R + 1
  ExpectDist(d[2], 1.0 / 3, 1.0 / 3, 1.0 / 3);
  ExpectDist(d[3], 0, 0, 1);  // own previous P + 1
}

TEST(BotExampleTest, FlatbotKeepsHistogramFlat) {
  auto flat = Named("flatbot3");
  const auto d = Drive(*flat, {{R, R}, {P, R}, {R, S}});
  ExpectDist(d[0], 1, 0, 0);
  ExpectDist(d[1], 0, 1, 0);
  ExpectDist(d[2], 0, 0, 1);
  ExpectDist(d[3], 0, 0, 1);  // counts (2, 1, 0)
}

TEST(BotExampleTest, AntiRotnFindsIncrement) {
  // Opponent goes R, S, P, R: increment 2 every time, so next is S; play R.
  const auto d =
      Drive(*Named("antirotnbot"), {{R, R}, {R, S}, {R, P}, {R, R}});
  ExpectDist(d.back(), 1, 0, 0);
  ExpectDist(d[1], 1.0 / 3, 1.0 / 3, 1.0 / 3);
}

// Predictors -----------------------------------------------------------------

TEST(MarkovPredictTest, Examples) {
  const std::vector<Action> seq = {R, P, R, P, R};
  ExpectDist(MarkovPredict(seq, 1, 1.0), 0.2, 0.6, 0.2);
  ExpectDist(MarkovPredict({}, 2, 1.0), 1.0 / 3, 1.0 / 3, 1.0 / 3);
  const std::vector<Action> rocks(100, R);
  EXPECT_GE(MarkovPredict(rocks, 1, 1.0)[R], 0.97);
  EXPECT_NEAR(MarkovPredict(rocks, 1, 1.0)[R], 100.0 / 102.0, 1e-12);
  // Unseen context: after [R, P, S] the context S never recurred.
  ExpectDist(MarkovPredict(std::vector<Action>{R, P, S}, 1, 1.0), 1.0 / 3,
             1.0 / 3, 1.0 / 3);
}

History OppOnly(const std::vector<Action>& opp) {
  History h;
  for (Action a : opp) h.push_back({R, a});
  return h;
}

TEST(HistoryMatchTest, Examples) {
  const MatchResult m = HistoryMatch(OppOnly({R, P, S, R, P}), Channel::kOpp, 5);
  ASSERT_TRUE(m.next.has_value());
  EXPECT_EQ(m.next->theirs, S);
  EXPECT_EQ(m.length, 2);
  const MatchResult none = HistoryMatch(History{}, Channel::kOpp, 3);
  EXPECT_FALSE(none.next.has_value());
  EXPECT_EQ(none.length, 0);
  const MatchResult rr = HistoryMatch(OppOnly({R, R, R, R}), Channel::kOpp, 8);
  ASSERT_TRUE(rr.next.has_value());
  EXPECT_EQ(rr.next->theirs, R);
  EXPECT_EQ(rr.length, 3);
}

TEST(SuffixMatcherTest, AgreesWithBruteForce) {
  std::mt19937_64 gen(17);
  for (Channel c : {Channel::kOwn, Channel::kOpp, Channel::kJoint}) {
    for (int trial = 0; trial < 20; ++trial) {
      // Low-entropy histories so that long matches occur.
      History h;
      const int len = 150;
      for (int i = 0; i < len; ++i) {
        h.push_back(gen() % 4 == 0 ? JointFromIndex(static_cast<int>(gen() % 9))
                                   : JointFromIndex(i % 3 * 4 % 9));
      }
      SuffixMatcher matcher(c, 12);
      for (int t = 0; t <= len; ++t) {
        const std::span<const JointAction> prefix(h.data(), t);
        if (t > 0) matcher.Append(prefix);
        for (int w : {1, 3, 12}) {
          const MatchResult fast = matcher.Query(prefix, w);
          const MatchResult slow = HistoryMatch(prefix, c, w);
          ASSERT_EQ(fast.length, slow.length) << "t=" << t << " w=" << w;
          ASSERT_EQ(fast.next, slow.next) << "t=" << t << " w=" << w;
        }
      }
    }
  }
}

TEST(MarkovModelTest, CountsMatchMarkovPredict) {
  std::mt19937_64 gen(23);
  const History h = RandomHistory(gen, 300);
  MarkovModel model(2, Channel::kOpp);
  std::vector<Action> opp;
  for (int t = 1; t <= 300; ++t) {
    const std::span<const JointAction> prefix(h.data(), t);
    model.Append(prefix);
    opp.push_back(h[t - 1].theirs);
    const auto counts = model.Counts(prefix, 2);
    const ActionDistribution ref = MarkovPredict(opp, 2, 1.0);
    if (!counts) {
      ExpectDist(ref, 1.0 / 3, 1.0 / 3, 1.0 / 3);
      continue;
    }
    const double total = (*counts)[0] + (*counts)[1] + (*counts)[2] + 3.0;
    for (int a = 0; a < 3; ++a) {
      ASSERT_NEAR(((*counts)[a] + 1.0) / total, ref.p[a], 1e-12);
    }
  }
}

// Whole-population properties ------------------------------------------------

TEST(PopulationPropertyTest, FuzzedHistoriesGiveValidDistributions) {
  std::mt19937_64 gen(99);
  const History h = RandomHistory(gen, 1000);
  for (int slot = 0; slot < Pop().size(); ++slot) {
    auto bot = Pop().MakeBot(slot);
    const auto first = Drive(*bot, h);
    for (std::size_t t = 0; t < first.size(); ++t) {
      ASSERT_TRUE(first[t].IsValid())
          << Pop().spec(slot).name << " step " << t;
    }
    // Replaying after reset is identical.
    const auto second = Drive(*bot, h);
    ASSERT_EQ(first.size(), second.size());
    for (std::size_t t = 0; t < first.size(); ++t) {
      ASSERT_EQ(first[t].p, second[t].p) << Pop().spec(slot).name;
    }
  }
}

TEST(PopulationPropertyTest, SequenceBotsIgnoreOpponent) {
  std::mt19937_64 gen(5);
  for (const char* name : {"rotatebot", "pibot", "debruijn81", "textbot"}) {
    auto bot = Named(name);
    History a = RandomHistory(gen, 300);
    History b = a;
    for (auto& step : b) step.theirs = ActionFromIndex(static_cast<int>(gen() % 3));
    const auto da = Drive(*bot, a);
    const auto db = Drive(*bot, b);
    for (std::size_t t = 0; t < da.size(); ++t) {
      ASSERT_EQ(da[t].p, db[t].p) << name << " step " << t;
    }
  }
}

double MeanReturn(const std::string& row, const std::string& col, int episodes,
                  std::uint64_t seed) {
  auto a = Named(row);
  auto b = Named(col);
  double total = 0.0;
  for (int e = 0; e < episodes; ++e) {
    total += PlayEpisode(*a, *b, {}, DeriveEpisodeSeed(seed, 0, 1, e)).return0;
  }
  return total / episodes;
}

TEST(PopulationPropertyTest, AntiflatExploitsFlat) {
  EXPECT_GE(MeanReturn("antiflatbot", "flatbot3", 20, 1), 900.0);
}

TEST(PopulationPropertyTest, AntirotnExploitsRotate) {
  auto anti = Named("antirotnbot");
  auto rot = Named("rotatebot");
  for (int e = 0; e < 20; ++e) {
    const auto r = PlayEpisode(*anti, *rot, {}, DeriveEpisodeSeed(2, 0, 1, e));
    int late = 0;
    for (std::size_t t = 2; t < r.rewards0.size(); ++t) late += r.rewards0[t];
    EXPECT_EQ(late, 998);  // every step after the two-move burn-in
    EXPECT_GE(r.return0, 980 - 2);
  }
  EXPECT_GE(MeanReturn("antirotnbot", "rotatebot", 50, 3), 980.0);
}

TEST(PopulationPropertyTest, DeterministicSelfPlayTies) {
  for (const char* name : {"rockbot", "rotatebot", "pibot", "debruijn81",
                           "textbot", "flatbot3", "antiflatbot", "freqbot2"}) {
    EXPECT_EQ(MeanReturn(name, name, 3, 4), 0.0) << name;
  }
}

TEST(PopulationPropertyTest, StochasticSelfPlayCentred) {
  constexpr int kEpisodes = 200;
  for (int slot = 0; slot < Pop().size(); ++slot) {
    const std::string name = Pop().spec(slot).name;
    auto a = Pop().MakeBot(slot);
    auto b = Pop().MakeBot(slot);
    double sum = 0.0, sq = 0.0;
    for (int e = 0; e < kEpisodes; ++e) {
      const double g =
          PlayEpisode(*a, *b, {}, DeriveEpisodeSeed(6, slot, slot, e)).return0;
      sum += g;
      sq += g * g;
    }
    const double mean = sum / kEpisodes;
    const double var = std::max(0.0, sq / kEpisodes - mean * mean);
    const double se = std::sqrt(var / (kEpisodes - 1));
    if (se == 0.0) {
      EXPECT_EQ(mean, 0.0) << name;
    } else {
      EXPECT_LE(std::abs(mean), 3.0 * se + 1e-9) << name;
    }
  }
}

// Meta-switcher and iocaine ---------------------------------------------------

std::unique_ptr<MetaSwitchBot> RockPaperSwitcher() {
  std::vector<std::unique_ptr<Bot>> subs;
  subs.push_back(std::make_unique<FixedMixBot>("r", ActionDistribution::PointMass(R)));
  subs.push_back(std::make_unique<FixedMixBot>("p", ActionDistribution::PointMass(P)));
  return std::make_unique<MetaSwitchBot>("switcher", std::move(subs));
}

TEST(MetaSwitchTest, PicksMostProfitable) {
  auto bot = RockPaperSwitcher();
  History h;
  for (int t = 0; t < 5; ++t) h.push_back({t == 0 ? R : P, R});
  const auto d = Drive(*bot, h);
  ExpectDist(d[0], 1, 0, 0);  // tie at step 0 -> first sub-policy
  for (std::size_t t = 1; t < d.size(); ++t) ExpectDist(d[t], 0, 1, 0);
  EXPECT_EQ(bot->current_choice(), 1);
  EXPECT_DOUBLE_EQ(bot->scores()[1], 5.0);
  EXPECT_DOUBLE_EQ(bot->scores()[0], 0.0);
}

TEST(MetaSwitchTest, SingleSubPolicyIsTransparent) {
  std::vector<std::unique_ptr<Bot>> subs;
  subs.push_back(Named("freqbot2"));
  MetaSwitchBot meta("m", std::move(subs));
  auto ref = Named("freqbot2");
  std::mt19937_64 gen(8);
  const History h = RandomHistory(gen, 100);
  const auto a = Drive(meta, h);
  const auto b = Drive(*ref, h);
  for (std::size_t t = 0; t < a.size(); ++t) ASSERT_EQ(a[t].p, b[t].p);
}

TEST(IocaineTest, FirstStepUsesFirstPair) {
  auto bot = Named("iocainebot");
  auto* ioc = dynamic_cast<IocaineBot*>(bot.get());
  ASSERT_NE(ioc, nullptr);
  bot->Reset();
  EXPECT_EQ(ioc->best_pair(), 0);
  ExpectDist(bot->Act({}), 1.0 / 3, 1.0 / 3, 1.0 / 3);
  EXPECT_EQ(ioc->num_predictors(), 2 + 3 * 6);
}

TEST(IocaineTest, BeatsRotation) {
  auto bot = Named("iocainebot");
  auto* ioc = dynamic_cast<IocaineBot*>(bot.get());
  auto rot = Named("rotatebot");
  const EpisodeResult r =
      PlayEpisode(*bot, *rot, {.num_steps = 200, .recall = 1}, 12);
  int wins = 0;
  for (int t = 100; t < 200; ++t) wins += r.rewards0[t] == 1;
  EXPECT_GE(wins, 90);
  const int best = ioc->best_pair();
  const int predictor = best / IocaineBot::kNumMetaStrategies;
  EXPECT_GE(predictor, 2);  // a history-match predictor
  EXPECT_EQ(best % IocaineBot::kNumMetaStrategies, 0);
  // Strictly ahead of every non-history-matching pair.
  for (int i = 0; i < 2 * IocaineBot::kNumMetaStrategies; ++i) {
    EXPECT_GT(ioc->scores()[best], ioc->scores()[i]);
  }
}

TEST(IocaineTest, NeutralAgainstRandom) {
  auto bot = Named("iocainebot");
  auto rnd = Named("randbot");
  const double sigma = std::sqrt(2.0 * 1000 / 3);
  for (int e = 0; e < 5; ++e) {
    EXPECT_LE(std::abs(PlayEpisode(*bot, *rnd, {}, DeriveEpisodeSeed(13, 0, 1, e))
                           .return0),
              3.0 * sigma);
  }
}

TEST(IocaineTest, GreenbergHasMoreWindows) {
  auto g = Named("greenberg");
  EXPECT_EQ(dynamic_cast<IocaineBot*>(g.get())->num_predictors(), 2 + 3 * 11);
}

}  // namespace
}  // namespace rrps::bots
