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

#include <bit>
#include <random>
#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "rrps/bots/population.h"
#include "rrps/engine/episode.h"
#include "rrps/engine/match_log.h"
#include "rrps/engine/observation.h"
#include "rrps/engine/seeding.h"

namespace rrps {
namespace {

constexpr Action R = Action::kRock;
constexpr Action P = Action::kPaper;
constexpr Action S = Action::kScissors;

class FixedAgent : public Agent {
 public:
  FixedAgent(std::string name, ActionDistribution d)
      : name_(std::move(name)), d_(d) {}
  std::string_view name() const override { return name_; }
  void Reset() override {}
  ActionDistribution Act(const History&) override { return d_; }
  void Observe(const History&, int) override {}

 private:
  std::string name_;
  ActionDistribution d_;
};

std::unique_ptr<Agent> Bot(const std::string& name) {
  const auto pop = bots::Population::Default();
  return pop.MakeBot(*pop.SlotOf(name));
}

TEST(PayoffTest, MatchesTextRule) {
  EXPECT_EQ(JointPayoff(R, S), (Rewards{1, -1}));
  EXPECT_EQ(JointPayoff(P, P), (Rewards{0, 0}));
  EXPECT_EQ(JointPayoff(R, P), (Rewards{-1, 1}));
  EXPECT_EQ(Payoff(P, R), 1);
  EXPECT_EQ(Payoff(S, P), 1);
  EXPECT_EQ(Payoff(S, R), -1);
}

TEST(PayoffTest, ZeroSumAndAntisymmetric) {
  for (Action a : kAllActions) {
    for (Action b : kAllActions) {
      const Rewards r = JointPayoff(a, b);
      EXPECT_EQ(r.r0 + r.r1, 0);
      EXPECT_EQ(Payoff(a, b), -Payoff(b, a));
      EXPECT_EQ(Payoff(a, b), a == b ? 0 : (Beat(b) == a ? 1 : -1));
    }
  }
}

TEST(BeatTest, ThreeCycle) {
  EXPECT_EQ(Beat(S), R);
  EXPECT_EQ(Beat(Beat(Beat(R))), R);
  EXPECT_EQ(LosesTo(R), S);
  std::set<Action> images;
  for (Action a : kAllActions) {
    EXPECT_EQ(Payoff(Beat(a), a), 1);
    EXPECT_EQ(LosesTo(Beat(a)), a);
    EXPECT_EQ(LosesTo(a), Beat(Beat(a)));
    images.insert(Beat(a));
  }
  EXPECT_EQ(images.size(), 3u);
}

TEST(JointActionTest, IndexRange) {
  std::set<int> seen;
  for (Action a : kAllActions) {
    for (Action b : kAllActions) {
      const JointAction j{a, b};
      EXPECT_EQ(j.index(), 3 * Index(a) + Index(b));
      EXPECT_EQ(JointFromIndex(j.index()), j);
      seen.insert(j.index());
    }
  }
  EXPECT_EQ(seen.size(), 9u);
}

TEST(ObservationTest, Examples) {
  EXPECT_EQ(EncodeObservation(History{{R, P}}, 1), 1u);
  EXPECT_EQ(EncodeObservation(History{}, 1), 9u);
  EXPECT_EQ(EncodeObservation(History{{R, R}, {S, P}}, 2), 7u);
  EXPECT_EQ(EncodeObservation(History{{S, S}, {R, P}}, 0), 0u);
  EXPECT_EQ(EncodeObservation(History{{S, P}}, 3), 997u);
  EXPECT_THROW(EncodeObservation(History{}, -1), std::invalid_argument);
}

TEST(ObservationTest, PrefixConsistentAndSentinelCount) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    History h;
    const int len = static_cast<int>(gen() % 8);
    for (int i = 0; i < len; ++i) {
      h.push_back(JointFromIndex(static_cast<int>(gen() % 9)));
    }
    for (int r = 1; r <= 6; ++r) {
      const ObservationCode code = EncodeObservation(h, r);
      EXPECT_LT(code, ObservationSpaceSize(r));
      EXPECT_EQ(code % ObservationSpaceSize(r - 1),
                EncodeObservation(h, r - 1));
      // Highest max(0, r - t) digits are sentinels.
      int sentinels = 0;
      ObservationCode c = code;
      for (int d = 0; d < r; ++d, c /= 10) sentinels += (c % 10 == 9);
      EXPECT_EQ(sentinels, std::max(0, r - len));
    }
  }
}

TEST(SeedingTest, PureAndOrderSensitive) {
  EXPECT_EQ(DeriveEpisodeSeed(7, 1, 2, 3), DeriveEpisodeSeed(7, 1, 2, 3));
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 43; ++i) {
    for (std::uint64_t j = 0; j < 43; ++j) {
      if (i != j) {
        EXPECT_NE(DeriveEpisodeSeed(11, i, j, 0),
                  DeriveEpisodeSeed(11, j, i, 0));
      }
      for (std::uint64_t e = 0; e < 100; ++e) {
        seen.insert(DeriveEpisodeSeed(11, i, j, e));
      }
    }
  }
  EXPECT_EQ(seen.size(), 43u * 43u * 100u);
}

TEST(SeedingTest, MasterAvalanche) {
  double flipped = 0.0;
  int n = 0;
  for (std::uint64_t i = 0; i < 43; ++i) {
    for (std::uint64_t j = 0; j < 43; ++j) {
      const auto a = DeriveEpisodeSeed(1234, i, j, 5);
      const auto b = DeriveEpisodeSeed(1235, i, j, 5);
      EXPECT_NE(a, b);
      flipped += std::popcount(a ^ b);
      ++n;
    }
  }
  EXPECT_GE(flipped / n, 20.0);
}

TEST(SeedingTest, UniformIndexInRange) {
  std::mt19937_64 gen(3);
  std::array<int, 7> counts{};
  for (int i = 0; i < 7000; ++i) ++counts[UniformIndex(gen, 7)];
  for (int c : counts) EXPECT_NEAR(c, 1000, 150);
}

TEST(SampleActionTest, NeverPicksZeroMass) {
  const ActionDistribution d{{0.5, 0.5, 0.0}};
  EXPECT_EQ(SampleAction(d, 0.0), R);
  EXPECT_EQ(SampleAction(d, 0.49), R);
  EXPECT_EQ(SampleAction(d, 0.5), P);
  EXPECT_EQ(SampleAction(d, 0.9999999999), P);
}

TEST(EpisodeTest, RockbotVsAlwaysPaper) {
  auto rock = Bot("rockbot");
  FixedAgent paper("paper", ActionDistribution::PointMass(P));
  const EpisodeResult r = PlayEpisode(*rock, paper, {}, 1);
  EXPECT_EQ(r.return0, -1000);
  EXPECT_EQ(r.return1(), 1000);
  EXPECT_EQ(r.rewards0.size(), 1000u);
}

TEST(EpisodeTest, RockbotSelfPlayTies) {
  auto a = Bot("rockbot");
  auto b = Bot("rockbot");
  EXPECT_EQ(PlayEpisode(*a, *b, {}, 9).return0, 0);
}

TEST(EpisodeTest, RotatebotVsCopybotTiesAfterFirstStep) {
  auto rot = Bot("rotatebot");
  auto copy = Bot("copybot");
  double first_step = 0.0;
  constexpr int kEpisodes = 600;
  for (int e = 0; e < kEpisodes; ++e) {
    const EpisodeResult r =
        PlayEpisode(*rot, *copy, {}, DeriveEpisodeSeed(3, 0, 1, e));
    for (std::size_t t = 1; t < r.rewards0.size(); ++t) {
      ASSERT_EQ(r.rewards0[t], 0) << "episode " << e << " step " << t;
    }
    first_step += r.rewards0[0];
  }
  // Step 0 has mean 0 and variance 2/3.
  EXPECT_NEAR(first_step / kEpisodes, 0.0, 3.0 * std::sqrt(2.0 / 3 / kEpisodes));
}

TEST(EpisodeTest, DeterministicGivenSeed) {
  auto a0 = Bot("switchalot");
  auto b0 = Bot("iocainebot");
  auto a1 = Bot("switchalot");
  auto b1 = Bot("iocainebot");
  const auto r0 = PlayEpisode(*a0, *b0, {}, 42);
  const auto r1 = PlayEpisode(*a1, *b1, {}, 42);
  EXPECT_EQ(r0.actions, r1.actions);
  EXPECT_EQ(r0.rewards0, r1.rewards0);
  // Reusing instances resets them.
  EXPECT_EQ(PlayEpisode(*a0, *b0, {}, 42).actions, r0.actions);
}

TEST(EpisodeTest, ReturnBoundAndRewardRange) {
  auto a = Bot("randbot");
  auto b = Bot("r226bot");
  const EpisodeConfig cfg{.num_steps = 37, .recall = 1};
  const auto r = PlayEpisode(*a, *b, cfg, 8);
  int sum = 0;
  for (int x : r.rewards0) {
    EXPECT_TRUE(x == -1 || x == 0 || x == 1);
    sum += x;
  }
  EXPECT_EQ(sum, r.return0);
  EXPECT_LE(std::abs(r.return0), 37);
  EXPECT_EQ(r.actions.size(), 37u);
}

TEST(EpisodeTest, InvalidDistributionIdentifiesSourceAndStep) {
  FixedAgent bad("leaky", ActionDistribution{{0.5, 0.5, 0.1}});
  FixedAgent good("good", ActionDistribution::Uniform());
  try {
    PlayEpisode(good, bad, {}, 1);
    FAIL() << "expected InvalidPolicyError";
  } catch (const InvalidPolicyError& e) {
    EXPECT_EQ(e.source(), "leaky");
    EXPECT_EQ(e.step(), 0);
    EXPECT_NE(std::string(e.what()).find("leaky"), std::string::npos);
  }
  FixedAgent negative("neg", ActionDistribution{{1.5, -0.5, 0.0}});
  EXPECT_THROW(PlayEpisode(negative, good, {}, 1), InvalidPolicyError);
}

TEST(EpisodeTest, ConfigValidation) {
  FixedAgent a("a", ActionDistribution::Uniform());
  FixedAgent b("b", ActionDistribution::Uniform());
  EXPECT_THROW(PlayEpisode(a, b, {.num_steps = 0, .recall = 1}, 1),
               std::invalid_argument);
  EXPECT_THROW(PlayEpisode(a, b, {.num_steps = 5, .recall = -1}, 1),
               std::invalid_argument);
}

TEST(MatchLogTest, RecordsReplayToReturn) {
  auto a = Bot("switchbot");
  auto b = Bot("markov5");
  std::vector<MatchRecord> records;
  for (int e = 0; e < 5; ++e) {
    const std::uint64_t seed = DeriveEpisodeSeed(1, 3, 4, e);
    records.push_back(
        MatchRecord::FromEpisode(3, 4, e, seed, PlayEpisode(*a, *b, {}, seed)));
  }
  std::stringstream ss;
  WriteMatchLog(ss, records);
  const auto back = ReadMatchLog(ss);
  ASSERT_EQ(back.size(), records.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_TRUE(back[i].Replays());
    EXPECT_EQ(back[i].actions0.size(), 1000u);
    EXPECT_EQ(back[i].ToJsonLine(), records[i].ToJsonLine());
  }
  MatchRecord tampered = back[0];
  tampered.return0 += 1;
  EXPECT_FALSE(tampered.Replays());
  EXPECT_THROW(MatchRecord::FromJsonLine("{\"row_id\": 1}"),
               std::invalid_argument);
}

TEST(MatchLogTest, FieldOrder) {
  MatchRecord r;
  r.actions0 = "RP";
  r.actions1 = "SS";
  r.return0 = ReplayReturn("RP", "SS");
  EXPECT_EQ(r.ToJsonLine(),
            "{\"row_id\":0,\"col_id\":0,\"episode_index\":0,\"seed\":0,"
            "\"actions0\":\"RP\",\"actions1\":\"SS\",\"return0\":0}");
  EXPECT_THROW(ReplayReturn("RPX", "RRR"), std::invalid_argument);
  EXPECT_THROW(ReplayReturn("RP", "R"), std::invalid_argument);
}

}  // namespace
}  // namespace rrps
