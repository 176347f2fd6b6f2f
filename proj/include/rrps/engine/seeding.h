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

#ifndef RRPS_ENGINE_SEEDING_H_
#define RRPS_ENGINE_SEEDING_H_

#include <cstdint>
#include <random>

namespace rrps {

// SplitMix64 finalizer (Steele, Lea & Flood 2014). Bijective on uint64.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based seed for one episode: a chained Mix64 over the four fields,
// so every (row, col, episode) cell gets its own stream regardless of the
// order in which cells are scheduled.
constexpr std::uint64_t DeriveEpisodeSeed(std::uint64_t master,
                                          std::uint64_t row, std::uint64_t col,
                                          std::uint64_t episode) {
  std::uint64_t h = Mix64(master);
  h = Mix64(h ^ (row * 0xd6e8feb86659fd93ULL));
  h = Mix64(h ^ (col * 0xa0761d6478bd642fULL));
  h = Mix64(h ^ (episode * 0xe7037ed1a0b428dbULL));
  return h;
}

// Reserved row/col tags that keep the seed streams of the different
// evaluation procedures apart from the N x N bot grid.
namespace seed_streams {
inline constexpr std::uint64_t kAgent = 0x1000000;
inline constexpr std::uint64_t kExploiterTrain = 0x2000000;
inline constexpr std::uint64_t kExploiterEval = 0x3000000;
inline constexpr std::uint64_t kHoldoutFolds = 0x4000000;
inline constexpr std::uint64_t kHoldoutTrain = 0x5000000;
inline constexpr std::uint64_t kHoldoutEval = 0x6000000;
inline constexpr std::uint64_t kPredictability = 0x7000000;
inline constexpr std::uint64_t kPlay = 0x8000000;
}  // namespace seed_streams

// Uniform double in [0, 1) from the top 53 bits. std:: distributions are
// implementation-defined, this is not.
inline double UniformUnit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n) by rejection sampling; portable across
// standard libraries. Requires n > 0.
std::uint64_t UniformIndex(std::mt19937_64& gen, std::uint64_t n);

}  // namespace rrps

#endif  // RRPS_ENGINE_SEEDING_H_
