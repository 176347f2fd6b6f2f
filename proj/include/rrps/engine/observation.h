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

#ifndef RRPS_ENGINE_OBSERVATION_H_
#define RRPS_ENGINE_OBSERVATION_H_

#include <cstdint>
#include <span>

#include "rrps/engine/types.h"

namespace rrps {

using ObservationCode = std::uint64_t;

// Digit used for joint actions that precede the start of the episode.
inline constexpr int kMissingDigit = 9;
// Codes are packed into a uint64, so recall is capped well below 20 digits.
inline constexpr int kMaxRecall = 18;

// Base-10 packing of the `recall` most recent joint actions: the most recent
// one occupies the lowest digit, missing steps are filled with 9.
ObservationCode EncodeObservation(std::span<const JointAction> history,
                                  int recall);

// 10^recall, the size of the observation space for `recall`.
std::uint64_t ObservationSpaceSize(int recall);

}  // namespace rrps

#endif  // RRPS_ENGINE_OBSERVATION_H_
