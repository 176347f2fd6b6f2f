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

#include "rrps/engine/observation.h"

#include <stdexcept>

namespace rrps {

ObservationCode EncodeObservation(std::span<const JointAction> history,
                                  int recall) {
  if (recall < 0 || recall > kMaxRecall) {
    throw std::invalid_argument("recall out of range: " +
                                std::to_string(recall));
  }
  ObservationCode code = 0;
  ObservationCode place = 1;
  const std::size_t n = history.size();
  for (int i = 0; i < recall; ++i) {
    const int digit = static_cast<std::size_t>(i) < n
                          ? history[n - 1 - i].index()
                          : kMissingDigit;
    code += place * static_cast<ObservationCode>(digit);
    place *= 10;
  }
  return code;
}

std::uint64_t ObservationSpaceSize(int recall) {
  if (recall < 0 || recall > kMaxRecall) {
    throw std::invalid_argument("recall out of range: " +
                                std::to_string(recall));
  }
  std::uint64_t size = 1;
  for (int i = 0; i < recall; ++i) size *= 10;
  return size;
}

}  // namespace rrps
