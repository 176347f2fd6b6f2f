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

#ifndef RRPS_PBE_STATS_H_
#define RRPS_PBE_STATS_H_

#include <vector>

namespace rrps::pbe {

struct Estimate {
  double mean = 0.0;
  double se = 0.0;  // standard error of the mean; 0 for a single sample
};

// Sample mean and standard error (n - 1 denominator).
Estimate MeanAndError(const std::vector<int>& samples);

}  // namespace rrps::pbe

#endif  // RRPS_PBE_STATS_H_
