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

#include "rrps/pbe/stats.h"

#include <cmath>
#include <stdexcept>

namespace rrps::pbe {

Estimate MeanAndError(const std::vector<int>& samples) {
  if (samples.empty()) throw std::invalid_argument("no samples");
  const double n = static_cast<double>(samples.size());
  // Integer returns: exact sums keep the mean independent of order.
  long long sum = 0;
  for (int x : samples) sum += x;
  Estimate e;
  e.mean = static_cast<double>(sum) / n;
  if (samples.size() > 1) {
    double ss = 0.0;
    for (int x : samples) ss += (x - e.mean) * (x - e.mean);
    e.se = std::sqrt(ss / (n - 1) / n);
  }
  return e;
}

}  // namespace rrps::pbe
