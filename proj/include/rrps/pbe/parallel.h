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

#ifndef RRPS_PBE_PARALLEL_H_
#define RRPS_PBE_PARALLEL_H_

#include <functional>

namespace rrps::pbe {

// Worker count used when a config asks for 0: the hardware concurrency, at
// least 1.
int DefaultWorkers();

// Calls body(i) for every i in [0, n) on up to `workers` threads. Each index
// runs exactly once; callers write results into per-index slots, so the
// outcome does not depend on the schedule. The first exception thrown by any
// body is rethrown after all threads have stopped.
void ParallelFor(int n, int workers, const std::function<void(int)>& body);

}  // namespace rrps::pbe

#endif  // RRPS_PBE_PARALLEL_H_
