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

#ifndef RRPS_BOTS_SEQUENCES_H_
#define RRPS_BOTS_SEQUENCES_H_

#include <string>
#include <string_view>
#include <vector>

#include "rrps/engine/types.h"

namespace rrps::bots {

// First `n` decimal digits of pi ("31415..."), Rabinowitz-Wagon spigot.
std::string PiDigits(int n);

// Lexicographically least de Bruijn sequence B(k, n) over {0..k-1}
// (Fredricksen-Kessler-Maiorana construction); length k^n.
std::vector<int> DeBruijn(int k, int n);

// Text that textbot plays, one action per byte (byte mod 3).
extern const std::string_view kTextbotText;

// The full action cycles played by the sequence bots.
std::vector<Action> RotateSequence();
std::vector<Action> PiSequence(int length);
std::vector<Action> DeBruijnSequence();
std::vector<Action> TextSequence();

}  // namespace rrps::bots

#endif  // RRPS_BOTS_SEQUENCES_H_
