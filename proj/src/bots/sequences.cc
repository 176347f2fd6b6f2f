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

#include "rrps/bots/sequences.h"

#include <functional>
#include <stdexcept>

namespace rrps::bots {

std::string PiDigits(int n) {
  if (n <= 0) return {};
  // A few spare digits so that held 9s at the tail are resolved.
  const int digits = n + 8;
  const int len = 10 * digits / 3 + 1;
  std::vector<int> a(len, 2);
  std::string out;
  out.reserve(digits + 1);
  int nines = 0;
  int predigit = 0;
  for (int j = 0; j < digits; ++j) {
    int q = 0;
    for (int i = len; i > 0; --i) {
      const int x = 10 * a[i - 1] + q * i;
      a[i - 1] = x % (2 * i - 1);
      q = x / (2 * i - 1);
    }
    a[0] = q % 10;
    q /= 10;
    if (q == 9) {
      ++nines;
    } else if (q == 10) {
      out.push_back(static_cast<char>('0' + predigit + 1));
      out.append(nines, '0');
      predigit = 0;
      nines = 0;
    } else {
      if (j > 0) out.push_back(static_cast<char>('0' + predigit));
      predigit = q;
      out.append(nines, '9');
      nines = 0;
    }
  }
  out.push_back(static_cast<char>('0' + predigit));
  out.resize(n);
  return out;
}

std::vector<int> DeBruijn(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("DeBruijn: k, n >= 1");
  std::vector<int> a(static_cast<std::size_t>(k * n) + 1, 0);
  std::vector<int> seq;
  std::function<void(int, int)> gen = [&](int t, int p) {
    if (t > n) {
      if (n % p == 0) {
        for (int i = 1; i <= p; ++i) seq.push_back(a[i]);
      }
      return;
    }
    a[t] = a[t - p];
    gen(t + 1, p);
    for (int j = a[t - p] + 1; j < k; ++j) {
      a[t] = j;
      gen(t + 1, t);
    }
  };
  gen(1, 1);
  return seq;
}

const std::string_view kTextbotText =
    "RoShamBo programming competition. Each match is a series of one "
    "thousand turns of Rock-Paper-Scissors between two programs. On every "
    "turn both programs choose simultaneously; rock crushes scissors, "
    "scissors cut paper and paper covers rock. A program may inspect the "
    "complete sequence of moves made so far by both players in the current "
    "match, but is told nothing else about its opponent. Match results are "
    "the difference between wins and losses, and programs are ranked by "
    "their total score over all matches played. Some entries in the field "
    "are deliberately weak so that strong programs can show how well they "
    "detect and exploit predictable behaviour, while still defending "
    "themselves against the best opponents.";

std::vector<Action> RotateSequence() {
  return {Action::kRock, Action::kPaper, Action::kScissors};
}

std::vector<Action> PiSequence(int length) {
  const std::string digits = PiDigits(length);
  std::vector<Action> seq;
  seq.reserve(digits.size());
  for (char c : digits) seq.push_back(ActionFromIndex((c - '0') % 3));
  return seq;
}

std::vector<Action> DeBruijnSequence() {
  std::vector<Action> seq;
  for (int d : DeBruijn(3, 4)) seq.push_back(ActionFromIndex(d));
  return seq;
}

std::vector<Action> TextSequence() {
  std::vector<Action> seq;
  seq.reserve(kTextbotText.size());
  for (char c : kTextbotText) {
    seq.push_back(ActionFromIndex(static_cast<unsigned char>(c) % 3));
  }
  return seq;
}

}  // namespace rrps::bots
