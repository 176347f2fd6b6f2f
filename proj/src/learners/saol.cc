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

#include "rrps/learners/saol.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace rrps::learners {

Saol::Saol(int num_arms, std::unique_ptr<ArmLearner> base)
    : num_arms_(num_arms), prototype_(std::move(base)) {
  if (!prototype_) prototype_ = std::make_unique<RegretMatcher>(num_arms, true);
  if (prototype_->num_arms() != num_arms) {
    throw std::invalid_argument("saol: base arm count mismatch");
  }
  Spawn();
  RecomputePolicy();
}

int Saol::ActiveCountAt(std::int64_t t) {
  if (t < 1) return 0;
  return std::bit_width(static_cast<std::uint64_t>(t));
}

void Saol::Spawn() {
  // Intervals starting at t: one per k with 2^k dividing t.
  for (int k = 0; k < 63; ++k) {
    const std::int64_t len = std::int64_t{1} << k;
    if (t_ % len != 0) break;
    const double eta = std::min(0.5, 1.0 / std::sqrt(static_cast<double>(len)));
    active_.push_back({t_, t_ + len - 1, eta, eta, prototype_->Fresh()});
  }
}

void Saol::RecomputePolicy() {
  policy_.assign(num_arms_, 0.0);
  double total = 0.0;
  for (const Instance& inst : active_) total += inst.weight;
  for (const Instance& inst : active_) {
    const std::vector<double>& q = inst.base->Policy();
    for (int a = 0; a < num_arms_; ++a) policy_[a] += inst.weight * q[a];
  }
  for (double& x : policy_) x /= total;
}

void Saol::Update(std::span<const double> payoffs) {
  double meta = 0.0;
  for (int a = 0; a < num_arms_; ++a) meta += policy_[a] * payoffs[a];
  const double meta01 = (meta + 1.0) / 2.0;
  for (Instance& inst : active_) {
    const std::vector<double>& q = inst.base->Policy();
    double value = 0.0;
    for (int a = 0; a < num_arms_; ++a) value += q[a] * payoffs[a];
    inst.weight *= 1.0 + inst.eta * ((value + 1.0) / 2.0 - meta01);
    inst.base->Update(payoffs);
  }
  ++t_;
  std::erase_if(active_, [&](const Instance& inst) { return inst.end < t_; });
  Spawn();
  RecomputePolicy();
}

std::unique_ptr<ArmLearner> Saol::Fresh() const {
  return std::make_unique<Saol>(num_arms_, prototype_->Fresh());
}

}  // namespace rrps::learners
