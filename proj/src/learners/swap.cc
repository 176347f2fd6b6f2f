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

#include "rrps/learners/swap.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rrps::learners {

namespace {

constexpr double kPolishThreshold = 1e-12;
constexpr int kMaxPowerIterations = 100000;

std::vector<double> LazyPowerIteration(
    const std::vector<std::vector<double>>& rows, std::vector<double> p) {
  const std::size_t m = rows.size();
  std::vector<double> next(m);
  for (int it = 0; it < kMaxPowerIterations; ++it) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) next[j] += p[i] * rows[i][j];
    }
    double delta = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      next[j] = 0.5 * (p[j] + next[j]);
      delta = std::max(delta, std::abs(next[j] - p[j]));
    }
    p.swap(next);
    if (delta < 1e-16) break;
  }
  return p;
}

}  // namespace

double StationaryResidual(const std::vector<std::vector<double>>& rows,
                          const std::vector<double>& p) {
  double worst = 0.0;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    double v = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) v += p[i] * rows[i][j];
    worst = std::max(worst, std::abs(v - p[j]));
  }
  return worst;
}

std::vector<double> StationaryDistribution(
    const std::vector<std::vector<double>>& rows) {
  const int m = static_cast<int>(rows.size());
  if (m == 0) throw std::invalid_argument("empty matrix");
  Eigen::MatrixXd a(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) a(j, i) = rows[i][j];
  }
  a -= Eigen::MatrixXd::Identity(m, m);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  lu.setThreshold(1e-10);
  std::vector<double> p(m, 1.0 / m);
  if (lu.rank() == m - 1) {
    const Eigen::VectorXd k = lu.kernel().col(0);
    const double sum = k.sum();
    if (std::abs(sum) > 1e-300) {
      for (int i = 0; i < m; ++i) p[i] = std::max(0.0, k(i) / sum);
      double total = 0.0;
      for (double x : p) total += x;
      for (double& x : p) x /= total;
    }
    if (StationaryResidual(rows, p) > kPolishThreshold) {
      p = LazyPowerIteration(rows, std::move(p));
    }
    return p;
  }
  return LazyPowerIteration(rows, std::move(p));
}

SwapRegret::SwapRegret(int num_arms, std::unique_ptr<ArmLearner> base)
    : num_arms_(num_arms), prototype_(std::move(base)) {
  if (!prototype_) prototype_ = std::make_unique<RegretMatcher>(num_arms, true);
  if (prototype_->num_arms() != num_arms) {
    throw std::invalid_argument("swap: base arm count mismatch");
  }
  for (int i = 0; i < num_arms; ++i) subs_.push_back(prototype_->Fresh());
  Combine();
}

std::vector<std::vector<double>> SwapRegret::Rows() const {
  std::vector<std::vector<double>> rows;
  rows.reserve(subs_.size());
  for (const auto& s : subs_) rows.push_back(s->Policy());
  return rows;
}

void SwapRegret::Combine() {
  const auto rows = Rows();
  policy_ = StationaryDistribution(rows);
  residual_ = StationaryResidual(rows, policy_);
}

void SwapRegret::Update(std::span<const double> payoffs) {
  std::vector<double> scaled(num_arms_);
  for (int i = 0; i < num_arms_; ++i) {
    for (int a = 0; a < num_arms_; ++a) scaled[a] = policy_[i] * payoffs[a];
    subs_[i]->Update(scaled);
  }
  Combine();
}

std::unique_ptr<ArmLearner> SwapRegret::Fresh() const {
  return std::make_unique<SwapRegret>(num_arms_, prototype_->Fresh());
}

}  // namespace rrps::learners
