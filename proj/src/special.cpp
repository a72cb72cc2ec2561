// Copyright 2026 The bosonkit Authors
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

#include "bosonkit/special.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include <Eigen/Eigenvalues>

#include "bosonkit/error.hpp"

namespace bosonkit {

double LogScaled::value() const { return mantissa * std::exp(log_scale); }

double hermite_recurrence(int n, double x) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "Hermite order must be >= 0");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

double normalized_recurrence(int n, double x, double start) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "Hermite order must be >= 0");
  double prev = start;
  if (n == 0) return prev;
  double cur = std::sqrt(2.0) * x * prev;
  for (int k = 1; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

const double kPiQuarter = std::pow(std::numbers::pi, -0.25);

}  // namespace

double hermite_function(int n, double x) {
  return normalized_recurrence(n, x, kPiQuarter * std::exp(-0.5 * x * x));
}

double hermite_function_polynomial(int n, double x) {
  return normalized_recurrence(n, x, kPiQuarter);
}

LogScaled hermite_scaled(int n, double x) {
  // H_n(x) = phi_n(x) e^{x^2/2} sqrt(2^n n! sqrt(pi)); phi_n stays O(1) in the
  // oscillatory region so the product is carried in log form.
  const double log_norm =
      0.5 * (n * std::numbers::ln2 + std::lgamma(n + 1.0) + 0.5 * std::log(std::numbers::pi));
  return {hermite_function(n, x), 0.5 * x * x + log_norm};
}

GaussHermiteRule gauss_hermite(int order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "Gauss-Hermite order must be >= 1");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(0.5 * k);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  GaussHermiteRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  // normalized Hermite functions: psi_n(x) = e^{-x^2/2} H_n(x) / sqrt(2^n n! sqrt(pi))
  const auto psi_pair = [order](double x) {
    double prev = 0.0;
    double cur = std::exp(-0.5 * x * x) / std::pow(std::numbers::pi, 0.25);
    for (int j = 1; j <= order; ++j) {
      const double next = std::sqrt(2.0 / j) * x * cur - std::sqrt((j - 1.0) / j) * prev;
      prev = cur;
      cur = next;
    }
    return std::pair{cur, prev};
  };
  for (int k = 0; k < order; ++k) {
    double x = solver.eigenvalues()(k);
    for (int it = 0; it < 3; ++it) {
      const auto [pn, pm] = psi_pair(x);
      if (pm == 0.0) break;
      // psi_n' = sqrt(2n) psi_{n-1} - x psi_n, and psi_n(x) = 0 at the node
      x -= pn / (std::sqrt(2.0 * order) * pm);
    }
    rule.nodes[k] = x;
    const double pm = psi_pair(x).second;
    rule.weights[k] = pm == 0.0 ? 0.0 : std::exp(-x * x) / (order * pm * pm);
  }
  return rule;
}

}  // namespace bosonkit
