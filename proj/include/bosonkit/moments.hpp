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

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bosonkit {

/// Reduced fraction with arbitrary-precision numerator and positive
/// denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long numerator);  // NOLINT(google-explicit-constructor)
  ExactRational(const mpz_class& numerator, const mpz_class& denominator);
  explicit ExactRational(mpq_class value);

  /// Accepts "a", "-a" or "a/b".
  static ExactRational parse(const std::string& text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }
  double to_double() const { return value_.get_d(); }
  /// "a/b", or "a" when the denominator is 1.
  std::string to_string() const { return value_.get_str(); }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const ExactRational& a, const ExactRational& b) {
    return a.value_ < b.value_;
  }
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    return ExactRational(mpq_class(a.value_ * b.value_));
  }
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b);

 private:
  mpq_class value_{0};
};

/// <|Perm A|^{2n}> over i.i.d. complex Gaussian A with entry variance
/// 2 sigma^2, stored as coefficient * (2 sigma^2)^{sigma_power}.
struct MomentResult {
  int order = 1;  // n
  int dimension = 1;
  ExactRational coefficient;
  int sigma_power = 0;    // n * N
  ExactRational scaled;   // coefficient / (N!)^n
};

inline constexpr int kMaxMomentDim = 30;

/// n = 1: coefficient N!.
MomentResult moment2_exact(int dimension);
/// n = 2: coefficient N! (N+1)!.
MomentResult moment4_exact(int dimension);
/// n = 3: seven-fold sum over compositions N_1 + ... + N_6 = N and a free
/// M_1, with M_2..M_6 fixed by the pair-counter constraints. Terms with a
/// negative M vanish. 1 <= N <= 30.
MomentResult moment6_exact(int dimension);

/// Same moments from the unreduced form: independent compositions of N
/// over S_n for both the permanent and its conjugate, kept when all n^2
/// pair counters agree. n in {1, 2, 3}. Slow; meant for small N.
MomentResult moment_exact_unreduced(int order, int dimension);

/// Scaled third moments for N = 1..23 as published, used as reference
/// constants by validate.
const std::vector<ExactRational>& reference_scaled_third_moments();

/// Compositions of total into parts non-negative entries, colexicographic.
std::vector<std::vector<int>> compositions(int total, int parts);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
};

inline constexpr int kMaxMonteCarloDim = 10;

/// Mean of |permanent_ryser(G)|^{2n} over draws of sample_ginibre(N, sigma2)
/// from one seeded stream. N <= 10, draws >= 100.
MonteCarloEstimate moment_monte_carlo(int order, int dimension, double sigma2,
                                      std::size_t draws, std::uint64_t seed);

struct ScalingFit {
  double lambda = 0.0;
  double nu = 0.0;
  double intercept = 0.0;
};

/// Least squares of log s_N = lambda N + nu log N + c over every supplied
/// point. Needs at least 10 points with N >= 1 and s_N > 0.
ScalingFit fit_scaling(const std::vector<std::pair<int, ExactRational>>& points);
ScalingFit fit_scaling(const std::vector<std::pair<int, double>>& points);

}  // namespace bosonkit
