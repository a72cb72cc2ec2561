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

#include <vector>

namespace bosonkit {

/// value = mantissa * exp(log_scale); keeps huge Hermite values representable.
struct LogScaled {
  double mantissa = 0.0;
  double log_scale = 0.0;

  double value() const;
};

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence
/// H_{k+1} = 2x H_k - 2k H_{k-1}. Overflows to inf for large n and |x|.
double hermite_recurrence(int n, double x);

/// Orthonormal Hermite function e^{-x^2/2} H_n(x) / sqrt(2^n n! sqrt(pi)) by
/// the normalized recurrence, stable for large n.
double hermite_function(int n, double x);

/// Hermite function without the Gaussian factor, H_n(x) / sqrt(2^n n! sqrt(pi)).
/// Only intended for moderate |x| (quadrature nodes).
double hermite_function_polynomial(int n, double x);

/// H_n(x) in log-scaled form computed from the normalized recurrence.
LogScaled hermite_scaled(int n, double x);

/// Nodes and weights for integrals against exp(-x^2).
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch rule with `order` points; exact for polynomials of degree
/// < 2*order.
GaussHermiteRule gauss_hermite(int order);

}  // namespace bosonkit
