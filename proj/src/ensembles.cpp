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

#include "bosonkit/ensembles.hpp"

#include <cmath>
#include <numbers>

#include "bosonkit/error.hpp"

namespace bosonkit {

Rng make_rng(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    0x626f736fU};
  return Rng(seq);
}

ComplexMatrix sample_ginibre(std::size_t dim, double sigma2, Rng& rng) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "ginibre dimension must be >= 1");
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
    throw Error(ErrorCode::InvalidArgument, "ginibre sigma2 must be positive");
  }
  std::normal_distribution<double> normal(0.0, std::sqrt(sigma2));
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return ComplexMatrix(std::move(m));
}

ComplexMatrix sample_ginibre(std::size_t dim, double sigma2, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return sample_ginibre(dim, sigma2, rng);
}

UnitaryMatrix sample_haar(std::size_t dim, Rng& rng) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "haar dimension must be >= 1");
  const Eigen::MatrixXcd z = sample_ginibre(dim, 0.5, rng).eigen();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return UnitaryMatrix(ComplexMatrix(std::move(q)));
}

UnitaryMatrix sample_haar(std::size_t dim, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return sample_haar(dim, rng);
}

UnitaryMatrix quench_unitary(std::size_t dim, double disorder, std::uint64_t seed) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "quench dimension must be >= 1");
  if (!(disorder >= 0.0) || !std::isfinite(disorder)) {
    throw Error(ErrorCode::InvalidArgument, "disorder must be finite and >= 0");
  }
  Rng rng = make_rng(seed);
  const double width = disorder * std::numbers::pi;
  std::uniform_real_distribution<double> uniform(-width, width);
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::VectorXcd phases(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    phases(j) = disorder > 0.0 ? std::polar(1.0, uniform(rng)) : Complex(1.0);
  }
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  Eigen::MatrixXcd f(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      // Reduce jk mod M before scaling so the angle stays exact for small M.
      const auto jk = static_cast<double>((j * k) % n);
      f(j, k) = std::polar(norm, 2.0 * std::numbers::pi * jk / static_cast<double>(dim)) *
                phases(k);
    }
  }
  return UnitaryMatrix(ComplexMatrix(std::move(f)));
}

ComplexMatrix sample(const EnsembleSpec& params) {
  switch (params.kind) {
    case EnsembleKind::Haar: return sample_haar(params.dimension, params.seed).matrix();
    case EnsembleKind::Ginibre: return sample_ginibre(params.dimension, params.sigma2, params.seed);
    case EnsembleKind::Quench:
      return quench_unitary(params.dimension, params.disorder, params.seed).matrix();
  }
  throw Error(ErrorCode::InvalidArgument, "unknown ensemble kind");
}

}  // namespace bosonkit
