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

#include <cstddef>
#include <cstdint>
#include <random>

#include "bosonkit/matrix.hpp"

namespace bosonkit {

/// Generator used for every seeded draw in the library: 64-bit Mersenne
/// Twister (19937-bit state) seeded through std::seed_seq. Streams are
/// reproducible within one build.
using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed);

enum class EnsembleKind { Haar, Ginibre, Quench };

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::Haar;
  std::size_t dimension = 1;
  double sigma2 = 0.5;    // ginibre: variance of each real and imaginary part
  double disorder = 0.0;  // quench: phases drawn from [-disorder*pi, disorder*pi]
  std::uint64_t seed = 0;
};

/// Haar-random unitary: QR of a complex Ginibre draw, with column j of Q
/// multiplied by the phase of R_jj.
UnitaryMatrix sample_haar(std::size_t dim, std::uint64_t seed);
UnitaryMatrix sample_haar(std::size_t dim, Rng& rng);

/// i.i.d. entries with real and imaginary parts ~ N(0, sigma2).
ComplexMatrix sample_ginibre(std::size_t dim, double sigma2, std::uint64_t seed);
ComplexMatrix sample_ginibre(std::size_t dim, double sigma2, Rng& rng);

/// F * D with F_jk = exp(2 pi i jk / M) / sqrt(M) (0-based j, k) and
/// D = diag(exp(i phi_j)), phi_j uniform on [-disorder*pi, disorder*pi].
/// Models the Wannier-to-momentum map after a quench from a Mott state
/// with random on-site energies folded into phases.
UnitaryMatrix quench_unitary(std::size_t dim, double disorder, std::uint64_t seed);

/// Dispatches on params.kind. Haar and quench results are unitary.
ComplexMatrix sample(const EnsembleSpec& params);

}  // namespace bosonkit
