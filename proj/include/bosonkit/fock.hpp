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
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "bosonkit/matrix.hpp"

namespace bosonkit {

/// Nonnegative particle counts per mode.
class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<int> occupations);
  OccupationVector(std::initializer_list<int> occupations)
      : OccupationVector(std::vector<int>(occupations)) {}

  /// Parses "n1,n2,...".
  static OccupationVector parse(std::string_view text);

  std::size_t modes() const noexcept { return occ_.size(); }
  int total() const noexcept { return total_; }
  int operator[](std::size_t i) const { return occ_[i]; }
  const std::vector<int>& values() const noexcept { return occ_; }

  std::string to_string() const;

  friend bool operator==(const OccupationVector&, const OccupationVector&) = default;
  friend auto operator<=>(const OccupationVector& a, const OccupationVector& b) {
    return a.occ_ <=> b.occ_;
  }

 private:
  std::vector<int> occ_;
  int total_ = 0;
};

/// Which evaluation route produced an amplitude.
enum class AmplitudePath { Permanent, Contour, Oracle, Integral };

std::string_view to_string(AmplitudePath path);

struct ComplexAmplitude {
  Complex value;
  AmplitudePath path;
};

/// N x N matrix with entries base(d_j(input), d_k(output)).
struct ExpandedMatrix {
  ComplexMatrix base;
  OccupationVector input;
  OccupationVector output;
  ComplexMatrix matrix;
};

/// Mode index of each particle, nondecreasing, mode i repeated n_i times.
/// Indices are 0-based: (0,3,1) -> [1,1,1,2].
std::vector<std::size_t> index_map(const OccupationVector& n);

/// Repeats row i of u n_i times and column j m_j times.
ExpandedMatrix expand_matrix(const ComplexMatrix& u, const OccupationVector& n,
                             const OccupationVector& m);

inline constexpr int kDefaultMaxParticles = 12;

// Amplitude convention shared by every path: A(n -> m) = <m'|n> with the
// primed modes b'_j = sum_i u_ji b_i. For one particle, A(e_i -> e_j) = u_ji,
// and in general A = Perm(u[d(m), d(n)]) / sqrt(prod n_i! m_j!).

/// Permanent route (Ryser).
ComplexAmplitude amplitude_fock(const UnitaryMatrix& u, const OccupationVector& n,
                                const OccupationVector& m,
                                int max_particles = kDefaultMaxParticles);

/// Cauchy-integral route: the coefficient of prod x^m y^n in exp(x.u.y)
/// extracted by the trapezoid rule on unit circles. M <= 3, N <= 6.
ComplexAmplitude amplitude_fock_contour(const UnitaryMatrix& u, const OccupationVector& n,
                                        const OccupationVector& m);

/// Builds |m'> by multiplying out prod_j ((b'_j)^dagger)^{m_j} in the
/// unprimed creation operators and reads off the |n> coefficient.
/// M <= 4, N <= 5.
ComplexAmplitude amplitude_fock_oracle(const UnitaryMatrix& u, const OccupationVector& n,
                                       const OccupationVector& m);

/// All occupation vectors with `modes` entries summing to `total`, in
/// lexicographically descending order: (N,0,...), (N-1,1,0,...), ...
std::vector<OccupationVector> enumerate_occupations(std::size_t modes, int total);

struct OutcomeProbability {
  OccupationVector occupation;
  double probability;
};

inline constexpr int kMaxDistributionParticles = 6;
inline constexpr std::size_t kMaxDistributionModes = 8;

/// |A(n -> m)|^2 for every m with the same particle number. N <= 6, M <= 8.
std::vector<OutcomeProbability> output_distribution(const UnitaryMatrix& u,
                                                    const OccupationVector& n);

/// Inverse-CDF draws from output_distribution.
std::vector<OccupationVector> sample_outputs(const UnitaryMatrix& u, const OccupationVector& n,
                                             std::size_t count, std::uint64_t seed);

}  // namespace bosonkit
