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

#include <cstdint>
#include <vector>

#include "bosonkit/fock.hpp"
#include "bosonkit/matrix.hpp"
#include "bosonkit/special.hpp"

namespace bosonkit {

// Guard bands keeping the asymptotic formulas away from turning points.
inline constexpr double kHermiteAllowedFraction = 0.95;
inline constexpr double kKernelAllowedFraction = 0.95;  // |q| <= 0.95 * 2 sqrt(n)

/// Oscillatory large-n form of H_n(q), valid for n >= 10 and
/// |q| <= 0.95 sqrt(2n+1):
///   sqrt(2^{n+1} n^n e^{-n+q^2} / sqrt(1 - q^2/(2n+1)))
///   * cos[(n+1/2) asin(q/sqrt(2n+1)) + (q/2) sqrt(2n+1-q^2) - (pi/2) n].
LogScaled hermite_asymptotic_scaled(int n, double q);
/// Same value as a plain double; overflows to inf for very large n.
double hermite_asymptotic(int n, double q);

/// f(n, q) = (q/4) sqrt(4n - q^2) - n arccos(q / (2 sqrt n)), |q| <= 2 sqrt n.
double generating_f(double n, double q);
/// df/dn = -arccos(q / (2 sqrt n)).
double generating_f_dn(double n, double q);
/// df/dq = sqrt(4n - q^2) / 2.
double generating_f_dq(double n, double q);
/// d^2 f / dn dq = 1 / sqrt(4n - q^2).
double generating_f_dndq(double n, double q);

/// Single-branch kernel sqrt((1/(2 pi i)) d^2f/dndq) e^{i f(n,q)}; needs
/// |q| <= 0.95 * 2 sqrt(n).
Complex kernel_semiclassical_qn(double n, double q);

/// Both momentum branches of <q|n> at large n, i.e. the cosine form
/// obtained from hermite_asymptotic_scaled. Real valued.
double kernel_semiclassical_qn_two_branch(int n, double q);

struct ShootingProblem {
  UnitaryMatrix u;
  OccupationVector input;
  OccupationVector output;
};

enum class ShootingStatus { Converged, NoSolutionFound };

/// Phases solving y = u x with x_i = sqrt(n_i) e^{-i theta_i},
/// |y_l|^2 = m_l. theta[0] is pinned to 0.
struct ShootingSolution {
  std::vector<double> theta;
  std::vector<double> chi;  // arg y_l (0 where m_l = 0)
  double residual = 0.0;    // max_l ||y_l|^2 - m_l|
  ShootingStatus status = ShootingStatus::NoSolutionFound;
  std::size_t start_index = 0;
};

struct ShootingOptions {
  double tolerance = 1e-10;
  int starts_per_mode = 8;
  int max_iterations = 200;
};

/// Multi-start Levenberg-Marquardt damped Newton on the residuals
/// |(u x)_l|^2 - m_l. Start 0 uses theta = 0, the rest draw uniform phases
/// from the seeded generator. The minimum-residual start wins, ties going
/// to the lowest start index.
ShootingSolution solve_shooting(const ShootingProblem& problem, std::uint64_t seed,
                                const ShootingOptions& options = {});

/// sum_{l,l'} conj(u_li) u_l'i sqrt(m_l m_l') e^{i(chi_l - chi_l')} - n_i,
/// the saddle condition in terms of the output phases.
std::vector<Complex> saddle_condition_defect(const ShootingProblem& problem,
                                             const ShootingSolution& solution);

enum class KernelBranches { Single, Both };

struct ThreeStepOptions {
  int grid = 4096;
  double taper_fraction = 0.01;
  KernelBranches branches = KernelBranches::Both;
};

/// Single-mode A(n -> m) for u = e^{i alpha} composed from three canonical
/// maps: number -> quadrature (semiclassical kernel), quadrature ->
/// quadrature (exact Gaussian kernel), quadrature -> number. Midpoint rule
/// over |q| <= 2 sqrt n, |Q| <= 2 sqrt m with cosine tapers on the outer
/// taper_fraction of each edge. Needs 20 <= n, m <= 200 and |sin alpha| >= 0.1.
Complex three_step_amplitude_m1(double alpha, int n, int m, const ThreeStepOptions& options = {});

}  // namespace bosonkit
