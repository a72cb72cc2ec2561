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

#include "bosonkit/semiclassics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bosonkit/ensembles.hpp"
#include "bosonkit/error.hpp"
#include "bosonkit/representations.hpp"

namespace bosonkit {
namespace {

using std::numbers::pi;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no bosonkit::Error thrown";
  return ErrorCode::InvalidArgument;
}

// Pointwise relative error of the asymptotic form against the recurrence,
// both in log-scaled form.
double hermite_relative_error(int n, double q) {
  const LogScaled approx = hermite_asymptotic_scaled(n, q);
  const LogScaled exact = hermite_scaled(n, q);
  const double ratio = approx.mantissa * std::exp(approx.log_scale - exact.log_scale);
  return std::abs(ratio - exact.mantissa) / std::abs(exact.mantissa);
}

TEST(HermiteAsymptotic, CenterOfEvenOrder) {
  EXPECT_LT(hermite_relative_error(50, 0.0), 0.01);
  const double exact = hermite_recurrence(50, 0.0);
  EXPECT_NEAR(hermite_asymptotic(50, 0.0), exact, 0.01 * std::abs(exact));
}

TEST(HermiteAsymptotic, OddOrderVanishesAtCenter) {
  EXPECT_EQ(hermite_recurrence(51, 0.0), 0.0);
  EXPECT_LT(std::abs(hermite_asymptotic_scaled(51, 0.0).mantissa), 0.01);
}

TEST(HermiteAsymptotic, OffCenter) { EXPECT_LT(hermite_relative_error(100, 5.0), 0.01); }

TEST(HermiteAsymptotic, ValidityRegion) {
  EXPECT_EQ(code_of([] { hermite_asymptotic(9, 0.0); }), ErrorCode::OutsideValidityRegion);
  const double edge = 0.95 * std::sqrt(101.0);
  EXPECT_NO_THROW(hermite_asymptotic(50, edge * 0.999));
  EXPECT_EQ(code_of([&] { hermite_asymptotic(50, edge * 1.001); }),
            ErrorCode::OutsideValidityRegion);
}

TEST(HermiteAsymptotic, ErrorDecreasesWithOrder) {
  for (double t : {0.0, 0.3, 0.6}) {
    double previous = INFINITY;
    for (int n : {50, 100, 200, 400}) {
      const double err = hermite_relative_error(n, t * std::sqrt(2.0 * n + 1.0));
      EXPECT_LT(err, previous) << "t=" << t << " n=" << n;
      previous = err;
    }
  }
}

TEST(GeneratingFunction, Examples) {
  for (double n : {1.0, 4.0, 37.5}) {
    EXPECT_NEAR(generating_f(n, 0.0), -n * pi / 2, 1e-13);
    EXPECT_NEAR(generating_f(n, 2.0 * std::sqrt(n)), 0.0, 1e-12);
  }
  const double h = 1e-5;
  const double fd = (generating_f(4.0 + h, 2.0) - generating_f(4.0 - h, 2.0)) / (2 * h);
  EXPECT_NEAR(fd, -pi / 3, 1e-6);
  EXPECT_NEAR(generating_f_dn(4.0, 2.0), -pi / 3, 1e-15);
}

TEST(GeneratingFunction, MixedDerivativeByNestedDifferences) {
  const double h = 1e-3;
  auto f_dq = [&](double n) {
    return (generating_f(n, 2.0 + h) - generating_f(n, 2.0 - h)) / (2 * h);
  };
  const double mixed = (f_dq(4.0 + h) - f_dq(4.0 - h)) / (2 * h);
  EXPECT_NEAR(mixed, 1.0 / std::sqrt(12.0), 1e-5);
  EXPECT_NEAR(generating_f_dndq(4.0, 2.0), 1.0 / std::sqrt(12.0), 1e-15);
}

TEST(GeneratingFunction, DerivativeIdentities) {
  Rng rng = make_rng(50);
  std::uniform_real_distribution<double> occ(2.0, 200.0);
  std::uniform_real_distribution<double> frac(-0.9, 0.9);
  const double h = 1e-6;
  for (int k = 0; k < 50; ++k) {
    const double n = occ(rng);
    const double q = frac(rng) * 2.0 * std::sqrt(n);
    const double scale = std::max(1.0, std::abs(generating_f(n, q)));
    const double dq = (generating_f(n, q + h) - generating_f(n, q - h)) / (2 * h);
    const double dn = (generating_f(n + h, q) - generating_f(n - h, q)) / (2 * h);
    EXPECT_NEAR(dq, generating_f_dq(n, q), 1e-6 * scale);
    EXPECT_NEAR(dn, generating_f_dn(n, q), 1e-6 * scale);
    EXPECT_NEAR(generating_f_dq(n, q), std::sqrt(4 * n - q * q) / 2, 1e-12 * scale);
  }
}

TEST(GeneratingFunction, ClassicallyForbidden) {
  EXPECT_EQ(code_of([] { generating_f(4.0, 4.01); }), ErrorCode::ClassicallyForbidden);
  EXPECT_EQ(code_of([] { generating_f_dndq(1.0, -2.5); }), ErrorCode::ClassicallyForbidden);
  EXPECT_EQ(code_of([] { kernel_semiclassical_qn(100.0, 19.5); }),
            ErrorCode::ClassicallyForbidden);
  EXPECT_NO_THROW(kernel_semiclassical_qn(100.0, 18.9));
}

TEST(SemiclassicalKernel, ModulusIsDensitySquareRoot) {
  const Complex k = kernel_semiclassical_qn(100.0, 0.0);
  EXPECT_NEAR(std::abs(k), std::sqrt(generating_f_dndq(100.0, 0.0) / (2 * pi)), 1e-15);
  EXPECT_NEAR(std::arg(k * std::polar(1.0, -generating_f(100.0, 0.0))), -pi / 4, 1e-12);
}

TEST(SemiclassicalKernel, EnvelopeMatchesAveragedDensity) {
  // |<q|n>|^2 averaged over two local periods 2 pi / sqrt(4n - q^2). The
  // single-branch kernel carries one of the two momentum branches, so the
  // averaged density is twice its squared modulus.
  const int n = 50;
  const double edge = 0.8 * 2.0 * std::sqrt(static_cast<double>(n));
  for (int k = 0; k <= 30; ++k) {
    const double q = -edge + 2.0 * edge * k / 30.0;
    const double window = 4.0 * pi / std::sqrt(4.0 * n - q * q);
    const int samples = 400;
    double avg = 0.0;
    for (int s = 0; s < samples; ++s) {
      const double x = q - window / 2 + window * (s + 0.5) / samples;
      avg += std::norm(kernel_number_quadrature(n, x));
    }
    avg /= samples;
    const double semiclassical = 2.0 * std::norm(kernel_semiclassical_qn(n, q));
    EXPECT_NEAR(semiclassical, avg, 0.10 * avg) << "q=" << q;
  }
}

TEST(SemiclassicalKernel, TwoBranchFormTracksExactKernel) {
  for (int n : {50, 100}) {
    const double peak = std::sqrt(1.0 / (pi * std::sqrt(4.0 * n)));
    for (double t : {-0.6, -0.2, 0.0, 0.35, 0.6}) {
      const double q = t * 2.0 * std::sqrt(static_cast<double>(n));
      EXPECT_NEAR(kernel_semiclassical_qn_two_branch(n, q), kernel_number_quadrature(n, q).real(),
                  0.01 * peak)
          << n << " " << q;
    }
  }
}

// u with u x = y for random x, y of the requested moduli: two unitaries
// rotating e_1 onto x/|x| and y/|y| sandwich a random unitary on the
// complement.
ShootingProblem feasible_problem(const OccupationVector& n, const OccupationVector& m, Rng& rng) {
  const auto modes = static_cast<Eigen::Index>(n.modes());
  std::uniform_real_distribution<double> angle(0.0, 2 * pi);
  auto frame = [&](const OccupationVector& occ) {
    Eigen::MatrixXcd a = sample_ginibre(n.modes(), 0.5, rng).eigen();
    for (Eigen::Index i = 0; i < modes; ++i) {
      a(i, 0) = std::polar(std::sqrt(static_cast<double>(occ[i])), angle(rng));
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    Eigen::MatrixXcd q = qr.householderQ();
    const Complex r00 = qr.matrixQR()(0, 0);
    q.col(0) *= r00 / std::abs(r00);
    return std::pair{q, Eigen::VectorXcd(a.col(0))};
  };
  const auto [u1, x] = frame(n);
  const auto [u2, y] = frame(m);
  Eigen::MatrixXcd middle = Eigen::MatrixXcd::Identity(modes, modes);
  if (modes > 1) middle.bottomRightCorner(modes - 1, modes - 1) = sample_haar(n.modes() - 1, rng).eigen();
  const Eigen::MatrixXcd u = u2 * middle * u1.adjoint();
  EXPECT_LT((u * x - y).norm(), 1e-12);
  return {UnitaryMatrix(ComplexMatrix(u)), n, m};
}

OccupationVector random_occupation(std::size_t modes, int total, Rng& rng) {
  std::vector<int> occ(modes, 0);
  std::uniform_int_distribution<std::size_t> pick(0, modes - 1);
  for (int k = 0; k < total; ++k) ++occ[pick(rng)];
  return OccupationVector(occ);
}

TEST(Shooting, IdentityWithEqualOccupations) {
  const ShootingProblem p{UnitaryMatrix::identity(3), {2, 1, 3}, {2, 1, 3}};
  const ShootingSolution s = solve_shooting(p, 1);
  EXPECT_EQ(s.status, ShootingStatus::Converged);
  EXPECT_LT(s.residual, 1e-14);
  EXPECT_EQ(s.start_index, 0u);
  for (double t : s.theta) EXPECT_EQ(t, 0.0);
}

TEST(Shooting, BeamsplitterBunching) {
  const ShootingProblem p{UnitaryMatrix::beamsplitter(), {1, 1}, {2, 0}};
  const ShootingSolution s = solve_shooting(p, 2);
  EXPECT_EQ(s.status, ShootingStatus::Converged);
  EXPECT_LT(s.residual, 1e-10);
  EXPECT_NEAR(std::remainder(s.theta[1] - s.theta[0], 2 * pi), 0.0, 1e-4);
}

TEST(Shooting, InfeasibleReportsNoSolution) {
  const ShootingProblem p{UnitaryMatrix::identity(2), {2, 0}, {0, 2}};
  const ShootingSolution s = solve_shooting(p, 3);
  EXPECT_EQ(s.status, ShootingStatus::NoSolutionFound);
  EXPECT_NEAR(s.residual, 2.0, 1e-12);
}

TEST(Shooting, Preconditions) {
  EXPECT_EQ(code_of([] { solve_shooting({UnitaryMatrix::identity(2), {1, 0}, {1, 1}}, 0); }),
            ErrorCode::ParticleNumberMismatch);
  EXPECT_EQ(code_of([] { solve_shooting({UnitaryMatrix::identity(2), {0, 0}, {0, 0}}, 0); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { solve_shooting({UnitaryMatrix::identity(3), {1, 0}, {1, 0}}, 0); }),
            ErrorCode::DimensionMismatch);
}

TEST(Shooting, FeasibleProblemsConvergeAndSatisfySaddleCondition) {
  Rng rng = make_rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t modes = 2 + trial % 2;
    const int total = 1 + trial % 6;
    const auto n = random_occupation(modes, total, rng);
    const auto m = random_occupation(modes, total, rng);
    const ShootingProblem p = feasible_problem(n, m, rng);
    const ShootingSolution s = solve_shooting(p, 100 + trial);
    ASSERT_EQ(s.status, ShootingStatus::Converged) << n.to_string() << " -> " << m.to_string();
    EXPECT_LT(s.residual, 1e-10);
    EXPECT_EQ(s.theta[0], 0.0);
    for (const Complex d : saddle_condition_defect(p, s)) EXPECT_LT(std::abs(d), 1e-8);
  }
}

TEST(Shooting, Deterministic) {
  Rng rng = make_rng(9);
  const ShootingProblem p = feasible_problem({2, 1, 1}, {0, 3, 1}, rng);
  const ShootingSolution a = solve_shooting(p, 77);
  const ShootingSolution b = solve_shooting(p, 77);
  EXPECT_EQ(a.theta, b.theta);
  EXPECT_EQ(a.residual, b.residual);
  EXPECT_EQ(a.start_index, b.start_index);
}

TEST(ThreeStep, DiagonalModulusNearOne) {
  const Complex a = three_step_amplitude_m1(pi / 2, 100, 100);
  EXPECT_NEAR(std::abs(a), 1.0, 0.15);
}

TEST(ThreeStep, OffDiagonalSmall) {
  EXPECT_LT(std::abs(three_step_amplitude_m1(pi / 2, 100, 101)), 0.1);
  EXPECT_LT(std::abs(three_step_amplitude_m1(1.0, 60, 64)), 0.1);
}

TEST(ThreeStep, PhaseMatchesSingleModeRotation) {
  for (const auto& [alpha, n] : {std::pair{pi / 2, 100}, std::pair{1.0, 60}, std::pair{2.3, 37}}) {
    const Complex a = three_step_amplitude_m1(alpha, n, n);
    EXPECT_NEAR(std::remainder(std::arg(a) - n * alpha, 2 * pi), 0.0, 0.1) << alpha << " " << n;
  }
}

TEST(ThreeStep, ValidityRegion) {
  EXPECT_EQ(code_of([] { three_step_amplitude_m1(1.0, 19, 20); }),
            ErrorCode::OutsideValidityRegion);
  EXPECT_EQ(code_of([] { three_step_amplitude_m1(1.0, 20, 201); }),
            ErrorCode::OutsideValidityRegion);
  EXPECT_EQ(code_of([] { three_step_amplitude_m1(0.05, 50, 50); }),
            ErrorCode::OutsideValidityRegion);
}

}  // namespace
}  // namespace bosonkit
