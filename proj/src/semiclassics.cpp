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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bosonkit/ensembles.hpp"
#include "bosonkit/error.hpp"
#include "bosonkit/parallel.hpp"
#include "bosonkit/representations.hpp"

namespace bosonkit {

using std::numbers::pi;

namespace {

// No validity checks; callers apply their own guard bands.
LogScaled hermite_asymptotic_unchecked(int n, double q) {
  const double s = 2.0 * n + 1.0;
  const double ratio = q * q / s;
  const double log_scale =
      0.5 * ((n + 1) * std::numbers::ln2 + n * std::log(static_cast<double>(n)) - n + q * q -
             0.5 * std::log1p(-ratio));
  const double phase = (n + 0.5) * std::asin(q / std::sqrt(s)) + 0.5 * q * std::sqrt(s - q * q) -
                       0.5 * pi * n;
  return {std::cos(phase), log_scale};
}

// e^{-q^2/4} H_n(q/sqrt2) / sqrt(2^n n! sqrt(2 pi)) from the asymptotic H_n.
double two_branch_kernel_unchecked(int n, double q) {
  const LogScaled h = hermite_asymptotic_unchecked(n, q / std::sqrt(2.0));
  const double log_norm =
      0.5 * (n * std::numbers::ln2 + std::lgamma(n + 1.0) + 0.5 * std::log(2.0 * pi));
  return h.mantissa * std::exp(h.log_scale - 0.25 * q * q - log_norm);
}

void check_classical(double n, double q) {
  if (!(n > 0.0)) throw Error(ErrorCode::InvalidArgument, "generating function needs n > 0");
  if (std::abs(q) > 2.0 * std::sqrt(n)) {
    throw Error(ErrorCode::ClassicallyForbidden,
                "|q| = " + std::to_string(std::abs(q)) + " exceeds 2 sqrt(n)");
  }
}

void check_kernel_band(double n, double q) {
  check_classical(n, q);
  if (std::abs(q) > kKernelAllowedFraction * 2.0 * std::sqrt(n)) {
    throw Error(ErrorCode::ClassicallyForbidden, "q lies inside the turning-point guard band");
  }
}

}  // namespace

LogScaled hermite_asymptotic_scaled(int n, double q) {
  if (n < 10) {
    throw Error(ErrorCode::OutsideValidityRegion, "Hermite asymptotics need n >= 10");
  }
  if (std::abs(q) > kHermiteAllowedFraction * std::sqrt(2.0 * n + 1.0)) {
    throw Error(ErrorCode::OutsideValidityRegion,
                "Hermite asymptotics need |q| <= 0.95 sqrt(2n+1)");
  }
  return hermite_asymptotic_unchecked(n, q);
}

double hermite_asymptotic(int n, double q) { return hermite_asymptotic_scaled(n, q).value(); }

double generating_f(double n, double q) {
  check_classical(n, q);
  const double root = std::sqrt(std::max(0.0, 4.0 * n - q * q));
  return 0.25 * q * root - n * std::acos(std::clamp(q / (2.0 * std::sqrt(n)), -1.0, 1.0));
}

double generating_f_dn(double n, double q) {
  check_classical(n, q);
  return -std::acos(std::clamp(q / (2.0 * std::sqrt(n)), -1.0, 1.0));
}

double generating_f_dq(double n, double q) {
  check_classical(n, q);
  return 0.5 * std::sqrt(std::max(0.0, 4.0 * n - q * q));
}

double generating_f_dndq(double n, double q) {
  check_classical(n, q);
  return 1.0 / std::sqrt(4.0 * n - q * q);
}

Complex kernel_semiclassical_qn(double n, double q) {
  check_kernel_band(n, q);
  const Complex density = generating_f_dndq(n, q) / Complex(0.0, 2.0 * pi);
  return std::sqrt(density) * std::polar(1.0, generating_f(n, q));
}

double kernel_semiclassical_qn_two_branch(int n, double q) {
  check_kernel_band(n, q);
  if (n < 10) {
    throw Error(ErrorCode::OutsideValidityRegion, "two-branch kernel needs n >= 10");
  }
  return two_branch_kernel_unchecked(n, q);
}

namespace {

struct ShootingState {
  std::vector<double> theta;
  Eigen::VectorXcd x;
  Eigen::VectorXcd y;
  Eigen::VectorXd residual;
};

ShootingState evaluate(const ShootingProblem& p, const std::vector<double>& theta) {
  const auto modes = static_cast<Eigen::Index>(p.u.dim());
  ShootingState s{theta, Eigen::VectorXcd(modes), {}, Eigen::VectorXd(modes)};
  for (Eigen::Index i = 0; i < modes; ++i) {
    s.x(i) = std::polar(std::sqrt(static_cast<double>(p.input[i])), -theta[i]);
  }
  s.y = p.u.eigen() * s.x;
  for (Eigen::Index l = 0; l < modes; ++l) s.residual(l) = std::norm(s.y(l)) - p.output[l];
  return s;
}

double max_abs(const Eigen::VectorXd& r) { return r.cwiseAbs().maxCoeff(); }

ShootingState run_start(const ShootingProblem& p, std::vector<double> theta,
                        const ShootingOptions& options) {
  const auto modes = static_cast<Eigen::Index>(p.u.dim());
  ShootingState state = evaluate(p, theta);
  if (modes == 1) return state;
  const Eigen::MatrixXcd& u = p.u.eigen();
  double lambda = 1e-3;
  for (int it = 0; it < options.max_iterations; ++it) {
    if (max_abs(state.residual) <= 0.01 * options.tolerance) break;
    // d r_l / d theta_k = 2 Im(conj(y_l) u_lk x_k), k >= 1 (theta_0 pinned).
    Eigen::MatrixXd jac(modes, modes - 1);
    for (Eigen::Index l = 0; l < modes; ++l) {
      for (Eigen::Index k = 1; k < modes; ++k) {
        jac(l, k - 1) = 2.0 * (std::conj(state.y(l)) * u(l, k) * state.x(k)).imag();
      }
    }
    const Eigen::MatrixXd normal = jac.transpose() * jac;
    const Eigen::VectorXd gradient = jac.transpose() * state.residual;
    const double cost = state.residual.squaredNorm();
    bool improved = false;
    while (lambda < 1e12) {
      Eigen::MatrixXd damped = normal;
      damped.diagonal().array() += lambda * (1.0 + normal.diagonal().array());
      const Eigen::VectorXd step = damped.ldlt().solve(-gradient);
      std::vector<double> trial = state.theta;
      for (Eigen::Index k = 1; k < modes; ++k) trial[k] += step(k - 1);
      ShootingState candidate = evaluate(p, trial);
      if (candidate.residual.squaredNorm() < cost) {
        state = std::move(candidate);
        lambda = std::max(lambda / 3.0, 1e-12);
        improved = true;
        break;
      }
      lambda *= 4.0;
    }
    if (!improved) break;
  }
  return state;
}

}  // namespace

ShootingSolution solve_shooting(const ShootingProblem& problem, std::uint64_t seed,
                                const ShootingOptions& options) {
  const std::size_t modes = problem.u.dim();
  if (problem.input.modes() != modes || problem.output.modes() != modes) {
    throw Error(ErrorCode::DimensionMismatch, "occupations must match the size of u");
  }
  if (problem.input.total() != problem.output.total()) {
    throw Error(ErrorCode::ParticleNumberMismatch, "shooting needs equal particle numbers");
  }
  if (problem.input.total() < 1) {
    throw Error(ErrorCode::InvalidArgument, "shooting needs at least one particle");
  }
  const std::size_t starts = static_cast<std::size_t>(options.starts_per_mode) * modes;
  std::vector<std::vector<double>> initial(starts, std::vector<double>(modes, 0.0));
  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
  for (std::size_t s = 1; s < starts; ++s) {
    for (std::size_t k = 1; k < modes; ++k) initial[s][k] = angle(rng);
  }
  std::vector<ShootingState> results(starts);
  parallel_for(starts, [&](std::size_t s) { results[s] = run_start(problem, initial[s], options); });

  std::size_t best = 0;
  double best_residual = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < starts; ++s) {
    const double r = max_abs(results[s].residual);
    if (r < best_residual) {
      best_residual = r;
      best = s;
    }
  }
  const ShootingState& win = results[best];
  ShootingSolution solution;
  solution.theta = win.theta;
  for (auto& t : solution.theta) t = std::remainder(t, 2.0 * pi);
  solution.chi.resize(modes, 0.0);
  for (std::size_t l = 0; l < modes; ++l) {
    if (problem.output[l] > 0) solution.chi[l] = std::arg(win.y(static_cast<Eigen::Index>(l)));
  }
  solution.residual = best_residual;
  solution.status =
      best_residual <= options.tolerance ? ShootingStatus::Converged : ShootingStatus::NoSolutionFound;
  solution.start_index = best;
  return solution;
}

std::vector<Complex> saddle_condition_defect(const ShootingProblem& problem,
                                             const ShootingSolution& solution) {
  const std::size_t modes = problem.u.dim();
  std::vector<Complex> defect(modes);
  for (std::size_t i = 0; i < modes; ++i) {
    Complex sum = 0.0;
    for (std::size_t l = 0; l < modes; ++l) {
      for (std::size_t lp = 0; lp < modes; ++lp) {
        sum += std::conj(problem.u(l, i)) * problem.u(lp, i) *
               std::sqrt(static_cast<double>(problem.output[l]) * problem.output[lp]) *
               std::polar(1.0, solution.chi[l] - solution.chi[lp]);
      }
    }
    defect[i] = sum - static_cast<double>(problem.input[i]);
  }
  return defect;
}

Complex three_step_amplitude_m1(double alpha, int n, int m, const ThreeStepOptions& options) {
  if (n < 20 || n > 200 || m < 20 || m > 200) {
    throw Error(ErrorCode::OutsideValidityRegion, "three-step composition needs 20 <= n, m <= 200");
  }
  const double s = std::sin(alpha);
  const double c = std::cos(alpha);
  if (std::abs(s) < 0.1) {
    throw Error(ErrorCode::OutsideValidityRegion, "three-step composition needs |sin alpha| >= 0.1");
  }
  if (options.grid < 16 || !(options.taper_fraction > 0.0 && options.taper_fraction < 0.5)) {
    throw Error(ErrorCode::InvalidArgument, "bad three-step grid options");
  }
  const QuadratureTransform transform(UnitaryMatrix::phase(alpha));
  const Complex prefactor = transform.amplitude(Eigen::VectorXd::Zero(1), Eigen::VectorXd::Zero(1));

  const int grid = options.grid;
  const double half_q = 2.0 * std::sqrt(static_cast<double>(n));
  const double half_big_q = 2.0 * std::sqrt(static_cast<double>(m));
  const double dq = 2.0 * half_q / grid;
  const double d_big_q = 2.0 * half_big_q / grid;
  auto taper = [&](double x, double half) {
    const double t = std::abs(x) / half;
    const double edge = 1.0 - options.taper_fraction;
    if (t <= edge) return 1.0;
    return 0.5 * (1.0 + std::cos(pi * (t - edge) / options.taper_fraction));
  };
  auto kernel = [&](int occ, double x) -> Complex {
    if (options.branches == KernelBranches::Both) return two_branch_kernel_unchecked(occ, x);
    const Complex density = generating_f_dndq(occ, x) / Complex(0.0, 2.0 * pi);
    return std::sqrt(density) * std::polar(1.0, generating_f(occ, x));
  };

  // Gaussian kernel for M = 1: exp(-(i/4)[(c/s) q^2 - (2/s) q Q + (c/s) Q^2]).
  std::vector<Complex> left(grid);
  for (int a = 0; a < grid; ++a) {
    const double q = -half_q + (a + 0.5) * dq;
    left[a] = kernel(n, q) * taper(q, half_q) * std::polar(1.0, -0.25 * (c / s) * q * q) * dq;
  }
  Complex total = 0.0;
  for (int b = 0; b < grid; ++b) {
    const double big_q = -half_big_q + (b + 0.5) * d_big_q;
    const Complex right = std::conj(kernel(m, big_q)) * taper(big_q, half_big_q) *
                          std::polar(1.0, -0.25 * (c / s) * big_q * big_q) * d_big_q;
    // exp(i q Q / (2 s)) along the q grid by a fixed rotation step.
    const double q0 = -half_q + 0.5 * dq;
    Complex rotor = std::polar(1.0, q0 * big_q / (2.0 * s));
    const Complex step = std::polar(1.0, dq * big_q / (2.0 * s));
    Complex inner = 0.0;
    for (int a = 0; a < grid; ++a) {
      inner += left[a] * rotor;
      rotor *= step;
    }
    total += right * inner;
  }
  return prefactor * total;
}

}  // namespace bosonkit
