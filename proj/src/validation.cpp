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

#include "bosonkit/validation.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>

#include "bosonkit/ensembles.hpp"
#include "bosonkit/error.hpp"
#include "bosonkit/fock.hpp"
#include "bosonkit/moments.hpp"
#include "bosonkit/permanent.hpp"
#include "bosonkit/representations.hpp"

namespace bosonkit {

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

namespace {

std::string format_error(const char* label, double value) {
  std::ostringstream s;
  s.precision(3);
  s << label << ' ' << std::scientific << value;
  return s.str();
}

OccupationVector random_occupation(std::size_t modes, int total, Rng& rng) {
  std::vector<int> occ(modes, 0);
  std::uniform_int_distribution<std::size_t> pick(0, modes - 1);
  for (int k = 0; k < total; ++k) ++occ[pick(rng)];
  return OccupationVector(occ);
}

ValidationCheck check_permanents(const ValidationOptions& o) {
  Rng rng = make_rng(o.seed);
  double worst = 0.0;
  const int top = std::min(8, o.dim_max + 4);
  for (int n = 1; n <= top; ++n) {
    const ComplexMatrix a = sample_ginibre(static_cast<std::size_t>(n), 0.5, rng);
    const Complex naive = permanent_naive(a);
    const double scale = std::max(1.0, std::abs(naive));
    worst = std::max({worst, std::abs(permanent_ryser(a) - naive) / scale,
                      std::abs(permanent_glynn(a) - naive) / scale});
  }
  return {"permanent naive/ryser/glynn", worst < 1e-10, format_error("max rel diff", worst)};
}

ValidationCheck check_amplitude_paths(const ValidationOptions& o) {
  Rng rng = make_rng(o.seed + 1);
  const int max_modes = std::clamp(o.dim_max, 1, 3);
  const int max_particles = std::clamp(o.dim_max, 1, 4);
  double worst = 0.0;
  for (int c = 0; c < 10; ++c) {
    const auto modes = static_cast<std::size_t>(1 + c % max_modes);
    const int total = 1 + (c / max_modes) % max_particles;
    const UnitaryMatrix u = sample_haar(modes, rng);
    const OccupationVector n = random_occupation(modes, total, rng);
    const OccupationVector m = random_occupation(modes, total, rng);
    const Complex perm = amplitude_fock(u, n, m).value;
    Complex contour = amplitude_fock_contour(u, n, m).value;
    if (o.fault_injection) contour = -contour;
    const Complex oracle = amplitude_fock_oracle(u, n, m).value;
    worst = std::max({worst, std::abs(perm - contour), std::abs(perm - oracle)});
  }
  return {"amplitude permanent/contour/oracle", worst < 1e-8, format_error("max abs diff", worst)};
}

ValidationCheck check_completeness(const ValidationOptions& o) {
  Rng rng = make_rng(o.seed + 2);
  const int max_modes = std::clamp(o.dim_max, 1, 4);
  const int total = std::clamp(o.dim_max, 1, 3);
  double worst = 0.0;
  for (int modes = 1; modes <= max_modes; ++modes) {
    const UnitaryMatrix u = sample_haar(static_cast<std::size_t>(modes), rng);
    const OccupationVector n = random_occupation(static_cast<std::size_t>(modes), total, rng);
    double sum = 0.0;
    for (const auto& outcome : output_distribution(u, n)) sum += outcome.probability;
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return {"sum_m |A(n->m)|^2 = 1", worst < 1e-9, format_error("max deviation", worst)};
}

ValidationCheck check_flat_quadrature(const ValidationOptions& o) {
  Rng rng = make_rng(o.seed + 3);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  const auto modes = static_cast<std::size_t>(std::clamp(o.dim_max, 1, 3));
  double worst_spread = 0.0;
  double worst_value = 0.0;
  int used = 0;
  while (used < 3) {
    const UnitaryMatrix u = sample_haar(modes, rng);
    std::optional<QuadratureTransform> transform;
    try {
      transform.emplace(u);
    } catch (const Error&) {
      continue;
    }
    ++used;
    const double expected = transform->probability();
    double lo = 1e300;
    double hi = 0.0;
    for (int k = 0; k < 20; ++k) {
      Eigen::VectorXd q(static_cast<Eigen::Index>(modes));
      Eigen::VectorXd big_q(static_cast<Eigen::Index>(modes));
      for (auto& v : q) v = coord(rng);
      for (auto& v : big_q) v = coord(rng);
      const double p = std::norm(transform->amplitude(q, big_q));
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
    worst_spread = std::max(worst_spread, (hi - lo) / hi);
    worst_value = std::max(worst_value, std::abs(hi - expected) / expected);
  }
  const double worst = std::max(worst_spread, worst_value);
  return {"flat quadrature probability", worst < 1e-10, format_error("max rel spread", worst)};
}

ValidationCheck check_moment_table(const ValidationOptions& o) {
  const auto& reference = reference_scaled_third_moments();
  const int top = o.dim_max >= 4 ? static_cast<int>(reference.size()) : 8;
  int mismatches = 0;
  for (int n = 1; n <= top; ++n) {
    if (!(moment6_exact(n).scaled == reference[static_cast<std::size_t>(n - 1)])) ++mismatches;
  }
  return {"third moments N=1.." + std::to_string(top) + " vs table", mismatches == 0,
          std::to_string(mismatches) + " mismatches"};
}

ValidationCheck check_closed_forms() {
  int mismatches = 0;
  mpz_class fact = 1;
  for (int n = 1; n <= 12; ++n) {
    fact *= n;
    if (!(moment2_exact(n).coefficient == ExactRational(fact, 1))) ++mismatches;
    if (!(moment4_exact(n).coefficient == ExactRational(mpz_class(fact * fact * (n + 1)), 1))) {
      ++mismatches;
    }
  }
  return {"closed-form second/fourth moments N<=12", mismatches == 0,
          std::to_string(mismatches) + " mismatches"};
}

ValidationCheck check_monte_carlo(const ValidationOptions& o) {
  struct Case {
    int order;
    int dimension;
    std::size_t draws;
  };
  std::vector<Case> cases = {{1, std::min(3, std::max(1, o.dim_max)), 100000}};
  if (o.dim_max >= 2) {
    cases.push_back({2, 2, 100000});
    cases.push_back({3, 2, 400000});
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    const MomentResult exact = c.order == 1   ? moment2_exact(c.dimension)
                               : c.order == 2 ? moment4_exact(c.dimension)
                                              : moment6_exact(c.dimension);
    const auto mc = moment_monte_carlo(c.order, c.dimension, 0.5, c.draws, o.seed + 10 + i);
    worst = std::max(worst, std::abs(mc.estimate - exact.coefficient.to_double()) / mc.standard_error);
  }
  std::ostringstream s;
  s.precision(3);
  s << "max |z| " << worst;
  return {"Monte Carlo moments within 3 sigma", worst < 3.0, s.str()};
}

}  // namespace

ValidationReport run_validation(const ValidationOptions& options) {
  if (options.dim_max < 1) throw Error(ErrorCode::InvalidArgument, "dim-max must be >= 1");
  ValidationReport report;
  report.checks.push_back(check_permanents(options));
  report.checks.push_back(check_amplitude_paths(options));
  report.checks.push_back(check_completeness(options));
  report.checks.push_back(check_flat_quadrature(options));
  report.checks.push_back(check_moment_table(options));
  report.checks.push_back(check_closed_forms());
  report.checks.push_back(check_monte_carlo(options));
  return report;
}

}  // namespace bosonkit
