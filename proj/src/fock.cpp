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

#include "bosonkit/fock.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "bosonkit/ensembles.hpp"
#include "bosonkit/error.hpp"
#include "bosonkit/permanent.hpp"

namespace bosonkit {

OccupationVector::OccupationVector(std::vector<int> occupations) : occ_(std::move(occupations)) {
  for (int v : occ_) {
    if (v < 0) throw Error(ErrorCode::InvalidArgument, "occupation numbers must be >= 0");
    total_ += v;
  }
}

OccupationVector OccupationVector::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view token = text.substr(start, comma - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::ParseError, "bad occupation list '" + std::string(text) + "'");
    }
    if (value < 0) {
      throw Error(ErrorCode::ParseError, "negative occupation in '" + std::string(text) + "'");
    }
    values.push_back(value);
    start = comma + 1;
  }
  return OccupationVector(std::move(values));
}

std::string OccupationVector::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < occ_.size(); ++i) out << (i ? "," : "") << occ_[i];
  return out.str();
}

std::string_view to_string(AmplitudePath path) {
  switch (path) {
    case AmplitudePath::Permanent: return "permanent";
    case AmplitudePath::Contour: return "contour";
    case AmplitudePath::Oracle: return "oracle";
    case AmplitudePath::Integral: return "integral";
  }
  return "unknown";
}

namespace {

void check_transition(std::size_t dim, const OccupationVector& n, const OccupationVector& m) {
  if (n.modes() != dim || m.modes() != dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "occupation vectors must have " + std::to_string(dim) + " modes");
  }
  if (n.total() != m.total()) {
    throw Error(ErrorCode::ParticleNumberMismatch,
                "input has " + std::to_string(n.total()) + " particles, output has " +
                    std::to_string(m.total()));
  }
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

double factorial_product(const OccupationVector& n) {
  double p = 1.0;
  for (int v : n.values()) p *= factorial(v);
  return p;
}

}  // namespace

std::vector<std::size_t> index_map(const OccupationVector& n) {
  std::vector<std::size_t> idx;
  idx.reserve(static_cast<std::size_t>(n.total()));
  for (std::size_t mode = 0; mode < n.modes(); ++mode) {
    idx.insert(idx.end(), static_cast<std::size_t>(n[mode]), mode);
  }
  return idx;
}

ExpandedMatrix expand_matrix(const ComplexMatrix& u, const OccupationVector& n,
                             const OccupationVector& m) {
  if (n.modes() != u.rows() || m.modes() != u.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "occupation length does not match matrix size");
  }
  if (n.total() != m.total()) {
    throw Error(ErrorCode::ParticleNumberMismatch, "row and column occupations differ in total");
  }
  if (n.total() < 1) {
    throw Error(ErrorCode::InvalidArgument, "expanded matrix needs at least one particle");
  }
  const auto rows = index_map(n);
  const auto cols = index_map(m);
  const auto size = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXcd e(size, size);
  for (Eigen::Index j = 0; j < size; ++j) {
    for (Eigen::Index k = 0; k < size; ++k) e(j, k) = u(rows[j], cols[k]);
  }
  return ExpandedMatrix{u, n, m, ComplexMatrix(std::move(e))};
}

ComplexAmplitude amplitude_fock(const UnitaryMatrix& u, const OccupationVector& n,
                                const OccupationVector& m, int max_particles) {
  check_transition(u.dim(), n, m);
  if (n.total() > max_particles) {
    throw Error(ErrorCode::DimensionTooLarge, "particle number " + std::to_string(n.total()) +
                                                  " exceeds limit " +
                                                  std::to_string(max_particles));
  }
  if (n.total() == 0) return {Complex(1.0), AmplitudePath::Permanent};
  // Output occupations select rows of u, input occupations select columns.
  const ExpandedMatrix expanded = expand_matrix(u.matrix(), m, n);
  const Complex perm = permanent_ryser(expanded.matrix);
  const double norm = std::sqrt(factorial_product(n) * factorial_product(m));
  return {perm / norm, AmplitudePath::Permanent};
}

namespace {

// Points beyond degree+1 on each x circle. The x-sums approximate
// w^m/m! with aliasing error ~ |w|^(m+K)/(m+K)!, |w| <= sqrt(M); 24 extra
// points push that below 1e-19 for M <= 3.
constexpr int kContourGuard = 24;

}  // namespace

ComplexAmplitude amplitude_fock_contour(const UnitaryMatrix& u, const OccupationVector& n,
                                        const OccupationVector& m) {
  check_transition(u.dim(), n, m);
  const std::size_t modes = u.dim();
  if (modes > 3 || n.total() > 6) {
    throw Error(ErrorCode::DimensionTooLarge, "contour path supports M <= 3 and N <= 6");
  }
  using std::numbers::pi;

  // x_j pairs with output occupation m_j, y_i with input occupation n_i.
  // For a fixed y on the grid the x-integrand factorizes over j:
  //   (1/K_j) sum_t exp(x_t w_j) x_t^{-m_j},  w = u y.
  std::vector<int> x_points(modes);
  std::vector<int> y_points(modes);
  for (std::size_t i = 0; i < modes; ++i) {
    x_points[i] = m[i] + 1 + kContourGuard;
    y_points[i] = n[i] + 1;
  }
  std::size_t y_grid = 1;
  for (int p : y_points) y_grid *= static_cast<std::size_t>(p);

  Complex coefficient = 0.0;
  std::vector<int> counter(modes, 0);
  std::vector<Complex> y(modes);
  for (std::size_t g = 0; g < y_grid; ++g) {
    Complex y_weight = 1.0;
    for (std::size_t i = 0; i < modes; ++i) {
      const double angle = 2.0 * pi * counter[i] / y_points[i];
      y[i] = std::polar(1.0, angle);
      y_weight *= std::polar(1.0, -angle * n[i]);
    }
    Complex x_factor = 1.0;
    for (std::size_t j = 0; j < modes; ++j) {
      Complex w = 0.0;
      for (std::size_t i = 0; i < modes; ++i) w += u(j, i) * y[i];
      Complex s = 0.0;
      for (int t = 0; t < x_points[j]; ++t) {
        const double angle = 2.0 * pi * t / x_points[j];
        s += std::exp(std::polar(1.0, angle) * w) * std::polar(1.0, -angle * m[j]);
      }
      x_factor *= s / static_cast<double>(x_points[j]);
    }
    coefficient += x_factor * y_weight;
    for (std::size_t i = 0; i < modes; ++i) {
      if (++counter[i] < y_points[i]) break;
      counter[i] = 0;
    }
  }
  coefficient /= static_cast<double>(y_grid);
  // d^m/dx^m d^n/dy^n at the origin = coefficient * prod m! n!.
  const double norm = std::sqrt(factorial_product(n) * factorial_product(m));
  return {coefficient * norm, AmplitudePath::Contour};
}

ComplexAmplitude amplitude_fock_oracle(const UnitaryMatrix& u, const OccupationVector& n,
                                       const OccupationVector& m) {
  check_transition(u.dim(), n, m);
  const std::size_t modes = u.dim();
  if (modes > 4 || n.total() > 5) {
    throw Error(ErrorCode::DimensionTooLarge, "oracle path supports M <= 4 and N <= 5");
  }
  // Polynomial in the unprimed creation operators, keyed by exponents.
  std::map<std::vector<int>, Complex> poly{{std::vector<int>(modes, 0), Complex(1.0)}};
  for (std::size_t j = 0; j < modes; ++j) {
    for (int rep = 0; rep < m[j]; ++rep) {
      // (b'_j)^dagger = sum_i conj(u_ji) b_i^dagger
      std::map<std::vector<int>, Complex> next;
      for (const auto& [exponents, coeff] : poly) {
        for (std::size_t i = 0; i < modes; ++i) {
          const Complex c = std::conj(u(j, i));
          if (c == Complex(0.0)) continue;
          auto raised = exponents;
          ++raised[i];
          next[raised] += coeff * c;
        }
      }
      poly = std::move(next);
    }
  }
  const auto it = poly.find(n.values());
  if (it == poly.end()) return {Complex(0.0), AmplitudePath::Oracle};
  // prod (b_i^dagger)^{n_i} |0> = sqrt(prod n_i!) |n>.
  const Complex overlap =
      it->second * std::sqrt(factorial_product(n)) / std::sqrt(factorial_product(m));
  return {std::conj(overlap), AmplitudePath::Oracle};
}

std::vector<OccupationVector> enumerate_occupations(std::size_t modes, int total) {
  std::vector<OccupationVector> out;
  if (modes == 0) return out;
  std::vector<int> current(modes, 0);
  auto recurse = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == modes) {
      current[pos] = remaining;
      out.emplace_back(current);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      current[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  recurse(recurse, 0, total);
  return out;
}

std::vector<OutcomeProbability> output_distribution(const UnitaryMatrix& u,
                                                    const OccupationVector& n) {
  if (n.modes() != u.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "occupation length does not match matrix size");
  }
  if (n.total() > kMaxDistributionParticles || u.dim() > kMaxDistributionModes) {
    throw Error(ErrorCode::DimensionTooLarge, "distribution supports N <= 6 and M <= 8");
  }
  std::vector<OutcomeProbability> out;
  for (auto& m : enumerate_occupations(u.dim(), n.total())) {
    const double p = std::norm(amplitude_fock(u, n, m).value);
    out.push_back({std::move(m), p});
  }
  return out;
}

std::vector<OccupationVector> sample_outputs(const UnitaryMatrix& u, const OccupationVector& n,
                                             std::size_t count, std::uint64_t seed) {
  const auto dist = output_distribution(u, n);
  std::vector<double> cdf(dist.size());
  double running = 0.0;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    running += dist[k].probability;
    cdf[k] = running;
  }
  // Last outcome with nonzero weight; guards against u landing past cdf.back().
  std::size_t last = 0;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    if (dist[k].probability > 0.0) last = k;
  }
  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, running);
  std::vector<OccupationVector> samples;
  samples.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    const double r = uniform(rng);
    auto k = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), r) - cdf.begin());
    samples.push_back(dist[std::min(k, last)].occupation);
  }
  return samples;
}

}  // namespace bosonkit
