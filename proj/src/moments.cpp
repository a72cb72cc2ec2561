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

#include "bosonkit/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>

#include "bosonkit/ensembles.hpp"
#include "bosonkit/error.hpp"
#include "bosonkit/parallel.hpp"
#include "bosonkit/permanent.hpp"

namespace bosonkit {

ExactRational::ExactRational(long numerator) : value_(numerator) {}

ExactRational::ExactRational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

ExactRational::ExactRational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

ExactRational ExactRational::parse(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorCode::ParseError, "not a rational number: '" + text + "'");
  }
  return ExactRational(q);
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
  if (b.value_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  return ExactRational(mpq_class(a.value_ / b.value_));
}

namespace {

std::vector<mpz_class> factorials(int upto) {
  std::vector<mpz_class> f(static_cast<std::size_t>(upto) + 1, 1);
  for (int k = 1; k <= upto; ++k) f[k] = f[k - 1] * k;
  return f;
}

void check_dimension(int dimension, int limit) {
  if (dimension < 1) throw Error(ErrorCode::InvalidArgument, "moment dimension must be >= 1");
  if (dimension > limit) {
    throw Error(ErrorCode::DimensionTooLarge, "moment dimension " + std::to_string(dimension) +
                                                  " exceeds limit " + std::to_string(limit));
  }
}

MomentResult make_result(int order, int dimension, const mpz_class& coefficient) {
  mpz_class norm = 1;
  const auto f = factorials(dimension);
  for (int k = 0; k < order; ++k) norm *= f[dimension];
  MomentResult r;
  r.order = order;
  r.dimension = dimension;
  r.coefficient = ExactRational(coefficient, mpz_class(1));
  r.sigma_power = order * dimension;
  r.scaled = ExactRational(coefficient, norm);
  return r;
}

void colex_fill(int remaining, int part, std::vector<int>& current,
                std::vector<std::vector<int>>& out) {
  if (part == 0) {
    current[0] = remaining;
    out.push_back(current);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    current[part] = v;
    colex_fill(remaining - v, part - 1, current, out);
  }
}

}  // namespace

std::vector<std::vector<int>> compositions(int total, int parts) {
  if (total < 0 || parts < 1) throw Error(ErrorCode::InvalidArgument, "bad composition shape");
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(parts), 0);
  colex_fill(total, parts - 1, current, out);
  return out;
}

MomentResult moment2_exact(int dimension) {
  check_dimension(dimension, 1 << 16);
  return make_result(1, dimension, factorials(dimension)[dimension]);
}

MomentResult moment4_exact(int dimension) {
  check_dimension(dimension, 1 << 16);
  const auto f = factorials(dimension + 1);
  return make_result(2, dimension, f[dimension] * f[dimension + 1]);
}

MomentResult moment6_exact(int dimension) {
  check_dimension(dimension, kMaxMomentDim);
  const int n = dimension;
  const auto f = factorials(n);
  const auto outer = compositions(n, 6);
  constexpr std::size_t kBlock = 256;
  const std::size_t blocks = (outer.size() + kBlock - 1) / kBlock;
  std::vector<mpz_class> partial(blocks, 0);
  parallel_for(blocks, [&](std::size_t b) {
    mpz_class acc = 0;
    mpz_class inner;
    mpz_class tmp;
    const std::size_t end = std::min(outer.size(), (b + 1) * kBlock);
    for (std::size_t c = b * kBlock; c < end; ++c) {
      const auto& k = outer[c];
      const int n1 = k[0], n2 = k[1], n3 = k[2], n4 = k[3], n5 = k[4], n6 = k[5];
      const int p[9] = {n1 + n3, n2 + n5, n4 + n6, n2 + n6, n1 + n4,
                        n3 + n5, n4 + n5, n3 + n6, n1 + n2};
      inner = 0;
      for (int m1 = 0; m1 <= n; ++m1) {
        const int m[6] = {m1,          n1 + n2 - m1, n1 + n3 - m1,
                          n1 + n4 - m1, n5 - n1 + m1, n6 - n1 + m1};
        if (std::any_of(std::begin(m), std::end(m), [](int v) { return v < 0; })) continue;
        tmp = f[n];
        for (int v : m) mpz_divexact(tmp.get_mpz_t(), tmp.get_mpz_t(), f[v].get_mpz_t());
        inner += tmp;
      }
      if (inner == 0) continue;
      tmp = f[n];
      for (int v : k) mpz_divexact(tmp.get_mpz_t(), tmp.get_mpz_t(), f[v].get_mpz_t());
      for (int v : p) tmp *= f[v];
      acc += tmp * inner;
    }
    partial[b] = acc;
  });
  mpz_class total = 0;
  for (const auto& v : partial) total += v;
  return make_result(3, n, total);
}

MomentResult moment_exact_unreduced(int order, int dimension) {
  if (order < 1 || order > 3) throw Error(ErrorCode::InvalidArgument, "order must be 1, 2 or 3");
  check_dimension(dimension, 12);
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(static_cast<std::size_t>(order));
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  const auto f = factorials(dimension);
  const auto table = compositions(dimension, static_cast<int>(perms.size()));
  auto counters = [&](const std::vector<int>& comp) {
    std::vector<int> p(static_cast<std::size_t>(order * order), 0);
    for (std::size_t a = 0; a < perms.size(); ++a) {
      for (int k = 0; k < order; ++k) p[k * order + perms[a][k]] += comp[a];
    }
    return p;
  };
  mpz_class total = 0;
  for (const auto& nx : table) {
    const auto px = counters(nx);
    for (const auto& my : table) {
      if (counters(my) != px) continue;
      mpz_class term = f[dimension] * f[dimension];
      for (int v : nx) mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), f[v].get_mpz_t());
      for (int v : my) mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), f[v].get_mpz_t());
      for (int v : px) term *= f[v];
      total += term;
    }
  }
  return make_result(order, dimension, total);
}

const std::vector<ExactRational>& reference_scaled_third_moments() {
  static const std::vector<ExactRational> values = [] {
    const char* text[] = {"6",
                          "18",
                          "122/3",
                          "79",
                          "140",
                          "10508/45",
                          "13068/35",
                          "579",
                          "276442/315",
                          "228754/175",
                          "3697434/1925",
                          "48374363/17325",
                          "12084328/3003",
                          "55026632/9555",
                          "5536562488/675675",
                          "290360139/25025",
                          "3748239326/229075",
                          "73954590386/3216213",
                          "156246017726/4849845",
                          "33081258263/734825",
                          "95883756128092/1527701175",
                          "767871070556/8793675",
                          "750199663660/6186609"};
    std::vector<ExactRational> out;
    for (const char* t : text) out.push_back(ExactRational::parse(t));
    return out;
  }();
  return values;
}

MonteCarloEstimate moment_monte_carlo(int order, int dimension, double sigma2, std::size_t draws,
                                      std::uint64_t seed) {
  if (order < 1 || order > 3) throw Error(ErrorCode::InvalidArgument, "order must be 1, 2 or 3");
  check_dimension(dimension, kMaxMonteCarloDim);
  if (draws < 100) throw Error(ErrorCode::InvalidArgument, "Monte Carlo needs >= 100 draws");
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
    throw Error(ErrorCode::InvalidArgument, "sigma2 must be positive");
  }
  Rng rng = make_rng(seed);
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t d = 0; d < draws; ++d) {
    const ComplexMatrix g = sample_ginibre(static_cast<std::size_t>(dimension), sigma2, rng);
    const double x = std::pow(std::norm(permanent_ryser(g)), order);
    const double delta = x - mean;
    mean += delta / static_cast<double>(d + 1);
    m2 += delta * (x - mean);
  }
  const double variance = m2 / static_cast<double>(draws - 1);
  return {mean, std::sqrt(variance / static_cast<double>(draws))};
}

namespace {

double log_rational(const ExactRational& r) {
  long num_exp = 0;
  long den_exp = 0;
  const double num = mpz_get_d_2exp(&num_exp, r.numerator().get_mpz_t());
  const double den = mpz_get_d_2exp(&den_exp, r.denominator().get_mpz_t());
  return std::log(num / den) + static_cast<double>(num_exp - den_exp) * std::log(2.0);
}

ScalingFit fit_logs(const std::vector<std::pair<int, double>>& logs) {
  if (logs.size() < 10) {
    throw Error(ErrorCode::InsufficientData,
                "scaling fit needs >= 10 points, got " + std::to_string(logs.size()));
  }
  Eigen::MatrixXd design(static_cast<Eigen::Index>(logs.size()), 3);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(logs.size()));
  for (std::size_t i = 0; i < logs.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    if (logs[i].first < 1) throw Error(ErrorCode::InvalidArgument, "scaling fit needs N >= 1");
    design(row, 0) = logs[i].first;
    design(row, 1) = std::log(static_cast<double>(logs[i].first));
    design(row, 2) = 1.0;
    rhs(row) = logs[i].second;
  }
  const Eigen::Vector3d x = design.colPivHouseholderQr().solve(rhs);
  return {x(0), x(1), x(2)};
}

}  // namespace

ScalingFit fit_scaling(const std::vector<std::pair<int, ExactRational>>& points) {
  std::vector<std::pair<int, double>> logs;
  for (const auto& [n, value] : points) {
    if (!(value.value() > 0)) throw Error(ErrorCode::InvalidArgument, "scaling fit needs s_N > 0");
    logs.emplace_back(n, log_rational(value));
  }
  return fit_logs(logs);
}

ScalingFit fit_scaling(const std::vector<std::pair<int, double>>& points) {
  std::vector<std::pair<int, double>> logs;
  for (const auto& [n, value] : points) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw Error(ErrorCode::InvalidArgument, "scaling fit needs finite s_N > 0");
    }
    logs.emplace_back(n, std::log(value));
  }
  return fit_logs(logs);
}

}  // namespace bosonkit
