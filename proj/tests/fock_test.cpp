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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "bosonkit/ensembles.hpp"
#include "bosonkit/error.hpp"
#include "bosonkit/permanent.hpp"

namespace bosonkit {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

OccupationVector random_occupation(std::size_t modes, int total, Rng& rng) {
  std::vector<int> occ(modes, 0);
  std::uniform_int_distribution<std::size_t> pick(0, modes - 1);
  for (int k = 0; k < total; ++k) ++occ[pick(rng)];
  return OccupationVector(occ);
}

TEST(OccupationVector, ParseAndValidate) {
  const auto n = OccupationVector::parse("0,3,1");
  EXPECT_EQ(n.modes(), 3u);
  EXPECT_EQ(n.total(), 4);
  EXPECT_EQ(n.to_string(), "0,3,1");
  EXPECT_THROW(OccupationVector::parse("1,-1"), Error);
  EXPECT_THROW(OccupationVector::parse("1,,2"), Error);
  EXPECT_THROW(OccupationVector::parse("a"), Error);
  EXPECT_THROW(OccupationVector({1, -2}), Error);
}

TEST(IndexMap, ExpandsOccupations) {
  using V = std::vector<std::size_t>;
  EXPECT_EQ(index_map({1, 1}), (V{0, 1}));
  EXPECT_EQ(index_map({2, 0}), (V{0, 0}));
  EXPECT_EQ(index_map({0, 3, 1}), (V{1, 1, 1, 2}));
  EXPECT_TRUE(index_map({0, 0}).empty());
}

TEST(ExpandMatrix, UnitOccupationsGiveMatrixItself) {
  const UnitaryMatrix u = sample_haar(3, 3);
  const auto e = expand_matrix(u.matrix(), {1, 1, 1}, {1, 1, 1});
  EXPECT_EQ(e.matrix, u.matrix());
}

TEST(ExpandMatrix, RepeatsRowsAndColumns) {
  const ComplexMatrix u{{1.0, 2.0}, {3.0, 4.0}};
  const auto rows = expand_matrix(u, {2, 0}, {1, 1});
  EXPECT_EQ(rows.matrix, (ComplexMatrix{{1.0, 2.0}, {1.0, 2.0}}));
  const auto cols = expand_matrix(u, {1, 1}, {0, 2});
  EXPECT_EQ(cols.matrix, (ComplexMatrix{{2.0, 2.0}, {4.0, 4.0}}));
}

TEST(ExpandMatrix, Errors) {
  const ComplexMatrix u = ComplexMatrix::identity(2);
  try {
    expand_matrix(u, {1, 0}, {1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParticleNumberMismatch);
  }
  try {
    expand_matrix(u, {1, 0, 0}, {1, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(AmplitudeFock, IdentityPreservesState) {
  const UnitaryMatrix id = UnitaryMatrix::identity(3);
  EXPECT_NEAR(std::abs(amplitude_fock(id, {1, 2, 0}, {1, 2, 0}).value - 1.0), 0.0, 1e-15);
  EXPECT_EQ(amplitude_fock(id, {1, 2, 0}, {2, 1, 0}).value, Complex(0.0));
  EXPECT_EQ(amplitude_fock(id, {0, 0, 0}, {0, 0, 0}).value, Complex(1.0));
}

TEST(AmplitudeFock, HongOuMandel) {
  const UnitaryMatrix bs = UnitaryMatrix::beamsplitter();
  EXPECT_LT(std::abs(amplitude_fock(bs, {1, 1}, {1, 1}).value), 1e-15);
  EXPECT_NEAR(std::abs(amplitude_fock(bs, {2, 0}, {1, 1}).value), kInvSqrt2, 1e-15);
  EXPECT_NEAR(std::abs(amplitude_fock(bs, {1, 1}, {2, 0}).value), kInvSqrt2, 1e-15);
}

TEST(AmplitudeFock, Guards) {
  const UnitaryMatrix id = UnitaryMatrix::identity(2);
  EXPECT_THROW(amplitude_fock(id, {13, 0}, {13, 0}), Error);
  EXPECT_NO_THROW(amplitude_fock(id, {13, 0}, {13, 0}, 13));
  EXPECT_THROW(amplitude_fock(id, {1, 0}, {1, 1}), Error);
}

TEST(AmplitudeFock, SingleParticleIsMatrixElement) {
  const UnitaryMatrix u = sample_haar(3, 21);
  for (std::size_t i = 0; i < 3; ++i) {
    double total = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
      std::vector<int> in(3, 0), out(3, 0);
      in[i] = 1;
      out[j] = 1;
      const Complex a = amplitude_fock(u, OccupationVector(in), OccupationVector(out)).value;
      EXPECT_LT(std::abs(a - u(j, i)), 1e-15);
      total += std::norm(a);
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(AmplitudeFock, ConventionFixedByOracleOnAsymmetricCases) {
  Rng rng = make_rng(202);
  for (int trial = 0; trial < 20; ++trial) {
    const UnitaryMatrix u = sample_haar(2, rng);
    const auto n = random_occupation(2, 2, rng);
    const auto m = random_occupation(2, 2, rng);
    const Complex oracle = amplitude_fock_oracle(u, n, m).value;
    EXPECT_LT(std::abs(amplitude_fock(u, n, m).value - oracle), 1e-14)
        << n.to_string() << " -> " << m.to_string();
  }
}

TEST(AmplitudeOracle, IdentityOrthonormality) {
  const UnitaryMatrix id = UnitaryMatrix::identity(3);
  for (const auto& n : enumerate_occupations(3, 3)) {
    for (const auto& m : enumerate_occupations(3, 3)) {
      const Complex a = amplitude_fock_oracle(id, n, m).value;
      EXPECT_NEAR(std::abs(a), n == m ? 1.0 : 0.0, 1e-14);
    }
  }
}

TEST(AmplitudeOracle, SingleModePhase) {
  const double alpha = 0.7;
  const UnitaryMatrix u(ComplexMatrix{{std::polar(1.0, alpha), 0.0}, {0.0, 1.0}});
  const Complex a = amplitude_fock_oracle(u, {2, 0}, {2, 0}).value;
  EXPECT_NEAR(std::abs(a), 1.0, 1e-15);
  EXPECT_LT(std::abs(a - std::polar(1.0, 2.0 * alpha)), 1e-14);
  EXPECT_LT(std::abs(amplitude_fock(u, {2, 0}, {2, 0}).value - a), 1e-14);
}

TEST(AmplitudeOracle, BeamsplitterBunching) {
  const UnitaryMatrix bs = UnitaryMatrix::beamsplitter();
  EXPECT_NEAR(std::abs(amplitude_fock_oracle(bs, {1, 1}, {2, 0}).value), kInvSqrt2, 1e-15);
  double total = 0.0;
  for (const auto& m : enumerate_occupations(2, 2)) {
    total += std::norm(amplitude_fock_oracle(bs, {1, 1}, m).value);
  }
  EXPECT_NEAR(total, 1.0, 1e-14);
}

TEST(AmplitudeContour, Examples) {
  const UnitaryMatrix id = UnitaryMatrix::identity(2);
  EXPECT_NEAR(std::abs(amplitude_fock_contour(id, {1, 1}, {1, 1}).value - 1.0), 0.0, 1e-12);
  const UnitaryMatrix bs = UnitaryMatrix::beamsplitter();
  EXPECT_LT(std::abs(amplitude_fock_contour(bs, {1, 1}, {1, 1}).value), 1e-8);
  const UnitaryMatrix h = sample_haar(2, 4);
  EXPECT_LT(std::abs(amplitude_fock_contour(h, {2, 1}, {1, 2}).value -
                     amplitude_fock(h, {2, 1}, {1, 2}).value),
            1e-8);
}

TEST(AmplitudeContour, Guards) {
  const UnitaryMatrix id4 = UnitaryMatrix::identity(4);
  EXPECT_THROW(amplitude_fock_contour(id4, {1, 0, 0, 0}, {1, 0, 0, 0}), Error);
  const UnitaryMatrix id2 = UnitaryMatrix::identity(2);
  EXPECT_THROW(amplitude_fock_contour(id2, {4, 3}, {4, 3}), Error);
  EXPECT_THROW(amplitude_fock_oracle(id2, {4, 2}, {4, 2}), Error);
}

TEST(AmplitudePaths, AgreeWherePreconditionsOverlap) {
  Rng rng = make_rng(303);
  for (int trial = 0; trial < 40; ++trial) {
    const auto modes = static_cast<std::size_t>(1 + trial % 3);
    const int total = 1 + (trial / 3) % 5;
    const UnitaryMatrix u = sample_haar(modes, rng);
    const auto n = random_occupation(modes, total, rng);
    const auto m = random_occupation(modes, total, rng);
    const Complex perm = amplitude_fock(u, n, m).value;
    EXPECT_LT(std::abs(amplitude_fock_contour(u, n, m).value - perm), 1e-8);
    EXPECT_LT(std::abs(amplitude_fock_oracle(u, n, m).value - perm), 1e-8);
    EXPECT_LE(std::abs(perm), 1.0 + 1e-9);
  }
}

TEST(AmplitudeFock, InversionSymmetry) {
  Rng rng = make_rng(404);
  for (int trial = 0; trial < 10; ++trial) {
    const UnitaryMatrix u = sample_haar(3, rng);
    const auto n = random_occupation(3, 4, rng);
    const auto m = random_occupation(3, 4, rng);
    EXPECT_NEAR(std::abs(amplitude_fock(u, n, m).value),
                std::abs(amplitude_fock(u.adjoint(), m, n).value), 1e-12);
  }
}

TEST(AmplitudeFock, ManyBodyUnitarity) {
  Rng rng = make_rng(505);
  for (int trial = 0; trial < 10; ++trial) {
    for (std::size_t modes = 1; modes <= 4; ++modes) {
      const UnitaryMatrix u = sample_haar(modes, rng);
      const auto n = random_occupation(modes, 1 + trial % 4, rng);
      double total = 0.0;
      for (const auto& o : output_distribution(u, n)) total += o.probability;
      EXPECT_NEAR(total, 1.0, 1e-9);
    }
  }
}

TEST(EnumerateOccupations, LexDescending) {
  const auto all = enumerate_occupations(3, 2);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_EQ(all.front(), (OccupationVector{2, 0, 0}));
  EXPECT_EQ(all[1], (OccupationVector{1, 1, 0}));
  EXPECT_EQ(all.back(), (OccupationVector{0, 0, 2}));
  for (std::size_t k = 1; k < all.size(); ++k) EXPECT_GT(all[k - 1], all[k]);
  EXPECT_EQ(enumerate_occupations(3, 3).size(), 10u);
}

TEST(OutputDistribution, Beamsplitter) {
  const auto d = output_distribution(UnitaryMatrix::beamsplitter(), {1, 1});
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0].occupation, (OccupationVector{2, 0}));
  EXPECT_NEAR(d[0].probability, 0.5, 1e-12);
  EXPECT_NEAR(d[1].probability, 0.0, 1e-12);
  EXPECT_NEAR(d[2].probability, 0.5, 1e-12);
}

TEST(OutputDistribution, IdentityIsDeterministic) {
  const auto d = output_distribution(UnitaryMatrix::identity(2), {2, 1});
  for (const auto& o : d) {
    EXPECT_EQ(o.probability, (o.occupation == OccupationVector{2, 1}) ? 1.0 : 0.0);
  }
}

TEST(OutputDistribution, HaarThreeModesComplete) {
  const auto d = output_distribution(sample_haar(3, 33), {1, 1, 1});
  ASSERT_EQ(d.size(), 10u);
  double total = 0.0;
  for (const auto& o : d) total += o.probability;
  EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(OutputDistribution, Guards) {
  EXPECT_THROW(output_distribution(UnitaryMatrix::identity(2), {4, 3}), Error);
  EXPECT_THROW(output_distribution(UnitaryMatrix::identity(9), {1, 0, 0, 0, 0, 0, 0, 0, 0}),
               Error);
}

TEST(SampleOutputs, NeverDrawsHongOuMandelOutcome) {
  const auto s = sample_outputs(UnitaryMatrix::beamsplitter(), {1, 1}, 10000, 1);
  ASSERT_EQ(s.size(), 10000u);
  for (const auto& m : s) EXPECT_NE(m, (OccupationVector{1, 1}));
}

TEST(SampleOutputs, IdentityRepeatsInput) {
  const auto s = sample_outputs(UnitaryMatrix::identity(3), {0, 2, 1}, 5, 9);
  ASSERT_EQ(s.size(), 5u);
  for (const auto& m : s) EXPECT_EQ(m, (OccupationVector{0, 2, 1}));
}

TEST(SampleOutputs, FrequenciesMatchDistribution) {
  const UnitaryMatrix u = sample_haar(2, 77);
  const std::size_t count = 50000;
  const auto s = sample_outputs(u, {1, 1}, count, 78);
  std::map<OccupationVector, double> freq;
  for (const auto& m : s) freq[m] += 1.0;
  for (const auto& o : output_distribution(u, {1, 1})) {
    const double sigma = std::sqrt(o.probability * (1.0 - o.probability) / count);
    EXPECT_NEAR(freq[o.occupation] / count, o.probability, 3.0 * sigma + 1e-12)
        << o.occupation.to_string();
  }
}

TEST(SampleOutputs, Deterministic) {
  const UnitaryMatrix u = sample_haar(3, 5);
  EXPECT_EQ(sample_outputs(u, {1, 1, 0}, 100, 42), sample_outputs(u, {1, 1, 0}, 100, 42));
}

}  // namespace
}  // namespace bosonkit
