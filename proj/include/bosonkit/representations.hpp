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
#include <initializer_list>
#include <vector>

#include "bosonkit/fock.hpp"
#include "bosonkit/matrix.hpp"

namespace bosonkit {

/// Complex field amplitudes labeling a multimode coherent state.
class CoherentLabel {
 public:
  explicit CoherentLabel(std::vector<Complex> amplitudes);
  CoherentLabel(std::initializer_list<Complex> amplitudes)
      : CoherentLabel(std::vector<Complex>(amplitudes)) {}

  std::size_t modes() const noexcept { return values_.size(); }
  Complex operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Complex>& values() const noexcept { return values_; }
  Eigen::VectorXcd eigen() const;

 private:
  std::vector<Complex> values_;
};

/// Real quadrature eigenvalues, one per mode.
class QuadraturePoint {
 public:
  explicit QuadraturePoint(std::vector<double> values);
  QuadraturePoint(std::initializer_list<double> values)
      : QuadraturePoint(std::vector<double>(values)) {}

  std::size_t modes() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const noexcept { return values_; }
  Eigen::VectorXd eigen() const;

 private:
  std::vector<double> values_;
};

// Single-mode basis kernels.

/// <q|n> = e^{-q^2/4} H_n(q/sqrt2) / sqrt(2^n n! sqrt(2 pi)).
Complex kernel_number_quadrature(int n, double q);
/// <q|phi> = (2 pi)^{-1/4} exp(-|phi|^2/2 - (q/2 - phi)^2 + phi^2/2).
Complex kernel_coherent_quadrature(Complex phi, double q);
/// <n|phi> = phi^n e^{-|phi|^2/2} / sqrt(n!).
Complex kernel_coherent_number(int n, Complex phi);
/// <q|p> = exp(i q.p / 2) / (4 pi)^{M/2}.
Complex kernel_qp(const QuadraturePoint& q, const QuadraturePoint& p);

/// exp(-phi*.phi/2 - psi*.psi/2 + psi*.u.phi).
Complex amplitude_coherent(const UnitaryMatrix& u, const CoherentLabel& phi,
                           const CoherentLabel& psi);
/// exp(-|psi - u phi|^2).
double probability_coherent(const UnitaryMatrix& u, const CoherentLabel& phi,
                            const CoherentLabel& psi);

/// Imaginary parts with condition number at or above this (or smallest
/// singular value below kMinImaginarySingularValue) count as singular.
inline constexpr double kMaxImaginaryCondition = 1e8;
inline constexpr double kMinImaginarySingularValue = 1e-8;

/// Quadrature-to-quadrature amplitude <Q'|q> for a fixed u = u^r + i u^i.
/// Precomputes the Gaussian kernel blocks
///   [[ (u^i)^-1 u^r, -(u^i)^-1 ], [ -((u^i)^T)^-1, u^r (u^i)^-1 ]]
/// and the prefactor 1/sqrt(det(-4 pi i u (u^i)^T)) (principal branch), so
/// many (q, Q) points can be evaluated cheaply.
class QuadratureTransform {
 public:
  explicit QuadratureTransform(const UnitaryMatrix& u);

  std::size_t modes() const noexcept { return static_cast<std::size_t>(real_.rows()); }
  Complex amplitude(const QuadraturePoint& q, const QuadraturePoint& big_q) const;
  Complex amplitude(const Eigen::VectorXd& q, const Eigen::VectorXd& big_q) const;
  /// 1/|det(4 pi u (u^i)^T)|, the squared modulus of every amplitude.
  double probability() const noexcept { return probability_; }

  const Eigen::MatrixXd& real_part() const noexcept { return real_; }
  const Eigen::MatrixXd& imag_part() const noexcept { return imag_; }

 private:
  Eigen::MatrixXd real_;
  Eigen::MatrixXd imag_;
  Eigen::MatrixXd top_left_;
  Eigen::MatrixXd top_right_;
  Eigen::MatrixXd bottom_left_;
  Eigen::MatrixXd bottom_right_;
  Complex prefactor_;
  double probability_;
};

Complex amplitude_quadrature(const UnitaryMatrix& u, const QuadraturePoint& q,
                             const QuadraturePoint& big_q);
double probability_quadrature(const UnitaryMatrix& u);

struct IntegralOptions {
  int initial_order = 40;
  int max_order = 320;
  double tolerance = 1e-10;
};

/// Single-mode A(n -> m) from the coherent-state resolution of identity,
/// (1/pi^2) int d^2psi d^2phi psi^m conj(phi)^n e^{-|psi|^2/2-|phi|^2/2}
/// A^C(phi, psi) / sqrt(m! n!), by tensor Gauss-Hermite quadrature over the
/// four real coordinates. Order doubles until successive results agree.
ComplexAmplitude amplitude_fock_via_coherent_integral(const UnitaryMatrix& u,
                                                      const OccupationVector& n,
                                                      const OccupationVector& m,
                                                      const IntegralOptions& options = {});

/// Single-mode A(n -> m) = int dQ dq <m|Q> <Q'|q> <q|n> with Gauss-Hermite
/// quadrature in (q, Q); u must have a nonzero imaginary part.
ComplexAmplitude amplitude_fock_via_quadrature_integral(const UnitaryMatrix& u,
                                                        const OccupationVector& n,
                                                        const OccupationVector& m,
                                                        const IntegralOptions& options = {
                                                            40, 1280, 1e-12});

}  // namespace bosonkit
