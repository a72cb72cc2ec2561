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

#include "bosonkit/representations.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bosonkit/error.hpp"
#include "bosonkit/special.hpp"

namespace bosonkit {

using std::numbers::pi;

CoherentLabel::CoherentLabel(std::vector<Complex> amplitudes) : values_(std::move(amplitudes)) {
  for (const Complex& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorCode::NonFinite, "coherent amplitude is not finite");
    }
  }
}

Eigen::VectorXcd CoherentLabel::eigen() const {
  return Eigen::Map<const Eigen::VectorXcd>(values_.data(),
                                            static_cast<Eigen::Index>(values_.size()));
}

QuadraturePoint::QuadraturePoint(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFinite, "quadrature value is not finite");
  }
}

Eigen::VectorXd QuadraturePoint::eigen() const {
  return Eigen::Map<const Eigen::VectorXd>(values_.data(),
                                           static_cast<Eigen::Index>(values_.size()));
}

Complex kernel_number_quadrature(int n, double q) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "occupation must be >= 0");
  return std::pow(2.0, -0.25) * hermite_function(n, q / std::sqrt(2.0));
}

Complex kernel_coherent_quadrature(Complex phi, double q) {
  const Complex shifted = 0.5 * q - phi;
  return std::pow(2.0 * pi, -0.25) *
         std::exp(-0.5 * std::norm(phi) - shifted * shifted + 0.5 * phi * phi);
}

Complex kernel_coherent_number(int n, Complex phi) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "occupation must be >= 0");
  Complex power = 1.0;
  for (int k = 1; k <= n; ++k) power *= phi / std::sqrt(static_cast<double>(k));
  return power * std::exp(-0.5 * std::norm(phi));
}

Complex kernel_qp(const QuadraturePoint& q, const QuadraturePoint& p) {
  if (q.modes() != p.modes()) {
    throw Error(ErrorCode::DimensionMismatch, "q and p must have the same number of modes");
  }
  const double dot = q.eigen().dot(p.eigen());
  return std::polar(std::pow(4.0 * pi, -0.5 * static_cast<double>(q.modes())), 0.5 * dot);
}

namespace {

void check_modes(const UnitaryMatrix& u, std::size_t a, std::size_t b) {
  if (a != u.dim() || b != u.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "labels must have " + std::to_string(u.dim()) + " modes");
  }
}

}  // namespace

Complex amplitude_coherent(const UnitaryMatrix& u, const CoherentLabel& phi,
                           const CoherentLabel& psi) {
  check_modes(u, phi.modes(), psi.modes());
  const Eigen::VectorXcd a = phi.eigen();
  const Eigen::VectorXcd b = psi.eigen();
  const Complex cross = b.dot(u.eigen() * a);  // dot() conjugates its left operand
  return std::exp(-0.5 * a.squaredNorm() - 0.5 * b.squaredNorm() + cross);
}

double probability_coherent(const UnitaryMatrix& u, const CoherentLabel& phi,
                            const CoherentLabel& psi) {
  check_modes(u, phi.modes(), psi.modes());
  return std::exp(-(psi.eigen() - u.eigen() * phi.eigen()).squaredNorm());
}

QuadratureTransform::QuadratureTransform(const UnitaryMatrix& u)
    : real_(u.real_part()), imag_(u.imag_part()) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(imag_);
  const auto& sv = svd.singularValues();
  const double largest = sv(0);
  const double smallest = sv(sv.size() - 1);
  if (!(smallest >= kMinImaginarySingularValue) || largest / smallest >= kMaxImaginaryCondition) {
    throw Error(ErrorCode::SingularImaginaryPart,
                "imaginary part of u is singular or ill-conditioned (smallest singular value " +
                    std::to_string(smallest) + ")");
  }
  const Eigen::MatrixXd inv = imag_.fullPivLu().inverse();
  top_left_ = inv * real_;
  top_right_ = -inv;
  bottom_left_ = -inv.transpose();
  bottom_right_ = real_ * inv;

  const Eigen::MatrixXcd arg = Complex(0.0, -4.0 * pi) * u.eigen() * imag_.transpose();
  prefactor_ = 1.0 / std::sqrt(arg.determinant());
  probability_ = 1.0 / std::abs((4.0 * pi * u.eigen() * imag_.transpose()).determinant());
}

Complex QuadratureTransform::amplitude(const Eigen::VectorXd& q,
                                       const Eigen::VectorXd& big_q) const {
  if (static_cast<std::size_t>(q.size()) != modes() ||
      static_cast<std::size_t>(big_q.size()) != modes()) {
    throw Error(ErrorCode::DimensionMismatch, "quadrature points must match u");
  }
  const double form = q.dot(top_left_ * q) + q.dot(top_right_ * big_q) +
                      big_q.dot(bottom_left_ * q) + big_q.dot(bottom_right_ * big_q);
  return prefactor_ * std::polar(1.0, -0.25 * form);
}

Complex QuadratureTransform::amplitude(const QuadraturePoint& q,
                                       const QuadraturePoint& big_q) const {
  return amplitude(q.eigen(), big_q.eigen());
}

Complex amplitude_quadrature(const UnitaryMatrix& u, const QuadraturePoint& q,
                             const QuadraturePoint& big_q) {
  return QuadratureTransform(u).amplitude(q, big_q);
}

double probability_quadrature(const UnitaryMatrix& u) {
  return QuadratureTransform(u).probability();
}

namespace {

void check_single_mode(const UnitaryMatrix& u, const OccupationVector& n,
                       const OccupationVector& m) {
  if (u.dim() != 1 || n.modes() != 1 || m.modes() != 1) {
    throw Error(ErrorCode::DimensionTooLarge, "integral representations are single-mode only");
  }
  if (n.total() > 4 || m.total() > 4) {
    throw Error(ErrorCode::DimensionTooLarge, "integral representations support n, m <= 4");
  }
}

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

double sqrt_factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return std::sqrt(f);
}

template <class Rule>
ComplexAmplitude refine(const IntegralOptions& options, Rule&& evaluate) {
  int order = options.initial_order;
  Complex previous = evaluate(order);
  while (order * 2 <= options.max_order) {
    order *= 2;
    const Complex current = evaluate(order);
    const bool converged = std::abs(current - previous) < options.tolerance;
    previous = current;
    if (converged) break;
  }
  return {previous, AmplitudePath::Integral};
}

}  // namespace

ComplexAmplitude amplitude_fock_via_coherent_integral(const UnitaryMatrix& u,
                                                      const OccupationVector& n,
                                                      const OccupationVector& m,
                                                      const IntegralOptions& options) {
  check_single_mode(u, n, m);
  const int in = n[0];
  const int out = m[0];
  const Complex c = u(0, 0);

  // psi = a + i b, phi = x + i y; Gaussian weight e^{-a^2-b^2-x^2-y^2}.
  // For fixed psi the phi integrand conj(phi)^n e^{w phi}, w = conj(psi) c,
  // separates after the binomial expansion of (x - i y)^n.
  auto evaluate = [&](int order) {
    const GaussHermiteRule rule = gauss_hermite(order);
    const auto& nodes = rule.nodes;
    const auto& weights = rule.weights;
    std::vector<Complex> x_moments(in + 1);
    std::vector<Complex> y_moments(in + 1);
    std::vector<Complex> ex(order);
    std::vector<Complex> ey(order);
    Complex total = 0.0;
    for (int ia = 0; ia < order; ++ia) {
      for (int ib = 0; ib < order; ++ib) {
        const Complex psi(nodes[ia], nodes[ib]);
        const Complex w = std::conj(psi) * c;
        // Weight folded into the exponent: e^{w x} alone overflows at the
        // outer nodes of high-order rules.
        for (int k = 0; k < order; ++k) {
          const double log_weight = std::log(weights[k]);
          ex[k] = std::exp(log_weight + w * nodes[k]);
          ey[k] = std::exp(log_weight + Complex(0.0, 1.0) * w * nodes[k]);
        }
        for (int p = 0; p <= in; ++p) {
          Complex sx = 0.0;
          Complex sy = 0.0;
          for (int k = 0; k < order; ++k) {
            const double power = std::pow(nodes[k], p);
            sx += ex[k] * power;
            sy += ey[k] * power;
          }
          x_moments[p] = sx;
          y_moments[p] = sy;
        }
        Complex inner = 0.0;
        Complex minus_i_power = 1.0;
        for (int k = 0; k <= in; ++k) {
          inner += binomial(in, k) * minus_i_power * x_moments[in - k] * y_moments[k];
          minus_i_power *= Complex(0.0, -1.0);
        }
        total += weights[ia] * weights[ib] * std::pow(psi, out) * inner;
      }
    }
    return total / (pi * pi * sqrt_factorial(in) * sqrt_factorial(out));
  };
  return refine(options, evaluate);
}

ComplexAmplitude amplitude_fock_via_quadrature_integral(const UnitaryMatrix& u,
                                                        const OccupationVector& n,
                                                        const OccupationVector& m,
                                                        const IntegralOptions& options) {
  check_single_mode(u, n, m);
  const QuadratureTransform transform(u);
  const int in = n[0];
  const int out = m[0];
  // q = 2s, Q = 2t turns e^{-q^2/4} e^{-Q^2/4} into the Gauss-Hermite weight;
  // <q|n> = 2^{-1/4} e^{-s^2} h_n(sqrt2 s) with h_n the polynomial part.
  auto evaluate = [&](int order) {
    const GaussHermiteRule rule = gauss_hermite(order);
    const auto& nodes = rule.nodes;
    const auto& weights = rule.weights;
    std::vector<double> hn(order);
    std::vector<double> hm(order);
    for (int k = 0; k < order; ++k) {
      hn[k] = weights[k] * hermite_function_polynomial(in, std::sqrt(2.0) * nodes[k]);
      hm[k] = weights[k] * hermite_function_polynomial(out, std::sqrt(2.0) * nodes[k]);
    }
    Eigen::VectorXd q(1);
    Eigen::VectorXd big_q(1);
    Complex total = 0.0;
    for (int a = 0; a < order; ++a) {
      q(0) = 2.0 * nodes[a];
      Complex row = 0.0;
      for (int b = 0; b < order; ++b) {
        big_q(0) = 2.0 * nodes[b];
        row += hm[b] * transform.amplitude(q, big_q);
      }
      total += hn[a] * row;
    }
    return 4.0 * std::pow(2.0, -0.5) * total;
  };
  return refine(options, evaluate);
}

}  // namespace bosonkit
