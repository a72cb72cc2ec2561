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

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>

#include <Eigen/Dense>

namespace bosonkit {

using Complex = std::complex<double>;

/// Dense complex matrix with at least one row and one column and finite
/// entries. Thin value wrapper around an Eigen matrix.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  explicit ComplexMatrix(Eigen::MatrixXcd data);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return static_cast<std::size_t>(data_.rows()); }
  std::size_t cols() const noexcept { return static_cast<std::size_t>(data_.cols()); }
  bool is_square() const noexcept { return data_.rows() == data_.cols(); }

  Complex operator()(std::size_t i, std::size_t j) const { return data_(i, j); }
  Complex& operator()(std::size_t i, std::size_t j) { return data_(i, j); }

  const Eigen::MatrixXcd& eigen() const noexcept { return data_; }

  ComplexMatrix transpose() const { return ComplexMatrix(Eigen::MatrixXcd(data_.transpose())); }
  ComplexMatrix conjugate() const { return ComplexMatrix(Eigen::MatrixXcd(data_.conjugate())); }
  ComplexMatrix adjoint() const { return ComplexMatrix(Eigen::MatrixXcd(data_.adjoint())); }

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.data_.rows() == b.data_.rows() && a.data_.cols() == b.data_.cols() &&
           a.data_ == b.data_;
  }

 private:
  void validate() const;

  Eigen::MatrixXcd data_;
};

/// Square matrix satisfying max|u^dagger u - I| <= 1e-10, checked at
/// construction.
class UnitaryMatrix {
 public:
  static constexpr double kTolerance = 1e-10;

  explicit UnitaryMatrix(ComplexMatrix m);

  static UnitaryMatrix identity(std::size_t dim);
  /// (1/sqrt 2) [[1, 1], [1, -1]].
  static UnitaryMatrix beamsplitter();
  /// 1x1 matrix holding e^{i alpha}.
  static UnitaryMatrix phase(double alpha);

  std::size_t dim() const noexcept { return matrix_.rows(); }
  Complex operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const Eigen::MatrixXcd& eigen() const noexcept { return matrix_.eigen(); }

  Eigen::MatrixXd real_part() const { return matrix_.eigen().real(); }
  Eigen::MatrixXd imag_part() const { return matrix_.eigen().imag(); }

  UnitaryMatrix transpose() const { return UnitaryMatrix(matrix_.transpose()); }
  UnitaryMatrix adjoint() const { return UnitaryMatrix(matrix_.adjoint()); }

 private:
  ComplexMatrix matrix_;
};

/// Largest entry of |u^dagger u - I|.
double unitarity_defect(const Eigen::MatrixXcd& u);

// Text format: first line "rows cols", then row-major "re,im" tokens
// separated by whitespace.
ComplexMatrix read_matrix(std::istream& in);
ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const ComplexMatrix& m);
std::string format_matrix(const ComplexMatrix& m);

}  // namespace bosonkit
