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

#include "bosonkit/matrix.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "bosonkit/error.hpp"

namespace bosonkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParticleNumberMismatch: return "ParticleNumberMismatch";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SingularImaginaryPart: return "SingularImaginaryPart";
    case ErrorCode::OutsideValidityRegion: return "OutsideValidityRegion";
    case ErrorCode::ClassicallyForbidden: return "ClassicallyForbidden";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : data_(Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows),
                                   static_cast<Eigen::Index>(cols))) {
  validate();
}

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd data) : data_(std::move(data)) { validate(); }

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto n_rows = static_cast<Eigen::Index>(rows.size());
  const auto n_cols = n_rows > 0 ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  data_.resize(n_rows, n_cols);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n_cols) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix initializer");
    }
    Eigen::Index j = 0;
    for (const auto& v : row) data_(i, j++) = v;
    ++i;
  }
  validate();
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return ComplexMatrix(Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(k, k)));
}

void ComplexMatrix::validate() const {
  if (data_.rows() < 1 || data_.cols() < 1) {
    throw Error(ErrorCode::InvalidArgument, "matrix needs at least one row and column");
  }
  for (Eigen::Index j = 0; j < data_.cols(); ++j) {
    for (Eigen::Index i = 0; i < data_.rows(); ++i) {
      const Complex v = data_(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw Error(ErrorCode::NonFinite, "matrix entry is not finite");
      }
    }
  }
}

double unitarity_defect(const Eigen::MatrixXcd& u) {
  const Eigen::MatrixXcd d = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
  if (!matrix_.is_square()) {
    throw Error(ErrorCode::NonSquare, "unitary matrix must be square");
  }
  const double defect = unitarity_defect(matrix_.eigen());
  if (defect > kTolerance) {
    std::ostringstream msg;
    msg << "max|u^dagger u - I| = " << defect << " exceeds " << kTolerance;
    throw Error(ErrorCode::NotUnitary, msg.str());
  }
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
  return UnitaryMatrix(ComplexMatrix::identity(dim));
}

UnitaryMatrix UnitaryMatrix::beamsplitter() {
  const double h = 1.0 / std::sqrt(2.0);
  return UnitaryMatrix(ComplexMatrix{{h, h}, {h, -h}});
}

UnitaryMatrix UnitaryMatrix::phase(double alpha) {
  return UnitaryMatrix(ComplexMatrix{{std::polar(1.0, alpha)}});
}

namespace {

double parse_double(std::string_view token, std::string_view what) {
  double value = 0.0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::ParseError, "cannot parse " + std::string(what) + " '" +
                                           std::string(token) + "'");
  }
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::ParseError, "non-finite value '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

ComplexMatrix read_matrix(std::istream& in) {
  long long rows = 0;
  long long cols = 0;
  if (!(in >> rows >> cols) || rows < 1 || cols < 1) {
    throw Error(ErrorCode::ParseError, "expected header 'rows cols' with positive values");
  }
  Eigen::MatrixXcd data(rows, cols);
  std::string token;
  for (long long i = 0; i < rows; ++i) {
    for (long long j = 0; j < cols; ++j) {
      if (!(in >> token)) {
        throw Error(ErrorCode::ParseError, "matrix has fewer entries than rows*cols");
      }
      const auto comma = token.find(',');
      if (comma == std::string::npos) {
        throw Error(ErrorCode::ParseError, "entry '" + token + "' is not of the form re,im");
      }
      const std::string_view sv(token);
      data(i, j) = Complex(parse_double(sv.substr(0, comma), "real part"),
                           parse_double(sv.substr(comma + 1), "imaginary part"));
    }
  }
  if (in >> token) {
    throw Error(ErrorCode::ParseError, "trailing data after matrix entries");
  }
  return ComplexMatrix(std::move(data));
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open matrix file '" + path + "'");
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << m.rows() << ' ' << m.cols() << '\n' << std::setprecision(17);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << m(i, j).real() << ',' << m(i, j).imag();
    }
    out << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

std::string format_matrix(const ComplexMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

}  // namespace bosonkit
