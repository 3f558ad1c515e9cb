// Copyright 2026 The grasskit Authors
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

#ifndef GRASSKIT_MATRIX_HPP
#define GRASSKIT_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <utility>

#include "grasskit/errors.hpp"

namespace grasskit {

using Index = Eigen::Index;
using Complexd = std::complex<double>;

/// Ground field of the inner-product space. Real and complex values share one
/// carrier type; the tag decides which kernels run and whether entrywise
/// conjugation acts at all.
enum class Field { Real, Complex };

inline Field promote(Field a, Field b) {
  return (a == Field::Complex || b == Field::Complex) ? Field::Complex
                                                      : Field::Real;
}

/// Dense field-tagged matrix. Storage is always complex; Real-tagged values
/// keep every imaginary part exactly zero (enforced on construction, preserved
/// by ring operations on IEEE doubles).
class Matrix {
 public:
  Matrix() : field_(Field::Real), m_(0, 0) {}

  Matrix(Field field, Eigen::MatrixXcd m);

  static Matrix real(Eigen::MatrixXd m);
  static Matrix complex(Eigen::MatrixXcd m) {
    return Matrix(Field::Complex, std::move(m));
  }
  static Matrix zero(Field field, Index rows, Index cols) {
    return Matrix(field, Eigen::MatrixXcd::Zero(rows, cols));
  }
  static Matrix identity(Field field, Index d) {
    return Matrix(field, Eigen::MatrixXcd::Identity(d, d));
  }

  Field field() const { return field_; }
  Index rows() const { return m_.rows(); }
  Index cols() const { return m_.cols(); }
  bool empty() const { return m_.size() == 0; }

  /// Complex view; imaginary parts are exactly zero when field() is Real.
  const Eigen::MatrixXcd& cmat() const { return m_; }

  /// Real part as a real matrix. Only valid for Real-tagged values.
  Eigen::MatrixXd rmat() const;

  Complexd operator()(Index i, Index j) const { return m_(i, j); }

  Matrix adjoint() const { return Matrix(field_, m_.adjoint()); }
  Matrix transpose() const { return Matrix(field_, m_.transpose()); }
  /// Entrywise conjugation; the identity map on Real-tagged values.
  Matrix conjugate() const;
  Matrix block(Index i, Index j, Index r, Index c) const {
    return Matrix(field_, m_.block(i, j, r, c));
  }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(double s) const { return Matrix(field_, s * m_); }

  double max_abs() const { return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff(); }
  Complexd trace() const { return m_.trace(); }
  double frobenius_norm() const { return m_.norm(); }

  bool is_hermitian(double tol) const;
  bool same_shape(const Matrix& o) const {
    return rows() == o.rows() && cols() == o.cols();
  }

  /// Retags a Real matrix as Complex (no-op on Complex input).
  Matrix to_complex() const { return Matrix(Field::Complex, m_); }

 private:
  Field field_;
  Eigen::MatrixXcd m_;
};

/// Max-abs entrywise distance; shape mismatch is a precondition error.
double distance_max(const Matrix& a, const Matrix& b);

}  // namespace grasskit

#endif  // GRASSKIT_MATRIX_HPP
