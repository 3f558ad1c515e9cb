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

#include "grasskit/matrix.hpp"

namespace grasskit {

namespace {

// Real-tagged values must carry exactly zero imaginary parts. Constructors
// scrub signed zeros so serialization stays canonical.
void enforce_real(Eigen::MatrixXcd& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (m(i, j).imag() != 0.0) {
        throw_invalid("Real-tagged matrix has a nonzero imaginary part");
      }
      m(i, j) = Complexd(m(i, j).real() + 0.0, 0.0);
    }
  }
}

}  // namespace

Matrix::Matrix(Field field, Eigen::MatrixXcd m) : field_(field), m_(std::move(m)) {
  if (field_ == Field::Real) enforce_real(m_);
}

Matrix Matrix::real(Eigen::MatrixXd m) {
  Eigen::MatrixXcd c = m.cast<Complexd>();
  return Matrix(Field::Real, std::move(c));
}

Eigen::MatrixXd Matrix::rmat() const {
  if (field_ != Field::Real) {
    throw_precondition("rmat() requires a Real-tagged matrix");
  }
  return m_.real();
}

Matrix Matrix::conjugate() const {
  if (field_ == Field::Real) return *this;
  return Matrix(field_, m_.conjugate());
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (!same_shape(o)) throw_precondition("matrix shape mismatch in +");
  return Matrix(promote(field_, o.field_), m_ + o.m_);
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (!same_shape(o)) throw_precondition("matrix shape mismatch in -");
  return Matrix(promote(field_, o.field_), m_ - o.m_);
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols() != o.rows()) throw_precondition("matrix shape mismatch in *");
  return Matrix(promote(field_, o.field_), m_ * o.m_);
}

bool Matrix::is_hermitian(double tol) const {
  if (rows() != cols()) return false;
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double distance_max(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw_precondition("matrix shape mismatch");
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  return (a.cmat() - b.cmat()).cwiseAbs().maxCoeff();
}

}  // namespace grasskit
