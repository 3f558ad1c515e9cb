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

#include "grasskit/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace grasskit {

namespace {

template <typename Mat>
std::vector<double> singular_values_of(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

}  // namespace

double op_norm(const Matrix& m) {
  if (m.empty()) throw_precondition("op_norm of an empty matrix");
  std::vector<double> s = m.field() == Field::Real
                              ? singular_values_of(Eigen::MatrixXd(m.rmat()))
                              : singular_values_of(m.cmat());
  return s.empty() ? 0.0 : s.front();
}

EigResult herm_eig(const Matrix& m, const Tolerance& tol) {
  if (m.empty()) throw_precondition("herm_eig of an empty matrix");
  if (m.rows() != m.cols()) throw_precondition("herm_eig needs a square matrix");
  if (!m.is_hermitian(tol.eq_tol)) {
    throw Error(Status::Precondition, "herm_eig input is not Hermitian within eq_tol");
  }

  EigResult out;
  const Index d = m.rows();
  if (m.field() == Field::Real) {
    Eigen::MatrixXd sym = m.rmat();
    sym = 0.5 * (sym + sym.transpose().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    Eigen::MatrixXd vecs(d, d);
    out.eigenvalues.resize(d);
    for (Index i = 0; i < d; ++i) {
      out.eigenvalues[i] = es.eigenvalues()(d - 1 - i);
      vecs.col(i) = es.eigenvectors().col(d - 1 - i);
    }
    out.vectors = Matrix::real(std::move(vecs));
  } else {
    Eigen::MatrixXcd herm = m.cmat();
    herm = 0.5 * (herm + herm.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
    Eigen::MatrixXcd vecs(d, d);
    out.eigenvalues.resize(d);
    for (Index i = 0; i < d; ++i) {
      out.eigenvalues[i] = es.eigenvalues()(d - 1 - i);
      vecs.col(i) = es.eigenvectors().col(d - 1 - i);
    }
    out.vectors = Matrix(Field::Complex, std::move(vecs));
  }
  return out;
}

SvdResult svd(const Matrix& m) {
  if (m.empty()) throw_precondition("svd of an empty matrix");
  SvdResult out;
  if (m.field() == Field::Real) {
    Eigen::JacobiSVD<Eigen::MatrixXd> dec(m.rmat(),
                                          Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = dec.singularValues();
    out.singular_values.assign(s.data(), s.data() + s.size());
    out.u = Matrix::real(dec.matrixU());
    out.v = Matrix::real(dec.matrixV());
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXcd> dec(m.cmat(),
                                           Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = dec.singularValues();
    out.singular_values.assign(s.data(), s.data() + s.size());
    out.u = Matrix(Field::Complex, dec.matrixU());
    out.v = Matrix(Field::Complex, dec.matrixV());
  }
  return out;
}

Index numerical_rank(const Matrix& m, const Tolerance& tol) {
  if (m.empty()) return 0;
  std::vector<double> s = m.field() == Field::Real
                              ? singular_values_of(Eigen::MatrixXd(m.rmat()))
                              : singular_values_of(m.cmat());
  if (s.empty()) return 0;
  double smax = s.front();
  double cutoff = smax < tol.rank_tol ? tol.rank_tol : tol.rank_tol * smax;
  Index rank = 0;
  for (double value : s) {
    if (value > cutoff) ++rank;
  }
  return rank;
}

Matrix haar_unitary(Index d, Field field, Rng& rng) {
  if (d < 1) throw_precondition("haar_unitary needs d >= 1");
  if (field == Field::Real) {
    Eigen::MatrixXd g(d, d);
    for (Index j = 0; j < d; ++j)
      for (Index i = 0; i < d; ++i) g(i, j) = rng.gaussian();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < d; ++j) {
      if (r(j, j) < 0.0) q.col(j) = -q.col(j);
    }
    return Matrix::real(std::move(q));
  }
  Eigen::MatrixXcd g(d, d);
  for (Index j = 0; j < d; ++j)
    for (Index i = 0; i < d; ++i) g(i, j) = rng.gaussian_complex();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < d; ++j) {
    Complexd diag = r(j, j);
    double mag = std::abs(diag);
    Complexd phase = mag > 0.0 ? diag / mag : Complexd(1.0, 0.0);
    q.col(j) *= phase;
  }
  return Matrix(Field::Complex, std::move(q));
}

Matrix orthonormal_range_basis(const Matrix& m, const Tolerance& tol) {
  if (m.rows() == 0) throw_precondition("range basis of a matrix with no rows");
  if (m.cols() == 0) return Matrix::zero(m.field(), m.rows(), 0);
  SvdResult dec = svd(m);
  double smax = dec.singular_values.empty() ? 0.0 : dec.singular_values.front();
  double cutoff = smax < tol.rank_tol ? tol.rank_tol : tol.rank_tol * smax;
  Index rank = 0;
  for (double s : dec.singular_values) {
    if (s > cutoff) ++rank;
  }
  return dec.u.block(0, 0, m.rows(), rank);
}

Matrix orthonormal_complement_basis(const Matrix& basis, Index ambient_dim) {
  const Index k = basis.cols();
  if (basis.rows() != ambient_dim) {
    throw_precondition("complement basis: ambient dimension mismatch");
  }
  if (k == 0) return Matrix::identity(basis.field(), ambient_dim);
  if (k >= ambient_dim) return Matrix::zero(basis.field(), ambient_dim, 0);
  // Full SVD of the basis: the trailing left singular vectors span the kernel
  // of basis^*.
  if (basis.field() == Field::Real) {
    Eigen::JacobiSVD<Eigen::MatrixXd> dec(basis.rmat(), Eigen::ComputeFullU);
    Eigen::MatrixXd tail = dec.matrixU().rightCols(ambient_dim - k);
    return Matrix::real(std::move(tail));
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> dec(basis.cmat(), Eigen::ComputeFullU);
  Eigen::MatrixXcd tail = dec.matrixU().rightCols(ambient_dim - k);
  return Matrix(Field::Complex, std::move(tail));
}

}  // namespace grasskit
