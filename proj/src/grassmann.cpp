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

#include "grasskit/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace grasskit {

// Internal constructors that skip validation for values built from verified
// orthonormal data.
Subspace trusted_subspace(Matrix basis) {
  return Subspace(std::move(basis), Subspace::Trusted{});
}
Projection trusted_projection(Matrix m, Index rank) {
  return Projection(std::move(m), rank, Projection::Trusted{});
}

Subspace::Subspace(Matrix basis, const Tolerance& tol) : basis_(std::move(basis)) {
  tol.validate();
  if (basis_.rows() < basis_.cols()) {
    throw_invalid("subspace dimension exceeds ambient dimension");
  }
  if (basis_.cols() > 0) {
    Matrix gram = basis_.adjoint() * basis_;
    Matrix eye = Matrix::identity(basis_.field(), basis_.cols());
    if (distance_max(gram, eye) > tol.eq_tol) {
      throw_invalid("subspace basis is not orthonormal within eq_tol");
    }
  }
}

Subspace Subspace::zero(Field field, Index ambient_dim) {
  return trusted_subspace(Matrix::zero(field, ambient_dim, 0));
}

Subspace Subspace::full(Field field, Index ambient_dim) {
  return trusted_subspace(Matrix::identity(field, ambient_dim));
}

Projection::Projection(Matrix m, const Tolerance& tol) : mat_(std::move(m)) {
  tol.validate();
  if (mat_.rows() != mat_.cols() || mat_.empty()) {
    throw_invalid("projection matrix must be square and nonempty");
  }
  if (!mat_.is_hermitian(tol.eq_tol)) {
    throw_invalid("projection matrix is not Hermitian within eq_tol");
  }
  if (distance_max(mat_ * mat_, mat_) > 10.0 * tol.eq_tol) {
    throw_invalid("projection matrix is not idempotent within eq_tol");
  }
  EigResult eig = herm_eig(mat_, tol);
  Index ones = 0;
  for (double lambda : eig.eigenvalues) {
    if (std::abs(lambda - 1.0) <= tol.cluster_tol) {
      ++ones;
    } else if (std::abs(lambda) > tol.cluster_tol) {
      throw_invalid("projection spectrum does not cluster on {0, 1}");
    }
  }
  rank_ = ones;
  double tr = mat_.trace().real();
  if (std::abs(tr - static_cast<double>(rank_)) > 10.0 * mat_.rows() * tol.eq_tol) {
    throw_invalid("projection trace is not consistent with its rank");
  }
}

Projection Projection::from_subspace(const Subspace& s) {
  Matrix b = s.basis();
  if (b.cols() == 0) {
    throw_precondition("cannot form the zero-rank projection from an empty basis;"
                       " rank-n spaces require n >= 1");
  }
  return trusted_projection(b * b.adjoint(), b.cols());
}

Projection Projection::complement() const {
  Matrix eye = Matrix::identity(mat_.field(), mat_.rows());
  return trusted_projection(eye - mat_, mat_.rows() - rank_);
}

Projection Projection::conjugated() const {
  return trusted_projection(mat_.conjugate(), rank_);
}

Subspace range_of(const Projection& p, const Tolerance& tol) {
  EigResult eig = herm_eig(p.matrix(), tol);
  const Index d = p.dim();
  Index ones = 0;
  for (double lambda : eig.eigenvalues) {
    if (std::abs(lambda - 1.0) <= tol.cluster_tol) {
      ++ones;
    } else if (std::abs(lambda) > tol.cluster_tol) {
      throw_invalid("eigenvalue does not cluster near {0, 1}");
    }
  }
  // Descending order puts the eigenvalue-1 cluster first.
  return trusted_subspace(eig.vectors.block(0, 0, d, ones));
}

double gap(const Projection& p, const Projection& q) {
  if (p.dim() != q.dim()) throw_precondition("gap: dimension mismatch");
  double value = op_norm(p.matrix() - q.matrix());
  return std::clamp(value, 0.0, 1.0);
}

PrincipalAngles principal_angles(const Projection& p, const Projection& q,
                                 const Tolerance& tol) {
  if (p.dim() != q.dim()) throw_precondition("principal angles: dimension mismatch");
  if (p.rank() != q.rank()) {
    throw_precondition("principal angles are defined here for equal ranks only");
  }
  PrincipalAngles out;
  if (p.rank() == 0) return out;
  Matrix bp = range_of(p, tol).basis();
  Matrix bq = range_of(q, tol).basis();
  SvdResult cross = svd(bp.adjoint() * bq);
  out.angles.reserve(cross.singular_values.size());
  for (double s : cross.singular_values) {
    double c = std::clamp(s, 0.0, 1.0);
    out.angles.push_back(std::acos(c));
  }
  // Cosines come out descending, so the angles are already ascending.
  std::sort(out.angles.begin(), out.angles.end());
  for (double& a : out.angles) a = std::clamp(a, 0.0, std::numbers::pi / 2.0);
  return out;
}

bool are_orthogonal(const Projection& p, const Projection& q, const Tolerance& tol) {
  if (p.dim() != q.dim()) throw_precondition("orthogonality: dimension mismatch");
  return op_norm(p.matrix() * q.matrix()) <= tol.eq_tol;
}

bool are_adjacent(const Projection& p, const Projection& q, const Tolerance& tol) {
  if (p.dim() != q.dim()) throw_precondition("adjacency: dimension mismatch");
  if (p.rank() != q.rank()) throw_precondition("adjacency: rank mismatch");
  return numerical_rank(p.matrix() - q.matrix(), tol) == 2;
}

bool are_complementary(const Projection& p, const Projection& q, const Tolerance& tol) {
  if (p.dim() != q.dim()) throw_precondition("complementarity: dimension mismatch");
  if (p.rank() != q.rank() || p.dim() != 2 * p.rank()) {
    throw_precondition("complementarity requires equal ranks n with dim = 2n");
  }
  return gap(p.complement(), q) < 1.0 - tol.eq_tol;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw_precondition("subspace sum: ambient dimension mismatch");
  }
  const Index d = a.ambient_dim();
  Field field = promote(a.field(), b.field());
  Eigen::MatrixXcd stacked(d, a.subspace_dim() + b.subspace_dim());
  stacked << a.basis().cmat(), b.basis().cmat();
  Matrix joined(field, std::move(stacked));
  if (joined.cols() == 0) return Subspace::zero(field, d);
  return trusted_subspace(orthonormal_range_basis(joined, tol));
}

Subspace subspace_complement(const Subspace& s) {
  return trusted_subspace(
      orthonormal_complement_basis(s.basis(), s.ambient_dim()));
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b,
                               const Tolerance& tol) {
  // De Morgan: meet = complement of the join of complements.
  Subspace sum = subspace_sum(subspace_complement(a), subspace_complement(b), tol);
  return subspace_complement(sum);
}

Projection nearest_projection(const Matrix& hermitian, Index n, const Tolerance& tol) {
  if (n < 1 || n > hermitian.rows()) {
    throw_precondition("nearest projection: rank out of range");
  }
  EigResult eig = herm_eig(hermitian, tol);
  Matrix top = eig.vectors.block(0, 0, hermitian.rows(), n);
  return trusted_projection(top * top.adjoint(), n);
}

Projection random_projection(Index d, Index n, Field field, Rng& rng,
                             const Tolerance& tol) {
  if (n < 1 || n > d) throw_precondition("random projection: rank out of range");
  (void)tol;
  Matrix u = haar_unitary(d, field, rng);
  Matrix b = u.block(0, 0, d, n);
  return trusted_projection(b * b.adjoint(), n);
}

}  // namespace grasskit
