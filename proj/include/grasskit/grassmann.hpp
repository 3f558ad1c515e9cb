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

#ifndef GRASSKIT_GRASSMANN_HPP
#define GRASSKIT_GRASSMANN_HPP

#include <vector>

#include "grasskit/linalg.hpp"
#include "grasskit/matrix.hpp"
#include "grasskit/tolerance.hpp"

namespace grasskit {

/// A linear subspace given by an orthonormal basis (ambient d, dimension k).
class Subspace {
 public:
  Subspace(Matrix basis, const Tolerance& tol);

  static Subspace zero(Field field, Index ambient_dim);
  static Subspace full(Field field, Index ambient_dim);

  Index ambient_dim() const { return basis_.rows(); }
  Index subspace_dim() const { return basis_.cols(); }
  Field field() const { return basis_.field(); }
  const Matrix& basis() const { return basis_; }

 private:
  struct Trusted {};
  Subspace(Matrix basis, Trusted) : basis_(std::move(basis)) {}
  Matrix basis_;

  friend Subspace trusted_subspace(Matrix basis);
};

/// Rank-n orthogonal projection on a d-dimensional space: Hermitian,
/// idempotent, spectrum clustered on {0, 1}.
class Projection {
 public:
  Projection(Matrix m, const Tolerance& tol);

  static Projection from_subspace(const Subspace& s);

  Index dim() const { return mat_.rows(); }
  Index rank() const { return rank_; }
  Field field() const { return mat_.field(); }
  const Matrix& matrix() const { return mat_; }

  /// I - P.
  Projection complement() const;
  /// Entrywise conjugate (a no-op on Real-tagged projections).
  Projection conjugated() const;

 private:
  struct Trusted {};
  Projection(Matrix m, Index rank, Trusted) : rank_(rank), mat_(std::move(m)) {}
  Index rank_;
  Matrix mat_;

  friend Projection trusted_projection(Matrix m, Index rank);
};

struct PrincipalAngles {
  std::vector<double> angles;  // ascending, in [0, pi/2]
  double largest() const { return angles.empty() ? 0.0 : angles.back(); }
};

/// Orthonormal basis of the range (eigenvalue-1 eigenspace).
Subspace range_of(const Projection& p, const Tolerance& tol);

/// Gap metric: operator-norm distance, clamped into [0, 1].
double gap(const Projection& p, const Projection& q);

/// Principal angles between two equal-rank ranges via the singular values of
/// the basis cross-Gram matrix. Small angles are accurate only to about
/// sqrt(eq_tol); the toolkit mostly needs the largest angle.
PrincipalAngles principal_angles(const Projection& p, const Projection& q,
                                 const Tolerance& tol);

bool are_orthogonal(const Projection& p, const Projection& q, const Tolerance& tol);

/// Adjacency: P != Q and rank(P - Q) = 2, equivalently the ranges meet in
/// dimension n - 1.
bool are_adjacent(const Projection& p, const Projection& q, const Tolerance& tol);

/// Complementarity at dim = 2n: Im P + Im Q is the whole space, decided by
/// ||(I-P) - Q|| < 1.
bool are_complementary(const Projection& p, const Projection& q, const Tolerance& tol);

Subspace subspace_sum(const Subspace& a, const Subspace& b, const Tolerance& tol);
Subspace subspace_intersection(const Subspace& a, const Subspace& b, const Tolerance& tol);
Subspace subspace_complement(const Subspace& s);

/// Spectral rounding: the rank-n projection whose range is spanned by the top
/// n eigenvectors of a Hermitian matrix.
Projection nearest_projection(const Matrix& hermitian, Index n, const Tolerance& tol);

/// Haar-random rank-n range.
Projection random_projection(Index d, Index n, Field field, Rng& rng, const Tolerance& tol);

}  // namespace grasskit

#endif  // GRASSKIT_GRASSMANN_HPP
