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

#ifndef GRASSKIT_LINALG_HPP
#define GRASSKIT_LINALG_HPP

#include <vector>

#include "grasskit/matrix.hpp"
#include "grasskit/rng.hpp"
#include "grasskit/tolerance.hpp"

namespace grasskit {

struct EigResult {
  std::vector<double> eigenvalues;  // descending
  Matrix vectors;                   // orthonormal columns, same order
};

struct SvdResult {
  Matrix u;
  std::vector<double> singular_values;  // descending, >= 0
  Matrix v;                             // M ~= u * diag(s) * v^*
};

/// Largest singular value.
double op_norm(const Matrix& m);

/// Eigendecomposition of a Hermitian (symmetric) matrix; eigenvalues
/// descending. Rejects inputs that are not Hermitian within tol.eq_tol.
EigResult herm_eig(const Matrix& m, const Tolerance& tol);

/// Thin singular value decomposition.
SvdResult svd(const Matrix& m);

/// Number of singular values above rank_tol * sigma_max, with an absolute
/// cutoff of rank_tol once sigma_max itself drops below rank_tol.
Index numerical_rank(const Matrix& m, const Tolerance& tol);

/// Haar-distributed unitary (orthogonal) d x d matrix: QR of a standard
/// Gaussian matrix with the R diagonal phase-normalized to be positive.
Matrix haar_unitary(Index d, Field field, Rng& rng);

/// Orthonormal basis of the column space of m, found by a rank-revealing SVD.
/// May have zero columns.
Matrix orthonormal_range_basis(const Matrix& m, const Tolerance& tol);

/// Orthonormal basis of the orthogonal complement of the column space of an
/// already-orthonormal basis (d x k -> d x (d-k)).
Matrix orthonormal_complement_basis(const Matrix& basis, Index ambient_dim);

}  // namespace grasskit

#endif  // GRASSKIT_LINALG_HPP
