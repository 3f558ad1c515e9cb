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

#ifndef GRASSKIT_TWO_PROJECTIONS_HPP
#define GRASSKIT_TWO_PROJECTIONS_HPP

#include <utility>
#include <vector>

#include "grasskit/grassmann.hpp"

namespace grasskit {

/// Joint canonical form of two rank-n projections. In the coordinates given
/// by the unitary W the pair is block diagonal:
///   columns [0, p)            : both projections act as the identity
///   2x2 blocks, r of them     : P = diag(1,0), Q = diag(0,1)
///   2x2 blocks, one per d_j   : P = diag(1,0), Q = T(d_j)
///   remaining columns         : both act as zero
struct CanonicalPair {
  Matrix w;
  Index p = 0;
  Index r = 0;
  std::vector<double> ds;  // descending, each strictly inside (0, 1)
  Index n = 0;
  Index d = 0;

  Index generic_count() const { return static_cast<Index>(ds.size()); }
  Field field() const { return w.field(); }
};

enum class Sign { Plus, Minus };

/// Closed-form operator norm of [[1/2, s/2], [s/2, alpha]] for s = +-1
/// on -1/2 <= alpha <= 1/2: (alpha + 1/2 + sqrt(alpha^2 - alpha + 5/4)) / 2.
/// The minimum 1/sqrt(2) is attained exactly at alpha = -1/2.
double norm_2x2(double alpha, Sign sign);

/// The explicit 2x2 matrix whose norm norm_2x2 computes; cross-check helper.
Matrix norm_2x2_matrix(double alpha, Sign sign);

/// Rank-one projection T(d) = [[d, s], [s, 1-d]] with s = sqrt(d(1-d)).
Matrix block_t(double d);

/// T(1) = diag(1, 0).
Matrix block_s();

/// Constructive two-projections decomposition; covers every gap regime
/// including gap 1 (the r block counts the norm-1 pairs).
CanonicalPair canonical_form(const Projection& p, const Projection& q,
                             const Tolerance& tol);

/// Inverse of canonical_form up to tolerance.
std::pair<Projection, Projection> assemble(const CanonicalPair& c,
                                           const Tolerance& tol);

/// Gap predicted by the canonical data: 1 when r > 0, else the largest
/// sqrt(1 - d_j), else 0.
double gap_from_canonical(const CanonicalPair& c);

/// Principal angles predicted by the canonical data, ascending.
std::vector<double> angles_from_canonical(const CanonicalPair& c);

}  // namespace grasskit

#endif  // GRASSKIT_TWO_PROJECTIONS_HPP
