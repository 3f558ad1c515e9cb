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

#ifndef GRASSKIT_MPQ_HPP
#define GRASSKIT_MPQ_HPP

#include <optional>

#include "grasskit/two_projections.hpp"

namespace grasskit {

/// A member R of M(P,Q) = { R : ||R-P|| <= 1/sqrt(2) and ||R-Q|| <= 1/sqrt(2) }
/// together with its extracted parameters: the r x r unitary U off-diagonal
/// block and, when r < n, the residual rank-(n-r) projection expressed in the
/// canonical residual coordinates.
struct MpqElement {
  Projection r;
  Matrix u;                          // r x r; 0 x 0 when the pair has gap < 1
  std::optional<Projection> residual;  // absent when r = n
};

/// Gap values of a 2x2 witness against S = diag(1,0) and T(d); gaps are
/// computed by op_norm, never by the closed forms they are tested against.
struct MpqWitness {
  Matrix r;
  double gap_s = 0.0;
  double gap_t = 0.0;
  bool in_regime = true;  // outside witness only: gap_s > 1/sqrt(2) > gap_t
};

bool mpq_contains(const Projection& r, const Projection& p, const Projection& q,
                  const Tolerance& tol);

/// For orthogonal P, Q and unitary U: the member (1/2)[[I, U], [U*, I]] on
/// Im P + Im Q (zero elsewhere). Both gaps are exactly 1/sqrt(2).
MpqElement mpq_construct_orthogonal(const Projection& p, const Projection& q,
                                    const Matrix& u, const Tolerance& tol);

/// A member for an arbitrary equal-rank pair, built on the canonical blocks:
/// the common part is copied, each norm-1 block receives the Haar-unitary
/// midpoint, each generic block receives T((1 + sqrt(d_j))/2).
MpqElement mpq_sample(const Projection& p, const Projection& q, Rng& rng,
                      const Tolerance& tol);

/// Parameter extraction for a member of M(P,Q) when ||P-Q|| = 1. Fails loudly
/// (classification error) when the member does not have the block structure,
/// since that would falsify the structure theorem rather than a tolerance.
MpqElement mpq_extract(const Projection& r, const Projection& p,
                       const Projection& q, const Tolerance& tol);

/// T(1/2) against S and T(d): the boundary identities.
MpqWitness mpq_witness_boundary(double d);

/// T(1/2 - eps) against S and T(d): just outside the boundary. gap_s exceeds
/// 1/sqrt(2) for every eps > 0; gap_t stays below only for eps under a
/// d-dependent threshold, reported through in_regime.
MpqWitness mpq_witness_outside(double d, double eps);

/// Some eps > 0 realizing the outside witness for the given d (halving
/// search).
double mpq_outside_eps(double d);

/// Empirical supremum of feasible eps for the given d (bisection on the
/// numerically evaluated gaps).
double mpq_outside_threshold(double d);

/// Independent membership search: spectral rounding of a perturbed member,
/// rejection-sampled on the two gap constraints. Used to probe that every
/// found member has the structure mpq_extract expects.
std::optional<Projection> mpq_member_search(const Projection& p,
                                            const Projection& q, Rng& rng,
                                            const Tolerance& tol, int tries);

}  // namespace grasskit

#endif  // GRASSKIT_MPQ_HPP
