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

#ifndef GRASSKIT_ORTHO_LATTICE_HPP
#define GRASSKIT_ORTHO_LATTICE_HPP

#include <optional>
#include <vector>

#include "grasskit/grassmann.hpp"

namespace grasskit {

/// The top-set of a family A is the set of rank-n projections annihilating
/// every member; it is never enumerated, only represented by its carrier K:
/// a member is exactly a rank-n projection whose range lies inside K.
struct TopSetDescriptor {
  Subspace carrier;
  Index n = 0;
  bool nonempty = false;  // dim carrier >= n
};

enum class DoubleTopKind { Empty, Unique, Infinite };

struct DoubleTopResult {
  DoubleTopKind kind = DoubleTopKind::Empty;
  std::optional<Projection> witness;  // present exactly when Unique
};

/// The ambient dimension must be passed explicitly so the empty family gets
/// the full space as its carrier.
TopSetDescriptor top_set(const std::vector<Projection>& a, Index n,
                         Index ambient_dim, const Tolerance& tol);

/// Classifies ({R} union {P,Q}^T)^T by the dimension count
/// m = d - dim(K + Im R), K the carrier of {P,Q}^T (taken as {0} when the
/// top-set is empty): m < n gives Empty, m = n a unique member, m > n
/// infinitely many.
DoubleTopResult double_top_classify(const Projection& r, const Projection& p,
                                    const Projection& q, const Tolerance& tol);

struct AdjacencyTopsReport {
  bool adjacent = false;
  int empty_count = 0;
  int unique_count = 0;
  int infinite_count = 0;
  bool witness_used = false;      // the deterministic counterexample was built
  bool witness_infinite = false;  // and classified Infinite
};

/// Adjacency decision through double top-sets. Sampled ranges provide the
/// histogram; non-adjacent pairs are additionally refuted by the
/// deterministic block witness, so false verdicts never rest on sampling.
AdjacencyTopsReport adjacency_by_tops(const Projection& p, const Projection& q,
                                      int samples, Rng& rng, const Tolerance& tol);

}  // namespace grasskit

#endif  // GRASSKIT_ORTHO_LATTICE_HPP
