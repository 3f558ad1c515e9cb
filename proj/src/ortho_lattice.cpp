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

#include "grasskit/ortho_lattice.hpp"

#include "grasskit/detail.hpp"

namespace grasskit {

namespace {

bool annihilates_both(const Projection& r, const Projection& p,
                      const Projection& q, const Tolerance& tol) {
  return op_norm(r.matrix() * p.matrix()) <= tol.eq_tol &&
         op_norm(r.matrix() * q.matrix()) <= tol.eq_tol;
}

// Shared classification core; K_eff is the carrier when the top-set has
// members, the zero subspace otherwise.
DoubleTopResult classify_against(const Subspace& k_eff, const Projection& r,
                                 const Tolerance& tol) {
  const Index d = r.dim();
  const Index n = r.rank();
  Subspace constrained = subspace_sum(k_eff, range_of(r, tol), tol);
  const Index m = d - constrained.subspace_dim();
  DoubleTopResult out;
  if (m < n) {
    out.kind = DoubleTopKind::Empty;
  } else if (m == n) {
    out.kind = DoubleTopKind::Unique;
    out.witness = Projection::from_subspace(subspace_complement(constrained));
  } else {
    out.kind = DoubleTopKind::Infinite;
  }
  return out;
}

Subspace effective_carrier(const Projection& p, const Projection& q,
                           const Tolerance& tol) {
  TopSetDescriptor tops = top_set({p, q}, p.rank(), p.dim(), tol);
  if (tops.nonempty) return tops.carrier;
  return Subspace::zero(promote(p.field(), q.field()), p.dim());
}

}  // namespace

TopSetDescriptor top_set(const std::vector<Projection>& a, Index n,
                         Index ambient_dim, const Tolerance& tol) {
  if (n < 1) throw_precondition("top set: rank must be >= 1");
  if (ambient_dim < 1) throw_precondition("top set: ambient dimension must be >= 1");
  Field field = Field::Real;
  for (const Projection& proj : a) {
    if (proj.dim() != ambient_dim) throw_precondition("top set: dimension mismatch");
    field = promote(field, proj.field());
  }
  Subspace sum = Subspace::zero(field, ambient_dim);
  for (const Projection& proj : a) {
    sum = subspace_sum(sum, range_of(proj, tol), tol);
  }
  TopSetDescriptor out{subspace_complement(sum), n, false};
  out.nonempty = out.carrier.subspace_dim() >= n;
  return out;
}

DoubleTopResult double_top_classify(const Projection& r, const Projection& p,
                                    const Projection& q, const Tolerance& tol) {
  if (r.dim() != p.dim() || r.dim() != q.dim()) {
    throw_precondition("double top classification: dimension mismatch");
  }
  if (r.rank() != p.rank() || r.rank() != q.rank()) {
    throw_precondition("double top classification: rank mismatch");
  }
  const Index n = r.rank();
  if (r.dim() < 2 * n + 1) {
    throw_precondition("double top classification requires dim >= 2n + 1");
  }
  if (annihilates_both(r, p, q, tol)) {
    throw_precondition("double top classification: R lies in {P,Q}^T");
  }
  return classify_against(effective_carrier(p, q, tol), r, tol);
}

AdjacencyTopsReport adjacency_by_tops(const Projection& p, const Projection& q,
                                      int samples, Rng& rng, const Tolerance& tol) {
  if (p.dim() != q.dim() || p.rank() != q.rank()) {
    throw_precondition("adjacency by tops: shape mismatch");
  }
  const Index d = p.dim();
  const Index n = p.rank();
  if (n < 2) throw_precondition("adjacency by tops requires n >= 2");
  if (d < 2 * n + 1) throw_precondition("adjacency by tops requires dim >= 2n + 1");
  if (distance_max(p.matrix(), q.matrix()) <= tol.eq_tol) {
    throw_precondition("adjacency by tops requires P != Q");
  }

  AdjacencyTopsReport report;
  Field field = promote(p.field(), q.field());
  Subspace joined = subspace_sum(range_of(p, tol), range_of(q, tol), tol);
  Subspace k_eff = effective_carrier(p, q, tol);

  auto record = [&](const DoubleTopResult& res) {
    switch (res.kind) {
      case DoubleTopKind::Empty: ++report.empty_count; break;
      case DoubleTopKind::Unique: ++report.unique_count; break;
      case DoubleTopKind::Infinite: ++report.infinite_count; break;
    }
  };

  // Deterministic counterexample: a rank-one piece inside Im P + Im Q plus a
  // rank-(n-1) piece inside the carrier whenever the join is too big for
  // adjacency. If the carrier cannot host it, the top-set is empty and any R
  // outside it is refuting.
  if (joined.subspace_dim() >= n + 2) {
    Subspace complement = subspace_complement(joined);
    std::optional<Projection> witness;
    if (complement.subspace_dim() >= n - 1) {
      Eigen::MatrixXcd basis(d, n);
      basis.col(0) = joined.basis().cmat().col(0);
      for (Index i = 0; i + 1 < n; ++i) {
        basis.col(i + 1) = complement.basis().cmat().col(i);
      }
      Matrix b(field, std::move(basis));
      witness = trusted_projection(b * b.adjoint(), n);
    } else {
      witness = p;  // the top-set is empty, so any choice refutes
    }
    report.witness_used = true;
    DoubleTopResult res = classify_against(k_eff, *witness, tol);
    record(res);
    report.witness_infinite = res.kind == DoubleTopKind::Infinite;
  }

  for (int i = 0; i < samples; ++i) {
    Projection r = random_projection(d, n, field, rng, tol);
    if (annihilates_both(r, p, q, tol)) continue;
    record(classify_against(k_eff, r, tol));
  }

  report.adjacent = report.infinite_count == 0;
  return report;
}

}  // namespace grasskit
