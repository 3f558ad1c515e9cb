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

#include "grasskit/mpq.hpp"

#include <cmath>
#include <numbers>

#include "grasskit/detail.hpp"

namespace grasskit {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

// Joint coordinates for the gap-1 structure: X spans Im P inside the norm-1
// blocks, Y the matching part of Im Q, H3 the reducing remainder. Orthogonal
// pairs use the plain (Im P, Im Q) bases so that extracted parameters agree
// with mpq_construct_orthogonal; everything else comes from canonical_form.
struct MpqCoords {
  Index r = 0;
  Matrix x, y, h3;
  Index n = 0, d = 0;
  Field field = Field::Real;
};

MpqCoords build_coords(const Projection& p, const Projection& q,
                       const Tolerance& tol) {
  MpqCoords out;
  out.n = p.rank();
  out.d = p.dim();
  out.field = promote(p.field(), q.field());
  if (out.n > 0 && are_orthogonal(p, q, tol)) {
    out.r = out.n;
    out.x = range_of(p, tol).basis();
    out.y = range_of(q, tol).basis();
    Eigen::MatrixXcd span(out.d, 2 * out.n);
    span << out.x.cmat(), out.y.cmat();
    out.h3 = orthonormal_complement_basis(Matrix(out.field, std::move(span)), out.d);
    if (out.field == Field::Complex) {
      out.x = out.x.to_complex();
      out.y = out.y.to_complex();
    }
    return out;
  }
  CanonicalPair c = canonical_form(p, q, tol);
  out.r = c.r;
  const Eigen::MatrixXcd& w = c.w.cmat();
  Eigen::MatrixXcd x(out.d, c.r), y(out.d, c.r);
  for (Index i = 0; i < c.r; ++i) {
    x.col(i) = w.col(c.p + 2 * i);
    y.col(i) = w.col(c.p + 2 * i + 1);
  }
  const Index h3_dim = out.d - 2 * c.r;
  Eigen::MatrixXcd h3(out.d, h3_dim);
  Index at = 0;
  for (Index i = 0; i < c.p; ++i) h3.col(at++) = w.col(i);
  for (Index j = 2 * c.r + c.p; j < out.d; ++j) h3.col(at++) = w.col(j);
  out.x = Matrix(out.field, std::move(x));
  out.y = Matrix(out.field, std::move(y));
  out.h3 = Matrix(out.field, std::move(h3));
  return out;
}

void require_compatible(const Projection& a, const Projection& b,
                        const char* what) {
  if (a.dim() != b.dim()) {
    throw_precondition(std::string(what) + ": dimension mismatch");
  }
  if (a.rank() != b.rank()) {
    throw_precondition(std::string(what) + ": rank mismatch");
  }
}

Matrix random_hermitian_direction(Index d, Field field, Rng& rng) {
  Eigen::MatrixXcd g(d, d);
  for (Index j = 0; j < d; ++j) {
    for (Index i = 0; i < d; ++i) {
      g(i, j) = field == Field::Real ? Complexd(rng.gaussian(), 0.0)
                                     : rng.gaussian_complex();
    }
  }
  Eigen::MatrixXcd h = 0.5 * (g + g.adjoint().eval());
  Matrix out(field, std::move(h));
  double norm = op_norm(out);
  return norm > 0.0 ? out.scaled(1.0 / norm) : out;
}

}  // namespace

bool mpq_contains(const Projection& r, const Projection& p, const Projection& q,
                  const Tolerance& tol) {
  require_compatible(r, p, "mpq membership");
  require_compatible(r, q, "mpq membership");
  return gap(r, p) <= kInvSqrt2 + tol.eq_tol && gap(r, q) <= kInvSqrt2 + tol.eq_tol;
}

MpqElement mpq_construct_orthogonal(const Projection& p, const Projection& q,
                                    const Matrix& u, const Tolerance& tol) {
  require_compatible(p, q, "mpq orthogonal construction");
  const Index n = p.rank();
  if (n == 0) throw_precondition("mpq orthogonal construction: rank must be >= 1");
  if (!are_orthogonal(p, q, tol)) {
    throw_precondition("mpq orthogonal construction requires PQ = 0");
  }
  if (u.rows() != n || u.cols() != n) {
    throw_precondition("mpq orthogonal construction: U must be n x n");
  }
  Matrix uu = u.adjoint() * u;
  if (distance_max(uu, Matrix::identity(u.field(), n)) >
      10.0 * static_cast<double>(n) * tol.eq_tol) {
    throw_precondition("mpq orthogonal construction: U is not unitary");
  }
  Field field = promote(promote(p.field(), q.field()), u.field());
  Eigen::MatrixXcd x = range_of(p, tol).basis().cmat();
  Eigen::MatrixXcd y = range_of(q, tol).basis().cmat();
  const Eigen::MatrixXcd& um = u.cmat();
  Eigen::MatrixXcd rm = 0.5 * (x * x.adjoint() + x * um * y.adjoint() +
                               y * um.adjoint() * x.adjoint() + y * y.adjoint());
  MpqElement out{Projection(Matrix(field, std::move(rm)), tol), u, std::nullopt};
  return out;
}

MpqElement mpq_sample(const Projection& p, const Projection& q, Rng& rng,
                      const Tolerance& tol) {
  require_compatible(p, q, "mpq sample");
  const Index n = p.rank();
  const Index d = p.dim();
  MpqCoords coords = build_coords(p, q, tol);

  Matrix u = coords.r > 0 ? haar_unitary(coords.r, coords.field, rng)
                          : Matrix::zero(coords.field, 0, 0);

  Eigen::MatrixXcd rm = Eigen::MatrixXcd::Zero(d, d);
  if (coords.r > 0) {
    const Eigen::MatrixXcd& x = coords.x.cmat();
    const Eigen::MatrixXcd& y = coords.y.cmat();
    const Eigen::MatrixXcd& um = u.cmat();
    rm += 0.5 * (x * x.adjoint() + x * um * y.adjoint() +
                 y * um.adjoint() * x.adjoint() + y * y.adjoint());
  }
  if (coords.r < n) {
    // The rest of the member lives on H3: copy the common block, put the
    // equidistant midpoint T((1 + sqrt(d_j))/2) on every generic block.
    CanonicalPair c = canonical_form(p, q, tol);
    const Eigen::MatrixXcd& w = c.w.cmat();
    for (Index i = 0; i < c.p; ++i) {
      rm += w.col(i) * w.col(i).adjoint();
    }
    for (Index j = 0; j < c.generic_count(); ++j) {
      Index at = c.p + 2 * c.r + 2 * j;
      Eigen::MatrixXcd pair(d, 2);
      pair << w.col(at), w.col(at + 1);
      double mid = 0.5 * (1.0 + std::sqrt(c.ds[static_cast<std::size_t>(j)]));
      rm += pair * block_t(mid).cmat() * pair.adjoint();
    }
  }
  Projection r(Matrix(coords.field, std::move(rm)), tol);
  if (!mpq_contains(r, p, q, tol)) {
    throw Error(Status::Internal, "mpq sample failed its own membership check");
  }
  std::optional<Projection> residual;
  if (coords.r < n) {
    Matrix r1(coords.field,
              coords.h3.cmat().adjoint() * r.matrix().cmat() * coords.h3.cmat());
    residual.emplace(r1, tol);
  }
  return MpqElement{std::move(r), std::move(u), std::move(residual)};
}

MpqElement mpq_extract(const Projection& r, const Projection& p,
                       const Projection& q, const Tolerance& tol) {
  require_compatible(r, p, "mpq extraction");
  require_compatible(r, q, "mpq extraction");
  if (gap(p, q) < 1.0 - tol.eq_tol) {
    throw_precondition("mpq extraction requires a pair at gap 1");
  }
  if (!mpq_contains(r, p, q, tol)) {
    throw_precondition("mpq extraction: R is not a member of M(P,Q)");
  }
  const Index n = p.rank();
  const Index d = p.dim();
  MpqCoords coords = build_coords(p, q, tol);
  const Eigen::MatrixXcd& x = coords.x.cmat();
  const Eigen::MatrixXcd& y = coords.y.cmat();
  const Eigen::MatrixXcd& h3 = coords.h3.cmat();
  const Eigen::MatrixXcd& rm = r.matrix().cmat();

  const double threshold = 100.0 * static_cast<double>(d) * tol.eq_tol;
  Matrix eye_r = Matrix::identity(coords.field, coords.r);
  Matrix a11(coords.field, x.adjoint() * rm * x);
  Matrix a22(coords.field, y.adjoint() * rm * y);
  Matrix u(coords.field, 2.0 * (x.adjoint() * rm * y));

  double residual = 0.0;
  residual = std::max(residual, distance_max(a11, eye_r.scaled(0.5)));
  residual = std::max(residual, distance_max(a22, eye_r.scaled(0.5)));
  residual = std::max(residual, distance_max(u.adjoint() * u, eye_r));
  residual = std::max(residual, distance_max(u * u.adjoint(), eye_r));
  if (coords.h3.cols() > 0) {
    residual = std::max(residual, Matrix(coords.field, x.adjoint() * rm * h3).max_abs());
    residual = std::max(residual, Matrix(coords.field, y.adjoint() * rm * h3).max_abs());
  }
  if (residual > threshold) {
    throw_classification(
        "mpq extraction: member does not have the (1/2)[[I,U],[U*,I]] structure");
  }

  std::optional<Projection> r1;
  if (coords.r < n) {
    Tolerance relaxed = tol;
    relaxed.eq_tol = std::min(std::max(threshold, tol.eq_tol), 1e-3);
    relaxed.cluster_tol = std::min(std::max(threshold, tol.cluster_tol), 1e-3);
    Matrix r1m(coords.field, h3.adjoint() * rm * h3);
    std::optional<Projection> candidate;
    try {
      candidate.emplace(r1m, relaxed);
    } catch (const Error&) {
      throw_classification("mpq extraction: residual block is not a projection");
    }
    if (candidate->rank() != n - coords.r) {
      throw_classification("mpq extraction: residual block has the wrong rank");
    }
    Matrix p1(coords.field, h3.adjoint() * p.matrix().cmat() * h3);
    Matrix q1(coords.field, h3.adjoint() * q.matrix().cmat() * h3);
    if (op_norm(r1m - p1) > kInvSqrt2 + threshold ||
        op_norm(r1m - q1) > kInvSqrt2 + threshold) {
      throw_classification("mpq extraction: residual block leaves M(P1,Q1)");
    }
    r1 = std::move(candidate);
  }
  return MpqElement{r, std::move(u), std::move(r1)};
}

MpqWitness mpq_witness_boundary(double d) {
  if (d < 0.0 || d > 1.0) throw_precondition("mpq boundary witness: d outside [0, 1]");
  MpqWitness out;
  out.r = block_t(0.5);
  out.gap_s = op_norm(block_s() - out.r);
  out.gap_t = op_norm(block_t(d) - out.r);
  out.in_regime = true;
  return out;
}

MpqWitness mpq_witness_outside(double d, double eps) {
  if (d < 0.0 || d >= 1.0) throw_precondition("mpq outside witness: d outside [0, 1)");
  if (eps <= 0.0 || eps > 0.5) {
    throw_precondition("mpq outside witness: eps must lie in (0, 1/2]");
  }
  MpqWitness out;
  out.r = block_t(0.5 - eps);
  out.gap_s = op_norm(block_s() - out.r);
  out.gap_t = op_norm(block_t(d) - out.r);
  out.in_regime = out.gap_s > kInvSqrt2 && out.gap_t < kInvSqrt2;
  return out;
}

double mpq_outside_eps(double d) {
  for (double eps = 0.25; eps > 1e-13; eps *= 0.5) {
    if (mpq_witness_outside(d, eps).in_regime) return eps;
  }
  throw_classification("mpq outside witness: no feasible eps found");
}

double mpq_outside_threshold(double d) {
  double lo = mpq_outside_eps(d);
  double hi = 0.5;
  if (mpq_witness_outside(d, hi).in_regime) return hi;
  for (int iter = 0; iter < 60; ++iter) {
    double mid = 0.5 * (lo + hi);
    (mpq_witness_outside(d, mid).in_regime ? lo : hi) = mid;
  }
  return lo;
}

std::optional<Projection> mpq_member_search(const Projection& p,
                                            const Projection& q, Rng& rng,
                                            const Tolerance& tol, int tries) {
  const Index n = p.rank();
  if (n == 0) return std::nullopt;
  const double scales[] = {1e-2, 1e-3, 1e-4, 1e-6, tol.eq_tol / 4.0};
  for (int t = 0; t < tries; ++t) {
    Projection base = mpq_sample(p, q, rng, tol).r;
    Matrix h = random_hermitian_direction(p.dim(), base.field(), rng);
    for (double eps : scales) {
      Matrix perturbed = base.matrix() + h.scaled(eps);
      Projection candidate = nearest_projection(perturbed, n, tol);
      if (mpq_contains(candidate, p, q, tol)) return candidate;
    }
  }
  return std::nullopt;
}

}  // namespace grasskit
