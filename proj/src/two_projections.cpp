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

#include "grasskit/two_projections.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "grasskit/detail.hpp"

namespace grasskit {

double norm_2x2(double alpha, Sign sign) {
  (void)sign;  // both signs are unitarily equivalent, the norm is the same
  if (alpha < -0.5 || alpha > 0.5) {
    throw_precondition("norm_2x2: alpha outside [-1/2, 1/2]");
  }
  return 0.5 * (alpha + 0.5 + std::sqrt(alpha * alpha - alpha + 1.25));
}

Matrix norm_2x2_matrix(double alpha, Sign sign) {
  double s = sign == Sign::Plus ? 0.5 : -0.5;
  Eigen::MatrixXd m(2, 2);
  m << 0.5, s, s, alpha;
  return Matrix::real(std::move(m));
}

Matrix block_t(double d) {
  if (d < 0.0 || d > 1.0) throw_precondition("block_t: d outside [0, 1]");
  double s = std::sqrt(d * (1.0 - d));
  Eigen::MatrixXd m(2, 2);
  m << d, s, s, 1.0 - d;
  return Matrix::real(std::move(m));
}

Matrix block_s() { return block_t(1.0); }

namespace {

// Modified Gram-Schmidt of a new column against the already emitted ones,
// two passes, then renormalization. Drift control for the partner vectors.
void append_orthonormal(Eigen::MatrixXcd& emitted, Index& count,
                        Eigen::VectorXcd column) {
  for (int pass = 0; pass < 2; ++pass) {
    for (Index j = 0; j < count; ++j) {
      column -= emitted.col(j) * (emitted.col(j).adjoint() * column)(0);
    }
  }
  double norm = column.norm();
  if (norm < 0.5) {
    throw_invalid("canonical form: emitted vectors became linearly dependent");
  }
  emitted.col(count++) = column / norm;
}

}  // namespace

CanonicalPair canonical_form(const Projection& p, const Projection& q,
                             const Tolerance& tol) {
  if (p.dim() != q.dim()) throw_precondition("canonical form: dimension mismatch");
  if (p.rank() != q.rank()) {
    throw_precondition("canonical form: this toolkit handles equal ranks only");
  }
  const Index d = p.dim();
  const Index n = p.rank();
  const Field field = promote(p.field(), q.field());

  CanonicalPair out;
  out.n = n;
  out.d = d;

  Eigen::MatrixXcd bp = range_of(p, tol).basis().cmat();
  Eigen::MatrixXcd bq = range_of(q, tol).basis().cmat();
  const Eigen::MatrixXcd& qm = q.matrix().cmat();
  const Eigen::MatrixXcd& pm = p.matrix().cmat();

  // Compression of Q onto Im P; its spectrum in [0, 1] drives the trichotomy.
  Matrix c(field, bp.adjoint() * qm * bp);
  std::vector<Eigen::VectorXcd> inter, gen_x, gen_y, pair_x;
  if (n > 0) {
    EigResult eig = herm_eig(c, tol);
    for (Index i = 0; i < n; ++i) {
      double lambda = eig.eigenvalues[i];
      Eigen::VectorXcd x = bp * eig.vectors.cmat().col(i);
      if (lambda >= 1.0 - tol.cluster_tol) {
        inter.push_back(std::move(x));
      } else if (lambda <= tol.cluster_tol) {
        pair_x.push_back(std::move(x));
      } else {
        double s = std::sqrt(lambda * (1.0 - lambda));
        Eigen::VectorXcd y = (qm * x - lambda * x) / s;
        out.ds.push_back(lambda);
        gen_x.push_back(std::move(x));
        gen_y.push_back(std::move(y));
      }
    }
  }
  out.p = static_cast<Index>(inter.size());
  out.r = static_cast<Index>(pair_x.size());

  // Partners of the norm-1 pairs live in Im Q and annihilate P; any pairing
  // gives the same block template.
  std::vector<Eigen::VectorXcd> pair_y;
  if (out.r > 0) {
    Matrix cq(field, bq.adjoint() * pm * bq);
    EigResult eig = herm_eig(cq, tol);
    for (Index i = 0; i < n; ++i) {
      if (eig.eigenvalues[i] <= tol.cluster_tol) {
        pair_y.push_back(bq * eig.vectors.cmat().col(i));
      }
    }
    if (static_cast<Index>(pair_y.size()) != out.r) {
      throw_invalid("canonical form: ambiguous eigenvalue clustering near 0");
    }
  }

  Eigen::MatrixXcd w(d, d);
  Index emitted = 0;
  for (auto& x : inter) append_orthonormal(w, emitted, std::move(x));
  for (Index i = 0; i < out.r; ++i) {
    append_orthonormal(w, emitted, std::move(pair_x[i]));
    append_orthonormal(w, emitted, std::move(pair_y[i]));
  }
  for (std::size_t j = 0; j < gen_x.size(); ++j) {
    append_orthonormal(w, emitted, std::move(gen_x[j]));
    append_orthonormal(w, emitted, std::move(gen_y[j]));
  }
  if (emitted < d) {
    Matrix head(field, Eigen::MatrixXcd(w.leftCols(emitted)));
    Eigen::MatrixXcd tail = orthonormal_complement_basis(head, d).cmat();
    w.rightCols(d - emitted) = tail;
  }
  out.w = Matrix(field, std::move(w));

  // The interior eigenvalues already arrive descending from herm_eig.
  auto [pr, qr] = assemble(out, tol);
  double residual = std::max(distance_max(pr.matrix(), p.matrix()),
                             distance_max(qr.matrix(), q.matrix()));
  if (residual > 10.0 * static_cast<double>(d) * tol.eq_tol) {
    throw_invalid("canonical form: reconstruction residual too large "
                  "(eigenvalues too close to the cluster thresholds)");
  }
  return out;
}

namespace {

void put_block(Eigen::MatrixXcd& m, Index at, const Matrix& block2) {
  m.block(at, at, 2, 2) = block2.cmat();
}

}  // namespace

std::pair<Projection, Projection> assemble(const CanonicalPair& c,
                                           const Tolerance& tol) {
  const Index g = c.generic_count();
  if (c.p < 0 || c.r < 0 || c.p + c.r + g != c.n) {
    throw_invalid("canonical pair: p + r + #ds must equal n");
  }
  if (c.p + 2 * c.r + 2 * g > c.d) {
    throw_invalid("canonical pair: blocks do not fit the ambient dimension");
  }
  if (c.w.rows() != c.d || c.w.cols() != c.d) {
    throw_invalid("canonical pair: W has the wrong shape");
  }
  Matrix eye = Matrix::identity(c.field(), c.d);
  if (distance_max(c.w.adjoint() * c.w, eye) >
      10.0 * static_cast<double>(c.d) * tol.eq_tol) {
    throw_invalid("canonical pair: W is not unitary");
  }
  for (std::size_t j = 0; j < c.ds.size(); ++j) {
    double dj = c.ds[j];
    if (dj <= tol.cluster_tol || dj >= 1.0 - tol.cluster_tol) {
      throw_invalid("canonical pair: d_j outside (cluster_tol, 1 - cluster_tol)");
    }
    if (j > 0 && c.ds[j] > c.ds[j - 1]) {
      throw_invalid("canonical pair: ds must be sorted descending");
    }
  }

  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(c.d, c.d);
  Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(c.d, c.d);
  for (Index i = 0; i < c.p; ++i) {
    e(i, i) = 1.0;
    f(i, i) = 1.0;
  }
  Matrix s = block_s();
  for (Index i = 0; i < c.r; ++i) {
    Index at = c.p + 2 * i;
    put_block(e, at, s);
    put_block(f, at, block_t(0.0));
  }
  for (Index j = 0; j < g; ++j) {
    Index at = c.p + 2 * c.r + 2 * j;
    put_block(e, at, s);
    put_block(f, at, block_t(c.ds[static_cast<std::size_t>(j)]));
  }

  const Eigen::MatrixXcd& w = c.w.cmat();
  Matrix pm(c.field(), w * e * w.adjoint());
  Matrix qm(c.field(), w * f * w.adjoint());
  return {Projection(pm, tol), Projection(qm, tol)};
}

double gap_from_canonical(const CanonicalPair& c) {
  if (c.r > 0) return 1.0;
  if (c.ds.empty()) return 0.0;
  return std::sqrt(1.0 - c.ds.back());
}

std::vector<double> angles_from_canonical(const CanonicalPair& c) {
  std::vector<double> out(static_cast<std::size_t>(c.p), 0.0);
  for (double dj : c.ds) out.push_back(std::acos(std::sqrt(dj)));
  out.insert(out.end(), static_cast<std::size_t>(c.r), std::numbers::pi / 2.0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace grasskit
