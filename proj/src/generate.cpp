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

#include "grasskit/generate.hpp"

#include <algorithm>

namespace grasskit {

namespace {

std::vector<double> draw_interior(Index count, Rng& rng) {
  // Kept well inside (0, 1) so the canonical trichotomy is unambiguous.
  std::vector<double> ds(static_cast<std::size_t>(count));
  for (double& d : ds) d = 0.03 + 0.92 * rng.uniform01();
  std::sort(ds.begin(), ds.end(), std::greater<double>());
  return ds;
}

}  // namespace

std::pair<Projection, Projection> generate_pair(Index d, Index n, Field field,
                                                PairRegime regime, Rng& rng,
                                                const Tolerance& tol,
                                                PairGroundTruth* truth) {
  if (n < 1 || n >= d) {
    throw_precondition("pair generation requires 1 <= n < d");
  }
  CanonicalPair c;
  c.n = n;
  c.d = d;
  switch (regime) {
    case PairRegime::Lt1: {
      Index g = std::min(n, d - n);
      c.p = n - g;
      c.r = 0;
      c.ds = draw_interior(g, rng);
      break;
    }
    case PairRegime::Eq1: {
      // One norm-1 block plus generic blocks where the dimension allows;
      // non-orthogonal whenever n >= 2.
      if (d < n + 1) throw_precondition("gap-1 pair needs d >= n + 1");
      c.r = 1;
      Index g = std::min(n - 1, d - n - 1);
      c.p = n - 1 - g;
      c.ds = draw_interior(g, rng);
      break;
    }
    case PairRegime::Orthogonal: {
      if (d < 2 * n) throw_precondition("orthogonal pair needs d >= 2n");
      c.r = n;
      c.p = 0;
      break;
    }
    case PairRegime::Adjacent: {
      if (d < n + 1) throw_precondition("adjacent pair needs d >= n + 1");
      c.p = n - 1;
      c.r = 0;
      c.ds = draw_interior(1, rng);
      break;
    }
  }
  c.w = haar_unitary(d, field, rng);
  if (truth != nullptr) {
    truth->p = c.p;
    truth->r = c.r;
    truth->ds = c.ds;
  }
  return assemble(c, tol);
}

}  // namespace grasskit
