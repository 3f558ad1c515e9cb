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

#ifndef GRASSKIT_TOLERANCE_HPP
#define GRASSKIT_TOLERANCE_HPP

#include "grasskit/errors.hpp"

namespace grasskit {

/// Numerical tolerances threaded explicitly through every predicate; there is
/// no global configuration.
///  - eq_tol: entrywise / value comparisons
///  - rank_tol: relative singular-value cutoff for rank decisions
///  - cluster_tol: eigenvalue clustering at 0 and 1 for projection spectra
struct Tolerance {
  double eq_tol = 1e-9;
  double rank_tol = 1e-8;
  double cluster_tol = 1e-8;

  void validate() const {
    auto ok = [](double t) { return t > 0.0 && t < 1e-2; };
    if (!ok(eq_tol) || !ok(rank_tol) || !ok(cluster_tol)) {
      throw_invalid("tolerances must be strictly positive and below 1e-2");
    }
  }
};

}  // namespace grasskit

#endif  // GRASSKIT_TOLERANCE_HPP
