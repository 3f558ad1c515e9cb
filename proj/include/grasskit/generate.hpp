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

#ifndef GRASSKIT_GENERATE_HPP
#define GRASSKIT_GENERATE_HPP

#include <utility>

#include "grasskit/two_projections.hpp"

namespace grasskit {

/// Requested gap regime for generated pairs.
enum class PairRegime { Lt1, Eq1, Orthogonal, Adjacent };

/// Block parameters the generator used; lets tests compare the recovered
/// canonical data against construction ground truth.
struct PairGroundTruth {
  Index p = 0;
  Index r = 0;
  std::vector<double> ds;  // descending
};

/// Deterministic pair with the requested regime: canonical blocks drawn from
/// the RNG, conjugated by a Haar unitary. Infeasible (d, n, regime)
/// combinations are precondition errors.
std::pair<Projection, Projection> generate_pair(Index d, Index n, Field field,
                                                PairRegime regime, Rng& rng,
                                                const Tolerance& tol,
                                                PairGroundTruth* truth = nullptr);

}  // namespace grasskit

#endif  // GRASSKIT_GENERATE_HPP
