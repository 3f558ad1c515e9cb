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

#ifndef GRASSKIT_DETAIL_HPP
#define GRASSKIT_DETAIL_HPP

#include "grasskit/grassmann.hpp"

namespace grasskit {

// Unvalidated constructors for values assembled from already-verified
// orthonormal data. Library-internal.
Subspace trusted_subspace(Matrix basis);
Projection trusted_projection(Matrix m, Index rank);

}  // namespace grasskit

#endif  // GRASSKIT_DETAIL_HPP
