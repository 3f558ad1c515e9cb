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

#ifndef GRASSKIT_RNG_HPP
#define GRASSKIT_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace grasskit {

/// Deterministic random source. The engine is std::mt19937_64 (bit-exact per
/// the standard); the uniform and Gaussian mappings are implemented here
/// instead of via std::*_distribution so that identical seeds give identical
/// streams on every standard library.
///
/// States are caller-owned and never shared between concurrent callers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent substream for (seed, stream) pairs, e.g. per-trial RNGs.
  static Rng derive(std::uint64_t seed, std::uint64_t stream) {
    return Rng(mix(seed, stream));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; keeps the paired draw as a spare.
  double gaussian();

  /// Complex standard normal (independent real and imaginary parts).
  std::complex<double> gaussian_complex() {
    double re = gaussian();
    double im = gaussian();
    return {re, im};
  }

 private:
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream);

  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace grasskit

#endif  // GRASSKIT_RNG_HPP
