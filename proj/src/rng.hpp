// Copyright 2026 The wignerkit authors
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

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "types.hpp"

namespace wignerkit {

/// Identifier of the sampling scheme, carried in report documents. The
/// engine is mt19937_64 as specified by the C++ standard; uniform doubles are
/// (x >> 11) * 2^-53 and normals come from Box-Muller on explicit uniforms,
/// so the stream is reproducible across platforms and languages.
inline constexpr const char* kRngAlgorithm = "mt19937_64-boxmuller/1";

/// Deterministic seeded generator for all randomized sampling in the library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform();

  /// Standard normal via Box-Muller; consumes exactly two uniforms.
  double normal();

  cxd complex_normal() { double re = normal(); double im = normal(); return {re, im}; }

  Vector gaussian_vector(int dim);

  /// Haar-distributed unit vector (normalized complex-normal entries).
  Vector unit_vector(int dim);

  /// Haar-distributed unitary: QR of a complex Ginibre matrix with the
  /// diagonal of R rotated to be real positive.
  Matrix unitary(int dim);

 private:
  std::mt19937_64 gen_;
};

/// Stable derivation of per-purpose seeds from one base seed, so that every
/// stage of a run draws from an independent, reproducible stream.
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag);

}  // namespace wignerkit
