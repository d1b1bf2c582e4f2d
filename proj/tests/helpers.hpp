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
#include <optional>
#include <utility>

#include "gleason.hpp"
#include "oracle.hpp"
#include "projspace.hpp"
#include "rng.hpp"
#include "wigner.hpp"

namespace wignerkit::testutil {

/// Full-rank density operator from a seeded Ginibre sample.
inline DensityOperator random_density(int dim, std::uint64_t seed) {
  Rng rng(seed);
  Matrix g(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) g(i, j) = rng.complex_normal();
  Matrix d = g * g.adjoint();
  d /= d.trace().real();
  return DensityOperator{(d + Matrix(d.adjoint())) / 2.0};
}

inline SymmetryOperator random_symmetry(int dim, std::uint64_t seed, bool antilinear) {
  Rng rng(seed);
  return SymmetryOperator{rng.unitary(dim), antilinear};
}

inline double frob(const Matrix& a, const Matrix& b) { return (a - b).norm(); }

/// Runs f and returns the wignerkit error code it throws, if any.
template <typename F>
inline std::optional<errc> error_code_of(F&& f) {
  try {
    std::forward<F>(f)();
    return std::nullopt;
  } catch (const error& e) {
    return e.code();
  }
}

}  // namespace wignerkit::testutil
