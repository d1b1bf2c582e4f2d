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
#include <memory>
#include <string>
#include <vector>

#include "types.hpp"

namespace wignerkit {

/// Parameters of the named adversarial generators. Each generator violates
/// one documented hypothesis:
///   constant       every input maps to one fixed projection
///   collapse_pair  amplitude of basis ray `merge_from` is folded onto
///                  `merge_to`, destroying orthogonality on generic pairs
///   noisy_induced  induced map with a per-input pseudo-random rotation of
///                  magnitude eps applied to the output
///   cosp_breaker   induced map, except the image of P_{e_merge_from} is
///                  replaced by the image of P_{e_merge_to}
struct AdversarialParams {
  double eps = 1e-3;
  int merge_to = 0;
  int merge_from = 1;
};

/// A total map on rank-one projections, evaluated as a pure function.
///
/// Oracles are immutable after construction and safe for concurrent
/// evaluation; induced, tabulated, composed and adversarial payloads share
/// this interface. Evaluation output always satisfies the projection
/// invariants (tabulated entries are validated at load time).
class MapOracle {
 public:
  int dim() const;
  const std::string& kind() const;
  Projection operator()(const Projection& p) const;

  static MapOracle induced(SymmetryOperator s);

  /// Finite pair table with a fixed input-matching radius (Frobenius
  /// distance 1e-6). Inputs farther than the radius from every tabulated
  /// input raise errc::table_miss rather than extrapolating.
  static MapOracle tabulated(int dim, std::vector<std::pair<Projection, Projection>> pairs);

  /// Stages applied in list order: composed({f, g}) evaluates g(f(P)).
  static MapOracle composed(std::vector<MapOracle> stages);

  static MapOracle adversarial(const std::string& name, int dim, const AdversarialParams& params,
                               std::uint64_t seed);

  class Impl;
  explicit MapOracle(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<const Impl> impl_;
};

/// Restriction of an (aligned) oracle to the coordinates in `indices`:
/// block inputs are embedded into the ambient space, mapped, and compressed
/// back. Every evaluation checks that the image's energy outside the block
/// stays within tol.fit and raises errc::leakage otherwise.
MapOracle restrict_oracle(const MapOracle& map, const std::vector<int>& indices,
                          const ToleranceConfig& tol);

inline constexpr double kTabulatedMatchRadius = 1e-6;

}  // namespace wignerkit
