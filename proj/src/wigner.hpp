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
#include <vector>

#include "types.hpp"

namespace wignerkit {

class MapOracle;

/// Result of reconstructing an inducing operator from a map oracle.
struct ReconstructionResult {
  SymmetryOperator op;
  double max_deviation = 0.0;  // worst Frobenius error over the verification set
  int verified_pairs = 0;
};

/// Conjugation action S P S^dagger; in the antilinear case the input is
/// entrywise conjugated first.
Projection apply_symmetry(const SymmetryOperator& s, const Projection& p);

/// Composition: apply `second` first, then `first`. The antilinear flags
/// combine by XOR.
SymmetryOperator compose(const SymmetryOperator& first, const SymmetryOperator& second);

/// Decides whether a transition-preserving map is induced linearly or
/// conjugate-linearly.
///
/// Evaluates the Bargmann invariant of the images of the fixed witness
/// triple P_{b1}, P_{(b1+b2)/sqrt2}, P_{(b1+i b2)/sqrt2} built on the first
/// two basis vectors, and compares it against the source invariant and its
/// conjugate. For an orthonormal basis the source invariant is (1-i)/4, so
/// the two readings are separated by exactly 1/2. Returns false for linear,
/// true for antilinear; throws errc::ambiguous_witness if the source
/// invariant is too close to real, and errc::not_wigner_candidate if the
/// image invariant is far from both readings.
bool detect_antilinearity(const MapOracle& map, const std::vector<Vector>& basis,
                          const ToleranceConfig& tol);

/// Reconstructs the linear or conjugate-linear isometry inducing a
/// transition-preserving map oracle.
///
/// Columns are the canonical representatives of the images of the basis
/// projections, with phases fixed against the images of (e_1 + e_j)/sqrt2.
/// Transition preservation is checked on the informationally complete design
/// before construction, and the result is verified on that design plus 50
/// seeded random projections; `seed` controls only the verification draw.
ReconstructionResult reconstruct_isometry(const MapOracle& map, int dim,
                                          const ToleranceConfig& tol, std::uint64_t seed = 0);

/// True iff the flags match and A = z B for a single unimodular z within
/// tol.gauge in Frobenius norm. The candidate z is the phase of
/// tr(B^dagger A); when that trace is negligible for unitary inputs, no
/// global phase can relate them and the result is false.
bool gauge_compare(const SymmetryOperator& a, const SymmetryOperator& b,
                   const ToleranceConfig& tol);

}  // namespace wignerkit
