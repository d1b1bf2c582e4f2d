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
#include <span>
#include <vector>

#include "types.hpp"

namespace wignerkit {

/// Rank-one projection onto the span of a unit vector (the outer product
/// v v^dagger). Throws errc::not_unit if the norm deviates beyond tol.unit.
Projection projector(const Vector& v, const ToleranceConfig& tol = {});

/// Transition probability tr(PQ), clamped to [0, 1] against round-off.
double transition(const Projection& p, const Projection& q);

/// True iff transition(p, q) <= tol.orth.
bool is_orthogonal(const Projection& p, const Projection& q, const ToleranceConfig& tol);

/// True iff the family has exactly `dim` members, is pairwise orthogonal
/// within tol.orth, and sums to the identity within tol.complete.
bool is_cosp(std::span<const Projection> family, int dim, const ToleranceConfig& tol);

/// Unit vectors of the informationally complete design on the standard basis:
/// e_j, (e_j + e_k)/sqrt2 and (e_j + i e_k)/sqrt2 for j < k. Exactly dim^2
/// vectors; their projectors span the real space of Hermitian matrices.
std::vector<Vector> ic_vectors(int dim);

/// Projectors of ic_vectors(dim), in the same order.
std::vector<Projection> ic_family(int dim);

/// Projector of a Haar-distributed unit vector; deterministic per seed.
Projection random_projection(int dim, std::uint64_t seed);

/// Bargmann invariant of an ordered projection triple. For rank-one
/// projections onto x, y, z this equals inner(x,y)*inner(y,z)*inner(z,x) in
/// the first-argument-linear convention; the product trace in the order
/// P*Q*R would give the complex conjugate. Cyclic in its arguments,
/// preserved by unitary conjugation, conjugated by antiunitary conjugation.
cxd triple_overlap(const Projection& p, const Projection& q, const Projection& r);

/// Dominant eigenvector with the largest-magnitude entry rotated to be real
/// positive; the lowest index breaks magnitude ties.
Vector canonical_representative(const Projection& p);

/// The standard-basis COSP {P_{e_1}, ..., P_{e_dim}}.
Cosp standard_cosp(int dim);

/// COSP of the columns of a unitary matrix.
Cosp cosp_from_unitary(const Matrix& u, const ToleranceConfig& tol = {});

}  // namespace wignerkit
