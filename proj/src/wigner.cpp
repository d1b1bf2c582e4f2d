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

#include "wigner.hpp"

#include <cmath>

#include "oracle.hpp"
#include "projspace.hpp"
#include "rng.hpp"

namespace wignerkit {

namespace {

constexpr int kVerificationDraws = 50;

cxd unit_phase(cxd z) {
  double a = std::abs(z);
  return (a > 0.0) ? z / a : cxd(1.0, 0.0);
}

}  // namespace

Projection apply_symmetry(const SymmetryOperator& s, const Projection& p) {
  if (s.dim() != p.dim()) {
    throw error(errc::dimension_mismatch, "apply_symmetry: operator and projection dims differ");
  }
  if (s.antilinear) {
    return Projection{s.mat * p.mat.conjugate() * s.mat.adjoint()};
  }
  return Projection{s.mat * p.mat * s.mat.adjoint()};
}

SymmetryOperator compose(const SymmetryOperator& first, const SymmetryOperator& second) {
  if (first.dim() != second.dim()) {
    throw error(errc::dimension_mismatch, "compose: operator dims differ");
  }
  SymmetryOperator out;
  out.antilinear = first.antilinear != second.antilinear;
  out.mat = first.antilinear ? Matrix(first.mat * second.mat.conjugate())
                             : Matrix(first.mat * second.mat);
  return out;
}

bool detect_antilinearity(const MapOracle& map, const std::vector<Vector>& basis,
                          const ToleranceConfig& tol) {
  if (map.dim() < 3) {
    throw error(errc::invalid_argument, "detect_antilinearity: dim must be at least 3");
  }
  if (basis.size() < 2) {
    throw error(errc::invalid_argument, "detect_antilinearity: need at least two basis vectors");
  }
  const double s = 1.0 / std::sqrt(2.0);
  const Vector& b1 = basis[0];
  const Vector& b2 = basis[1];
  Vector w1 = b1;
  Vector w2 = s * (b1 + b2);
  Vector w3 = s * (b1 + cxd(0.0, 1.0) * b2);
  w2 /= w2.norm();
  w3 /= w3.norm();

  cxd source = inner(w1, w2) * inner(w2, w3) * inner(w3, w1);
  if (std::abs(source.imag()) < 10.0 * tol.orth) {
    throw error(errc::ambiguous_witness,
                "detect_antilinearity: witness invariant has no usable imaginary part");
  }
  cxd image = triple_overlap(map(projector(w1, tol)), map(projector(w2, tol)),
                             map(projector(w3, tol)));
  double d_linear = std::abs(image - source);
  double d_anti = std::abs(image - std::conj(source));
  // Half the separation between the two readings.
  double cap = std::abs(source.imag());
  if (std::min(d_linear, d_anti) >= cap) {
    throw error(errc::not_wigner_candidate,
                "detect_antilinearity: image invariant matches neither reading; the map does "
                "not preserve transition probabilities");
  }
  return d_anti < d_linear;
}

ReconstructionResult reconstruct_isometry(const MapOracle& map, int dim,
                                          const ToleranceConfig& tol, std::uint64_t seed) {
  if (map.dim() != dim) {
    throw error(errc::dimension_mismatch, "reconstruct_isometry: oracle dim differs from dim");
  }
  if (dim < 3) {
    throw error(errc::invalid_argument, "reconstruct_isometry: dim must be at least 3");
  }

  std::vector<Projection> design = ic_family(dim);
  std::vector<Projection> images;
  images.reserve(design.size());
  for (const Projection& p : design) images.push_back(map(p));

  // The map must already preserve transition probabilities on the design.
  for (std::size_t a = 0; a < design.size(); ++a) {
    for (std::size_t b = a + 1; b < design.size(); ++b) {
      double src = transition(design[a], design[b]);
      double img = transition(images[a], images[b]);
      if (std::abs(src - img) > tol.fit) {
        throw error(errc::not_wigner_candidate,
                    "reconstruct_isometry: transition probabilities are not preserved on the "
                    "design (deviation " +
                        std::to_string(std::abs(src - img)) + ")");
      }
    }
  }

  // Design layout: basis projectors first, then the (e_j+e_k)/sqrt2 block in
  // which pairs with j = 0 come first.
  std::vector<Vector> reps(static_cast<std::size_t>(dim));
  for (int j = 0; j < dim; ++j) reps[j] = canonical_representative(images[j]);

  Matrix columns(dim, dim);
  columns.col(0) = reps[0];
  for (int j = 1; j < dim; ++j) {
    const Projection& mixed = images[static_cast<std::size_t>(dim) + j - 1];
    Vector y = canonical_representative(mixed);
    cxd overlap = inner(y, reps[0]);
    if (std::abs(overlap) < 0.1) {
      throw error(errc::not_wigner_candidate,
                  "reconstruct_isometry: phase anchor overlap degenerated");
    }
    y *= std::conj(unit_phase(overlap));
    cxd align = inner(y, reps[j]);
    if (std::abs(align) < 0.1) {
      throw error(errc::not_wigner_candidate,
                  "reconstruct_isometry: column phase overlap degenerated");
    }
    columns.col(j) = reps[j] * unit_phase(align);
  }

  ReconstructionResult result;
  result.op.mat = columns;
  result.op.antilinear = detect_antilinearity(map, standard_cosp(dim).basis, tol);

  Rng rng(derive_seed(seed, "reconstruct_isometry/verify"));
  double worst = 0.0;
  for (std::size_t a = 0; a < design.size(); ++a) {
    worst = std::max(worst, (apply_symmetry(result.op, design[a]).mat - images[a].mat).norm());
  }
  for (int k = 0; k < kVerificationDraws; ++k) {
    Vector v = rng.unit_vector(dim);
    Projection p{v * v.adjoint()};
    worst = std::max(worst, (apply_symmetry(result.op, p).mat - map(p).mat).norm());
  }
  result.max_deviation = worst;
  result.verified_pairs = static_cast<int>(design.size()) + kVerificationDraws;
  if (worst > tol.fit) {
    throw error(errc::verification_failure,
                "reconstruct_isometry: verification deviation " + std::to_string(worst) +
                    " exceeds tolerance");
  }
  return result;
}

bool gauge_compare(const SymmetryOperator& a, const SymmetryOperator& b,
                   const ToleranceConfig& tol) {
  if (a.dim() != b.dim()) {
    throw error(errc::dimension_mismatch, "gauge_compare: operator dims differ");
  }
  if (a.antilinear != b.antilinear) return false;
  cxd overlap = (b.mat.adjoint() * a.mat).trace();
  if (std::abs(overlap) < 1e-6) return false;
  cxd z = overlap / std::abs(overlap);
  return (a.mat - z * b.mat).norm() <= tol.gauge;
}

}  // namespace wignerkit
