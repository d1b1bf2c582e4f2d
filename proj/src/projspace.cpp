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

#include "projspace.hpp"

#include <algorithm>
#include <cmath>

#include "rng.hpp"

namespace wignerkit {

namespace {

void require_same_dim(int a, int b, const char* op) {
  if (a != b) {
    throw error(errc::dimension_mismatch,
                std::string(op) + ": operands have dimensions " + std::to_string(a) + " and " +
                    std::to_string(b));
  }
}

}  // namespace

Projection projector(const Vector& v, const ToleranceConfig& tol) {
  double n = v.norm();
  if (std::abs(n - 1.0) > tol.unit) {
    throw error(errc::not_unit, "projector: vector norm deviates from 1 by " +
                                    std::to_string(std::abs(n - 1.0)));
  }
  return Projection{v * v.adjoint()};
}

double transition(const Projection& p, const Projection& q) {
  require_same_dim(p.dim(), q.dim(), "transition");
  double t = (p.mat * q.mat).trace().real();
  return std::clamp(t, 0.0, 1.0);
}

bool is_orthogonal(const Projection& p, const Projection& q, const ToleranceConfig& tol) {
  return transition(p, q) <= tol.orth;
}

bool is_cosp(std::span<const Projection> family, int dim, const ToleranceConfig& tol) {
  if (static_cast<int>(family.size()) != dim) return false;
  for (const Projection& p : family) {
    if (p.dim() != dim) return false;
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (transition(family[i], family[j]) > tol.orth) return false;
    }
  }
  Matrix sum = Matrix::Zero(dim, dim);
  for (const Projection& p : family) sum += p.mat;
  sum -= Matrix::Identity(dim, dim);
  return sum.norm() <= tol.complete;
}

std::vector<Vector> ic_vectors(int dim) {
  if (dim < 2) {
    throw error(errc::invalid_argument, "ic_vectors: dim must be at least 2");
  }
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(dim) * dim);
  for (int j = 0; j < dim; ++j) {
    out.push_back(Vector::Unit(dim, j));
  }
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      Vector v = Vector::Zero(dim);
      v(j) = s;
      v(k) = s;
      out.push_back(v);
    }
  }
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      Vector v = Vector::Zero(dim);
      v(j) = s;
      v(k) = cxd(0.0, s);
      out.push_back(v);
    }
  }
  return out;
}

std::vector<Projection> ic_family(int dim) {
  std::vector<Projection> out;
  for (const Vector& v : ic_vectors(dim)) out.push_back(Projection{v * v.adjoint()});
  return out;
}

Projection random_projection(int dim, std::uint64_t seed) {
  if (dim < 1) {
    throw error(errc::invalid_argument, "random_projection: dim must be positive");
  }
  Rng rng(seed);
  Vector v = rng.unit_vector(dim);
  return Projection{v * v.adjoint()};
}

cxd triple_overlap(const Projection& p, const Projection& q, const Projection& r) {
  require_same_dim(p.dim(), q.dim(), "triple_overlap");
  require_same_dim(p.dim(), r.dim(), "triple_overlap");
  // Reversed product order matches the first-linear inner product convention.
  return (r.mat * q.mat * p.mat).trace();
}

Vector canonical_representative(const Projection& p) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(p.mat);
  if (es.info() != Eigen::Success) {
    throw error(errc::internal, "canonical_representative: eigensolver failed");
  }
  Vector v = es.eigenvectors().col(p.dim() - 1);
  int at = 0;
  double best = std::abs(v(0));
  for (int i = 1; i < v.size(); ++i) {
    double mag = std::abs(v(i));
    if (mag > best) {
      best = mag;
      at = i;
    }
  }
  cxd pivot = v(at);
  if (std::abs(pivot) > 0.0) v *= std::conj(pivot) / std::abs(pivot);
  return v;
}

Cosp standard_cosp(int dim) {
  Cosp c;
  for (int j = 0; j < dim; ++j) {
    Vector v = Vector::Unit(dim, j);
    c.basis.push_back(v);
    c.projections.push_back(Projection{v * v.adjoint()});
  }
  return c;
}

Cosp cosp_from_unitary(const Matrix& u, const ToleranceConfig& tol) {
  if (!satisfies_unitary_invariants(u, tol)) {
    throw error(errc::invariant_violation, "cosp_from_unitary: matrix is not unitary");
  }
  Cosp c;
  for (int j = 0; j < u.cols(); ++j) {
    Vector v = u.col(j);
    c.basis.push_back(v);
    c.projections.push_back(Projection{v * v.adjoint()});
  }
  return c;
}

}  // namespace wignerkit
