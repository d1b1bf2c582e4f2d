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

#include "oracle.hpp"

#include <cmath>
#include <cstring>
#include <utility>

#include "projspace.hpp"
#include "rng.hpp"
#include "wigner.hpp"

namespace wignerkit {

class MapOracle::Impl {
 public:
  Impl(int dim, std::string kind) : dim_(dim), kind_(std::move(kind)) {}
  virtual ~Impl() = default;
  virtual Projection evaluate(const Projection& p) const = 0;
  int dim() const { return dim_; }
  const std::string& kind() const { return kind_; }

 private:
  int dim_;
  std::string kind_;
};

namespace {

void require_dim(const Projection& p, int dim, const char* who) {
  if (p.dim() != dim) {
    throw error(errc::dimension_mismatch,
                std::string(who) + ": input dimension " + std::to_string(p.dim()) +
                    " differs from oracle dimension " + std::to_string(dim));
  }
}

class InducedImpl final : public MapOracle::Impl {
 public:
  explicit InducedImpl(SymmetryOperator s) : Impl(s.dim(), "induced"), op_(std::move(s)) {}

  Projection evaluate(const Projection& p) const override {
    require_dim(p, dim(), "induced oracle");
    return apply_symmetry(op_, p);
  }

 private:
  SymmetryOperator op_;
};

class TabulatedImpl final : public MapOracle::Impl {
 public:
  TabulatedImpl(int dim, std::vector<std::pair<Projection, Projection>> pairs)
      : Impl(dim, "tabulated"), pairs_(std::move(pairs)) {}

  Projection evaluate(const Projection& p) const override {
    require_dim(p, dim(), "tabulated oracle");
    for (const auto& [in, out] : pairs_) {
      if ((p.mat - in.mat).norm() <= kTabulatedMatchRadius) return out;
    }
    throw error(errc::table_miss,
                "tabulated oracle: input is farther than the matching radius from every "
                "tabulated projection");
  }

 private:
  std::vector<std::pair<Projection, Projection>> pairs_;
};

class ComposedImpl final : public MapOracle::Impl {
 public:
  ComposedImpl(int dim, std::vector<MapOracle> stages)
      : Impl(dim, "composed"), stages_(std::move(stages)) {}

  Projection evaluate(const Projection& p) const override {
    require_dim(p, dim(), "composed oracle");
    Projection cur = p;
    for (const MapOracle& stage : stages_) cur = stage(cur);
    return cur;
  }

 private:
  std::vector<MapOracle> stages_;
};

class ConstantImpl final : public MapOracle::Impl {
 public:
  ConstantImpl(int dim, Projection target)
      : Impl(dim, "adversarial"), target_(std::move(target)) {}

  Projection evaluate(const Projection& p) const override {
    require_dim(p, dim(), "constant oracle");
    return target_;
  }

 private:
  Projection target_;
};

// Folds the amplitude of one basis ray onto another: x -> x + x_from e_to -
// x_from e_from, then renormalize. Not conformal, so orthogonality breaks on
// generic pairs.
class CollapsePairImpl final : public MapOracle::Impl {
 public:
  CollapsePairImpl(int dim, int to, int from)
      : Impl(dim, "adversarial"), to_(to), from_(from) {}

  Projection evaluate(const Projection& p) const override {
    require_dim(p, dim(), "collapse_pair oracle");
    Vector x = canonical_representative(p);
    Vector y = x;
    y(to_) += x(from_);
    y(from_) = cxd(0.0, 0.0);
    double n = y.norm();
    if (n < 1e-8) {
      y = Vector::Unit(dim(), to_);
    } else {
      y /= n;
    }
    return Projection{y * y.adjoint()};
  }

 private:
  int to_;
  int from_;
};

// Deterministic per-input jitter: the rotation generator is seeded from a
// hash of the input's byte representation, so evaluation is repeatable
// within one build while distinct inputs get independent perturbations.
class NoisyInducedImpl final : public MapOracle::Impl {
 public:
  NoisyInducedImpl(SymmetryOperator s, double eps, std::uint64_t seed)
      : Impl(s.dim(), "adversarial"), op_(std::move(s)), eps_(eps), seed_(seed) {}

  Projection evaluate(const Projection& p) const override {
    require_dim(p, dim(), "noisy_induced oracle");
    Projection image = apply_symmetry(op_, p);
    Matrix rot = jitter_rotation(p);
    return Projection{rot * image.mat * rot.adjoint()};
  }

 private:
  Matrix jitter_rotation(const Projection& p) const {
    std::uint64_t h = seed_ ^ 0x2545f4914f6cdd1dULL;
    for (Eigen::Index j = 0; j < p.mat.cols(); ++j) {
      for (Eigen::Index i = 0; i < p.mat.rows(); ++i) {
        cxd v = p.mat(i, j);
        for (double part : {v.real(), v.imag()}) {
          std::uint64_t bits;
          static_assert(sizeof(bits) == sizeof(part));
          std::memcpy(&bits, &part, sizeof(bits));
          h ^= bits;
          h *= 1099511628211ULL;
        }
      }
    }
    Rng rng(derive_seed(h, "noisy_induced/jitter"));
    const int n = dim();
    Matrix herm(n, n);
    for (int i = 0; i < n; ++i) {
      herm(i, i) = rng.normal();
      for (int j = i + 1; j < n; ++j) {
        cxd v = rng.complex_normal();
        herm(i, j) = v;
        herm(j, i) = std::conj(v);
      }
    }
    herm /= herm.norm();
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
    Vector phases(n);
    for (int i = 0; i < n; ++i) {
      phases(i) = std::polar(1.0, eps_ * es.eigenvalues()(i));
    }
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  }

  SymmetryOperator op_;
  double eps_;
  std::uint64_t seed_;
};

// Induced map that silently reroutes the image of one basis projection onto
// another's, so the image of the standard COSP collides while every generic
// pair still behaves.
class CospBreakerImpl final : public MapOracle::Impl {
 public:
  CospBreakerImpl(SymmetryOperator s, int to, int from)
      : Impl(s.dim(), "adversarial"), op_(std::move(s)), to_(to), from_(from) {}

  Projection evaluate(const Projection& p) const override {
    require_dim(p, dim(), "cosp_breaker oracle");
    Vector from_basis = Vector::Unit(dim(), from_);
    Projection from_proj{from_basis * from_basis.adjoint()};
    if ((p.mat - from_proj.mat).norm() <= 1e-6) {
      Vector to_basis = Vector::Unit(dim(), to_);
      return apply_symmetry(op_, Projection{to_basis * to_basis.adjoint()});
    }
    return apply_symmetry(op_, p);
  }

 private:
  SymmetryOperator op_;
  int to_;
  int from_;
};

class RestrictedImpl final : public MapOracle::Impl {
 public:
  RestrictedImpl(MapOracle parent, std::vector<int> indices, ToleranceConfig tol)
      : Impl(static_cast<int>(indices.size()), "restricted"),
        parent_(std::move(parent)),
        indices_(std::move(indices)),
        tol_(tol) {}

  Projection evaluate(const Projection& p) const override {
    require_dim(p, dim(), "restricted oracle");
    const int ambient = parent_.dim();
    const int k = dim();
    Matrix embedded = Matrix::Zero(ambient, ambient);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        embedded(indices_[a], indices_[b]) = p.mat(a, b);
      }
    }
    Projection image = parent_(Projection{std::move(embedded)});
    Matrix compressed(k, k);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        compressed(a, b) = image.mat(indices_[a], indices_[b]);
      }
    }
    Matrix reembedded = Matrix::Zero(ambient, ambient);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        reembedded(indices_[a], indices_[b]) = compressed(a, b);
      }
    }
    double leak = (image.mat - reembedded).norm();
    if (leak > tol_.fit) {
      throw error(errc::leakage, "restricted oracle: image leaks " + std::to_string(leak) +
                                     " outside the block");
    }
    return Projection{std::move(compressed)};
  }

 private:
  MapOracle parent_;
  std::vector<int> indices_;
  ToleranceConfig tol_;
};

}  // namespace

int MapOracle::dim() const { return impl_->dim(); }

const std::string& MapOracle::kind() const { return impl_->kind(); }

Projection MapOracle::operator()(const Projection& p) const { return impl_->evaluate(p); }

MapOracle MapOracle::induced(SymmetryOperator s) {
  return MapOracle(std::make_shared<InducedImpl>(std::move(s)));
}

MapOracle MapOracle::tabulated(int dim, std::vector<std::pair<Projection, Projection>> pairs) {
  for (const auto& [in, out] : pairs) {
    if (in.dim() != dim || out.dim() != dim) {
      throw error(errc::dimension_mismatch, "tabulated oracle: pair dimension differs from dim");
    }
  }
  return MapOracle(std::make_shared<TabulatedImpl>(dim, std::move(pairs)));
}

MapOracle MapOracle::composed(std::vector<MapOracle> stages) {
  if (stages.empty()) {
    throw error(errc::invalid_argument, "composed oracle: stage list is empty");
  }
  const int dim = stages.front().dim();
  for (const MapOracle& stage : stages) {
    if (stage.dim() != dim) {
      throw error(errc::dimension_mismatch, "composed oracle: stage dims differ");
    }
  }
  return MapOracle(std::make_shared<ComposedImpl>(dim, std::move(stages)));
}

MapOracle MapOracle::adversarial(const std::string& name, int dim,
                                 const AdversarialParams& params, std::uint64_t seed) {
  if (dim < 3) {
    throw error(errc::invalid_argument, "adversarial oracle: dim must be at least 3");
  }
  if (params.merge_to == params.merge_from || params.merge_to < 0 || params.merge_from < 0 ||
      params.merge_to >= dim || params.merge_from >= dim) {
    throw error(errc::invalid_argument, "adversarial oracle: invalid merge indices");
  }
  Rng rng(derive_seed(seed, "adversarial/" + name));
  if (name == "constant") {
    Vector v = rng.unit_vector(dim);
    return MapOracle(std::make_shared<ConstantImpl>(dim, Projection{v * v.adjoint()}));
  }
  if (name == "collapse_pair") {
    return MapOracle(
        std::make_shared<CollapsePairImpl>(dim, params.merge_to, params.merge_from));
  }
  if (name == "noisy_induced") {
    if (!(params.eps >= 0.0) || !std::isfinite(params.eps)) {
      throw error(errc::invalid_argument, "noisy_induced: eps must be finite and nonnegative");
    }
    SymmetryOperator s{rng.unitary(dim), false};
    return MapOracle(std::make_shared<NoisyInducedImpl>(std::move(s), params.eps, seed));
  }
  if (name == "cosp_breaker") {
    SymmetryOperator s{rng.unitary(dim), false};
    return MapOracle(std::make_shared<CospBreakerImpl>(std::move(s), params.merge_to,
                                                       params.merge_from));
  }
  throw error(errc::unknown_generator, "adversarial oracle: unknown generator '" + name + "'");
}

MapOracle restrict_oracle(const MapOracle& map, const std::vector<int>& indices,
                          const ToleranceConfig& tol) {
  if (indices.size() < 3) {
    throw error(errc::invalid_argument, "restrict_oracle: block needs at least 3 indices");
  }
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= map.dim()) {
      throw error(errc::invalid_argument, "restrict_oracle: index out of range");
    }
    if (i > 0 && indices[i] <= indices[i - 1]) {
      throw error(errc::invalid_argument, "restrict_oracle: indices must be strictly increasing");
    }
  }
  return MapOracle(std::make_shared<RestrictedImpl>(map, indices, tol));
}

}  // namespace wignerkit
