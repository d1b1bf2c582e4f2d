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

#include "gleason.hpp"

#include <cmath>

#include "oracle.hpp"
#include "projspace.hpp"

namespace wignerkit {

namespace {

constexpr double kGramFloor = 1e-6;

// Hermitian matrix from the real parameter vector: dim diagonal entries,
// then (re, im) pairs for the upper triangle in row-major order.
Matrix hermitian_from_params(const RealVector& theta, int dim) {
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) m(i, i) = theta(i);
  int at = dim;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      cxd v(theta(at), theta(at + 1));
      m(i, j) = v;
      m(j, i) = std::conj(v);
      at += 2;
    }
  }
  return m;
}

}  // namespace

double frame_value(const DensityOperator& d, const Projection& p) {
  if (d.dim() != p.dim()) {
    throw error(errc::dimension_mismatch, "frame_value: density and projection dims differ");
  }
  return (d.mat * p.mat).trace().real();
}

FitReport fit_density(const std::vector<FrameSample>& samples, int dim,
                      const ToleranceConfig& tol) {
  FitReport report;
  report.density.mat = Matrix::Zero(dim, dim);
  if (dim < 1) throw error(errc::invalid_argument, "fit_density: dim must be positive");
  const int m = static_cast<int>(samples.size());
  const int unknowns = dim * dim;
  for (const FrameSample& s : samples) {
    if (s.projection.dim() != dim) {
      throw error(errc::dimension_mismatch, "fit_density: sample dimension differs from dim");
    }
  }
  if (m < unknowns) {
    report.error_code = to_string(errc::design_deficient);
    return report;
  }

  // Rank check on the Hilbert-Schmidt Gram matrix of the sampled projections.
  RealMatrix gram(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      double g = (samples[a].projection.mat * samples[b].projection.mat).trace().real();
      gram(a, b) = g;
      gram(b, a) = g;
    }
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> ges(gram, Eigen::EigenvaluesOnly);
  if (ges.eigenvalues()(m - unknowns) < kGramFloor) {
    report.error_code = to_string(errc::design_deficient);
    return report;
  }

  // tr(DP) = sum_i d_i P_ii + sum_{i<j} 2(Re D_ij Re P_ij + Im D_ij Im P_ij).
  RealMatrix design(m, unknowns);
  RealVector rhs(m);
  for (int a = 0; a < m; ++a) {
    const Matrix& p = samples[a].projection.mat;
    for (int i = 0; i < dim; ++i) design(a, i) = p(i, i).real();
    int at = dim;
    for (int i = 0; i < dim; ++i) {
      for (int j = i + 1; j < dim; ++j) {
        design(a, at) = 2.0 * p(i, j).real();
        design(a, at + 1) = 2.0 * p(i, j).imag();
        at += 2;
      }
    }
    rhs(a) = samples[a].value;
  }
  RealVector theta = design.completeOrthogonalDecomposition().solve(rhs);
  Matrix fitted = hermitian_from_params(theta, dim);

  Eigen::SelfAdjointEigenSolver<Matrix> es(fitted);
  if (es.info() != Eigen::Success) {
    throw error(errc::internal, "fit_density: eigensolver failed");
  }
  RealVector eigs = es.eigenvalues();
  report.eigen_floor = eigs.minCoeff();

  RealVector clipped = eigs.cwiseMax(0.0);
  double total = clipped.sum();
  if (total <= 0.0) {
    report.error_code = to_string(errc::inconsistent_samples);
    return report;
  }
  clipped /= total;
  Matrix density =
      es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().adjoint();
  density = (density + density.adjoint()) / 2.0;
  report.density.mat = density;

  double residual = 0.0;
  for (const FrameSample& s : samples) {
    double fit = (density * s.projection.mat).trace().real();
    residual = std::max(residual, std::abs(fit - s.value));
  }
  report.residual = residual;

  if (report.eigen_floor < -tol.fit) {
    report.error_code = to_string(errc::negative_eigenvalue);
  } else if (residual > tol.fit) {
    report.error_code = to_string(errc::inconsistent_samples);
  }
  return report;
}

double check_frame_additivity(const FrameFunction& frame, const std::vector<Cosp>& cosps,
                              const ToleranceConfig& tol) {
  (void)tol;
  if (cosps.empty()) return 0.0;
  const int dim = cosps.front().dim();
  double worst = 0.0;
  for (const Cosp& c : cosps) {
    if (c.dim() != dim) {
      throw error(errc::dimension_mismatch, "check_frame_additivity: COSP dims differ");
    }
    double sum = 0.0;
    for (const Projection& p : c.projections) sum += frame(p);
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

FrameFunction pushforward_frame(const DensityOperator& d, const MapOracle& map) {
  if (d.dim() != map.dim()) {
    throw error(errc::dimension_mismatch, "pushforward_frame: density and map dims differ");
  }
  DensityOperator dcopy = d;
  MapOracle mcopy = map;
  return [dcopy, mcopy](const Projection& p) {
    return (dcopy.mat * mcopy(p).mat).trace().real();
  };
}

DensityOperator conjugate_density(const MapOracle& map, const DensityOperator& d,
                                  const ToleranceConfig& tol) {
  const int dim = map.dim();
  FrameFunction frame = pushforward_frame(d, map);
  std::vector<FrameSample> samples;
  for (Projection& p : ic_family(dim)) {
    double value = frame(p);
    samples.push_back(FrameSample{std::move(p), value});
  }
  FitReport report = fit_density(samples, dim, tol);
  if (!report.ok()) {
    throw error(errc::inconsistent_samples,
                "conjugate_density: fit rejected (" + report.error_code +
                    "); the map is not COSP-to-COSP compatible");
  }
  return report.density;
}

}  // namespace wignerkit
