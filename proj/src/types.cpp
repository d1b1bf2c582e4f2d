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

#include "types.hpp"

namespace wignerkit {

const char* to_string(errc c) {
  switch (c) {
    case errc::dimension_mismatch: return "dimension-mismatch";
    case errc::invalid_argument: return "invalid-argument";
    case errc::not_unit: return "not-unit";
    case errc::parse_error: return "parse-error";
    case errc::schema_version: return "schema-version";
    case errc::invariant_violation: return "invariant-violation";
    case errc::unknown_generator: return "unknown-generator";
    case errc::table_miss: return "table-miss";
    case errc::design_deficient: return "design-deficient";
    case errc::negative_eigenvalue: return "negative-eigenvalue";
    case errc::inconsistent_samples: return "inconsistent-samples";
    case errc::ambiguous_witness: return "ambiguous-witness";
    case errc::not_wigner_candidate: return "not-wigner-candidate";
    case errc::verification_failure: return "verification-failure";
    case errc::orthogonality_violated: return "orthogonality-violated";
    case errc::image_not_cosp: return "image-not-cosp";
    case errc::leakage: return "leakage";
    case errc::mixed_linearity: return "mixed-linearity";
    case errc::phase_disagreement: return "phase-disagreement";
    case errc::uncovered_index: return "uncovered-index";
    case errc::io_error: return "io-error";
    case errc::internal: return "internal";
  }
  return "internal";
}

ToleranceConfig ToleranceConfig::scaled(double factor) const {
  if (!(factor > 0.0)) {
    throw error(errc::invalid_argument, "tolerance scale factor must be strictly positive");
  }
  ToleranceConfig t = *this;
  t.orth *= factor;
  t.herm *= factor;
  t.idem *= factor;
  t.trace *= factor;
  t.complete *= factor;
  t.fit *= factor;
  t.gauge *= factor;
  t.unit *= factor;
  return t;
}

bool ToleranceConfig::set(const std::string& name, double value) {
  double* slot = nullptr;
  if (name == "orth") slot = &orth;
  else if (name == "herm") slot = &herm;
  else if (name == "idem") slot = &idem;
  else if (name == "trace") slot = &trace;
  else if (name == "complete") slot = &complete;
  else if (name == "fit") slot = &fit;
  else if (name == "gauge") slot = &gauge;
  else if (name == "unit") slot = &unit;
  if (slot == nullptr) return false;
  *slot = value;
  return true;
}

void ToleranceConfig::validate() const {
  for (double v : {orth, herm, idem, trace, complete, fit, gauge, unit}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw error(errc::invalid_argument, "tolerances must be strictly positive and finite");
    }
  }
}

bool satisfies_projection_invariants(const Matrix& m, const ToleranceConfig& tol) {
  if (m.rows() != m.cols() || m.rows() < 1) return false;
  if (!m.allFinite()) return false;
  if ((m - m.adjoint()).norm() > tol.herm) return false;
  if ((m * m - m).norm() > tol.idem) return false;
  if (std::abs(m.trace() - cxd(1.0, 0.0)) > tol.trace) return false;
  return true;
}

bool satisfies_density_invariants(const Matrix& m, const ToleranceConfig& tol) {
  if (m.rows() != m.cols() || m.rows() < 1) return false;
  if (!m.allFinite()) return false;
  if ((m - m.adjoint()).norm() > tol.herm) return false;
  if (std::abs(m.trace() - cxd(1.0, 0.0)) > tol.trace) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol.herm;
}

bool satisfies_unitary_invariants(const Matrix& m, const ToleranceConfig& tol) {
  if (m.rows() != m.cols() || m.rows() < 1) return false;
  if (!m.allFinite()) return false;
  Matrix gram = m.adjoint() * m;
  gram -= Matrix::Identity(m.rows(), m.cols());
  return gram.norm() <= tol.herm * std::sqrt(static_cast<double>(m.rows()));
}

Projection projection_from_matrix(Matrix m, const ToleranceConfig& tol) {
  if (!satisfies_projection_invariants(m, tol)) {
    throw error(errc::invariant_violation,
                "matrix is not a rank-one projection within tolerance");
  }
  return Projection{std::move(m)};
}

DensityOperator density_from_matrix(Matrix m, const ToleranceConfig& tol) {
  if (!satisfies_density_invariants(m, tol)) {
    throw error(errc::invariant_violation, "matrix is not a density operator within tolerance");
  }
  return DensityOperator{std::move(m)};
}

}  // namespace wignerkit
