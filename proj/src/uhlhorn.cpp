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

#include "uhlhorn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "projspace.hpp"
#include "rng.hpp"

namespace wignerkit {

namespace {

cxd unit_phase(cxd z) {
  double a = std::abs(z);
  return (a > 0.0) ? z / a : cxd(1.0, 0.0);
}

// COSPs built the way the informationally complete family is built, on the
// given orthonormal basis: the basis itself, and for each pair (j, k) the
// completions containing (b_j +- b_k)/sqrt2 and (b_j +- i b_k)/sqrt2.
std::vector<std::vector<Vector>> ic_style_cosps(const std::vector<Vector>& basis) {
  const int dim = static_cast<int>(basis.size());
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<std::vector<Vector>> out;
  out.push_back(basis);
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      for (cxd factor : {cxd(1.0, 0.0), cxd(0.0, 1.0)}) {
        std::vector<Vector> cosp;
        Vector plus = s * (basis[j] + factor * basis[k]);
        Vector minus = s * (basis[j] - factor * basis[k]);
        cosp.push_back(plus / plus.norm());
        cosp.push_back(minus / minus.norm());
        for (int m = 0; m < dim; ++m) {
          if (m != j && m != k) cosp.push_back(basis[m]);
        }
        out.push_back(std::move(cosp));
      }
    }
  }
  return out;
}

}  // namespace

double verify_orth_preserving(const MapOracle& map, int dim, int pairs, std::uint64_t seed,
                              const ToleranceConfig& tol) {
  (void)tol;
  if (pairs < 1) {
    throw error(errc::invalid_argument, "verify_orth_preserving: pairs must be at least 1");
  }
  if (map.dim() != dim) {
    throw error(errc::dimension_mismatch, "verify_orth_preserving: oracle dim differs from dim");
  }
  double worst = 0.0;

  // Deterministic part: all orthogonal pairs within COSPs built on a seeded
  // random basis. A random basis is used on purpose, so this stage probes
  // generic pairs and leaves the input COSP's own pairs to the alignment
  // stage's is_cosp check.
  Rng basis_rng(derive_seed(seed, "orth_gate/basis"));
  Matrix u = basis_rng.unitary(dim);
  std::vector<Vector> basis;
  for (int j = 0; j < dim; ++j) basis.push_back(u.col(j));
  for (const std::vector<Vector>& cosp : ic_style_cosps(basis)) {
    std::vector<Projection> images;
    images.reserve(cosp.size());
    for (const Vector& v : cosp) images.push_back(map(Projection{v * v.adjoint()}));
    for (std::size_t a = 0; a < images.size(); ++a) {
      for (std::size_t b = a + 1; b < images.size(); ++b) {
        worst = std::max(worst, transition(images[a], images[b]));
      }
    }
  }

  // Sampled part: random P, then random Q inside the orthocomplement of P.
  Rng rng(derive_seed(seed, "orth_gate/pairs"));
  for (int k = 0; k < pairs; ++k) {
    Vector x = rng.unit_vector(dim);
    Vector y;
    for (;;) {
      Vector w = rng.gaussian_vector(dim);
      w -= inner(w, x) * x;
      double n = w.norm();
      if (n > 1e-6) {
        y = w / n;
        break;
      }
    }
    Projection p{x * x.adjoint()};
    Projection q{y * y.adjoint()};
    worst = std::max(worst, transition(map(p), map(q)));
  }
  return worst;
}

SymmetryOperator align_cosp(const MapOracle& map, const Cosp& cosp, const ToleranceConfig& tol) {
  const int dim = cosp.dim();
  if (map.dim() != dim) {
    throw error(errc::dimension_mismatch, "align_cosp: oracle dim differs from COSP length");
  }
  std::vector<Projection> images;
  images.reserve(cosp.projections.size());
  for (const Projection& p : cosp.projections) images.push_back(map(p));
  if (!is_cosp(images, dim, tol)) {
    throw error(errc::image_not_cosp, kImageNotCospMessage);
  }
  Matrix v_adjoint(dim, dim);
  for (int j = 0; j < dim; ++j) v_adjoint.col(j) = canonical_representative(images[j]);
  SymmetryOperator aligner{v_adjoint.adjoint(), false};

  double worst = 0.0;
  for (int j = 0; j < dim; ++j) {
    worst = std::max(
        worst, (apply_symmetry(aligner, images[j]).mat - cosp.projections[j].mat).norm());
  }
  if (worst > tol.fit) {
    throw error(errc::verification_failure,
                "align_cosp: aligned images deviate from the COSP by " + std::to_string(worst));
  }
  return aligner;
}

MapOracle restrict_to_block(const MapOracle& map, const BlockIndex& block, int probes,
                            std::uint64_t seed, const ToleranceConfig& tol) {
  MapOracle restricted = restrict_oracle(map, block.indices, tol);
  Rng rng(derive_seed(seed, "restrict_to_block/probes"));
  const int k = block.size();
  for (int i = 0; i < probes; ++i) {
    Vector v = rng.unit_vector(k);
    restricted(Projection{v * v.adjoint()});  // throws errc::leakage on violation
  }
  return restricted;
}

BlockOperator block_operator(const MapOracle& blockmap, const BlockIndex& block,
                             const ToleranceConfig& tol, std::uint64_t seed) {
  const int k = block.size();
  if (blockmap.dim() != k) {
    throw error(errc::dimension_mismatch, "block_operator: oracle dim differs from block size");
  }
  ReconstructionResult rec = reconstruct_isometry(blockmap, k, tol, seed);

  // Normalize the global phase so the first basis vector of the block maps
  // to itself.
  cxd anchor = rec.op.mat(0, 0);
  if (std::abs(anchor) < 0.5) {
    throw error(errc::verification_failure,
                "block_operator: first basis vector is not fixed by the aligned block map");
  }
  rec.op.mat *= std::conj(unit_phase(anchor));

  BlockOperator out;
  out.block = block;
  out.op = rec.op;
  out.phases.resize(k);
  for (int j = 0; j < k; ++j) {
    Vector col = rec.op.mat.col(j);
    cxd diag = col(j);
    col(j) = cxd(0.0, 0.0);
    double off = col.norm();
    if (off > tol.fit || std::abs(std::abs(diag) - 1.0) > tol.fit) {
      throw error(errc::verification_failure,
                  "block_operator: operator is not diagonal on the block basis (column " +
                      std::to_string(j) + " off-diagonal mass " + std::to_string(off) + ")");
    }
    out.phases[j] = unit_phase(diag);
  }
  return out;
}

SymmetryOperator patch_blocks(const std::vector<BlockOperator>& blocks, int ambient_dim,
                              const ToleranceConfig& tol) {
  if (blocks.empty()) {
    throw error(errc::invalid_argument, "patch_blocks: no blocks supplied");
  }
  const bool antilinear = blocks.front().op.antilinear;
  for (const BlockOperator& b : blocks) {
    if (b.op.antilinear != antilinear) {
      throw error(errc::mixed_linearity,
                  "patch_blocks: blocks mix unitary and antiunitary operators");
    }
    if (b.block.size() < 3 || b.block.indices[0] != 0 || b.block.indices[1] != 1 ||
        b.block.indices[2] != 2) {
      throw error(errc::invalid_argument, "patch_blocks: every block must contain {0, 1, 2}");
    }
  }

  std::vector<cxd> phases(ambient_dim, cxd(0.0, 0.0));
  std::vector<bool> covered(ambient_dim, false);
  for (const BlockOperator& b : blocks) {
    for (int slot = 0; slot < b.block.size(); ++slot) {
      int j = b.block.indices[slot];
      if (j >= ambient_dim) {
        throw error(errc::invalid_argument, "patch_blocks: block index exceeds ambient dim");
      }
      if (!covered[j]) {
        phases[j] = b.phases[slot];
        covered[j] = true;
      } else if (std::abs(phases[j] - b.phases[slot]) > tol.gauge) {
        throw error(errc::phase_disagreement,
                    "patch_blocks: blocks disagree on the phase of coordinate " +
                        std::to_string(j + 1) + " by " +
                        std::to_string(std::abs(phases[j] - b.phases[slot])));
      }
    }
  }
  for (int j = 0; j < ambient_dim; ++j) {
    if (!covered[j]) {
      throw error(errc::uncovered_index,
                  "patch_blocks: coordinate " + std::to_string(j + 1) + " is not covered");
    }
  }
  Matrix w = Matrix::Zero(ambient_dim, ambient_dim);
  for (int j = 0; j < ambient_dim; ++j) w(j, j) = phases[j];
  return SymmetryOperator{std::move(w), antilinear};
}

std::string block_stage_name(const BlockIndex& block) {
  // 1-based inclusive range in reports.
  return "block[1.." + std::to_string(block.indices.back() + 1) + "]";
}

PipelineReport reconstruct_symmetry(const MapOracle& map, const Cosp& cosp, int dim,
                                    const ToleranceConfig& tol, const PipelineOptions& opts) {
  PipelineReport report;
  if (cosp.dim() != dim || map.dim() != dim) {
    throw error(errc::dimension_mismatch,
                "reconstruct_symmetry: map, COSP and dim must all agree");
  }
  if (dim < 3) {
    throw error(errc::invalid_argument, "reconstruct_symmetry: dim must be at least 3");
  }

  std::string stage = kStageGate;
  try {
    double gate = verify_orth_preserving(map, dim, opts.pairs, opts.seed, tol);
    report.stage_log.push_back({kStageGate, gate});
    if (gate > tol.orth) {
      throw error(errc::orthogonality_violated,
                  "orthogonality gate: max image transition " + std::to_string(gate) +
                      " exceeds tolerance");
    }

    stage = kStageAlign;
    report.aligner = align_cosp(map, cosp, tol);
    MapOracle aligned = MapOracle::composed({map, MapOracle::induced(report.aligner)});
    double align_dev = 0.0;
    for (int j = 0; j < dim; ++j) {
      align_dev = std::max(align_dev,
                           (aligned(cosp.projections[j]).mat - cosp.projections[j].mat).norm());
    }
    report.stage_log.push_back({kStageAlign, align_dev});

    // Nested chain {0,1,2}, {0,1,2,3}, ..., {0..dim-1}; overlap agreement is
    // checked during patching.
    for (int top = 2; top < dim; ++top) {
      BlockIndex block;
      block.indices.resize(top + 1);
      std::iota(block.indices.begin(), block.indices.end(), 0);
      stage = block_stage_name(block);
      std::uint64_t block_seed = derive_seed(opts.seed, stage);
      MapOracle blockmap = restrict_to_block(aligned, block, opts.probes, block_seed, tol);
      BlockOperator bop = block_operator(blockmap, block, tol, block_seed);
      double dev = 0.0;
      {
        // Deviation recorded for the stage: block reconstruction quality.
        dev = 0.0;
        Rng rng(derive_seed(block_seed, "stage_deviation"));
        for (int i = 0; i < 10; ++i) {
          Vector v = rng.unit_vector(block.size());
          Projection p{v * v.adjoint()};
          dev = std::max(dev, (apply_symmetry(bop.op, p).mat - blockmap(p).mat).norm());
        }
      }
      report.stage_log.push_back({stage, dev});
      report.blocks.push_back(std::move(bop));
    }

    stage = kStagePatch;
    double overlap_dev = 0.0;
    for (std::size_t a = 0; a < report.blocks.size(); ++a) {
      for (std::size_t b = a + 1; b < report.blocks.size(); ++b) {
        const BlockOperator& small = report.blocks[a];
        const BlockOperator& large = report.blocks[b];
        for (int slot = 0; slot < small.block.size(); ++slot) {
          overlap_dev = std::max(overlap_dev,
                                 std::abs(small.phases[slot] - large.phases[slot]));
        }
      }
    }
    report.global = patch_blocks(report.blocks, dim, tol);
    report.stage_log.push_back({kStagePatch, overlap_dev});

    // Recovered symmetry: undo the alignment, then apply the patched
    // diagonal operator.
    stage = kStageFinal;
    SymmetryOperator recovered;
    recovered.antilinear = report.global.antilinear;
    recovered.mat = report.aligner.mat.adjoint() * report.global.mat;

    Rng rng(derive_seed(opts.seed, "final_verification"));
    double worst = 0.0;
    for (int k = 0; k < opts.final_checks; ++k) {
      Vector v = rng.unit_vector(dim);
      Projection q{v * v.adjoint()};
      worst = std::max(worst, (apply_symmetry(recovered, q).mat - map(q).mat).norm());
    }
    report.stage_log.push_back({kStageFinal, worst});
    if (worst > tol.fit) {
      throw error(errc::verification_failure,
                  "final verification: recovered symmetry deviates from the map by " +
                      std::to_string(worst));
    }
    report.final.op = recovered;
    report.final.max_deviation = worst;
    report.final.verified_pairs = opts.final_checks;
    report.ok = true;
  } catch (const error& e) {
    report.ok = false;
    report.error_code = to_string(e.code());
    report.failed_stage = stage;
    report.message = e.what();
    bool logged = false;
    for (const StageEntry& entry : report.stage_log) {
      if (entry.stage == stage) logged = true;
    }
    if (!logged) report.stage_log.push_back({stage, 0.0});
  }
  return report;
}

}  // namespace wignerkit
