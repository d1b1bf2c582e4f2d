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
#include <string>
#include <vector>

#include "oracle.hpp"
#include "wigner.hpp"

namespace wignerkit {

/// Sorted coordinate set of a block; must contain {0, 1, 2} (0-based here,
/// 1-based in report documents) so all blocks overlap on a common witness
/// triple.
struct BlockIndex {
  std::vector<int> indices;
  int size() const { return static_cast<int>(indices.size()); }
};

/// Reconstructed operator of one block, normalized so the image of the
/// block's first basis vector is that basis vector. For an aligned map the
/// operator is diagonal on the block basis; `phases` holds those diagonal
/// unimodular entries.
struct BlockOperator {
  BlockIndex block;
  SymmetryOperator op;
  std::vector<cxd> phases;
};

struct StageEntry {
  std::string stage;
  double max_deviation = 0.0;
};

/// Full record of a pipeline run. On success `global` is the patched
/// diagonal-phase operator, `final` holds the recovered symmetry (aligner
/// adjoint composed with global) and its verification deviation, and every
/// stage appears in `stage_log`. On rejection `error_code` and
/// `failed_stage` identify the violated hypothesis.
struct PipelineReport {
  SymmetryOperator aligner;
  std::vector<BlockOperator> blocks;
  SymmetryOperator global;
  ReconstructionResult final;
  std::vector<StageEntry> stage_log;
  bool ok = false;
  std::string error_code;
  std::string failed_stage;
  std::string message;
};

struct PipelineOptions {
  std::uint64_t seed = 0;
  int pairs = 200;        // random orthogonal pairs at the gate
  int probes = 20;        // leakage probes per block restriction
  int final_checks = 100; // random projections in the final verification
};

/// Samples orthogonality preservation: `pairs` seeded random orthogonal
/// pairs plus all pairs within COSPs built ic-family-style on a seeded
/// random basis. Returns the max transition probability between the images
/// of any sampled orthogonal pair; the caller compares against tol.orth.
double verify_orth_preserving(const MapOracle& map, int dim, int pairs, std::uint64_t seed,
                              const ToleranceConfig& tol);

/// Unitary V with V map(P_j) V^dagger = P_j for every member of the COSP;
/// the columns of V^dagger are the canonical representatives of the images.
/// Throws errc::image_not_cosp when the image family fails is_cosp (the
/// pipeline's entry hypothesis).
SymmetryOperator align_cosp(const MapOracle& map, const Cosp& cosp, const ToleranceConfig& tol);

/// Restriction of the aligned map to a block, validated on `probes` seeded
/// random block projections before returning (and on every later
/// evaluation).
MapOracle restrict_to_block(const MapOracle& map, const BlockIndex& block, int probes,
                            std::uint64_t seed, const ToleranceConfig& tol);

/// Reconstructs the operator of one restricted block, normalizes its global
/// phase so the first basis vector is fixed, and checks that the result is
/// diagonal on the block basis.
BlockOperator block_operator(const MapOracle& blockmap, const BlockIndex& block,
                             const ToleranceConfig& tol, std::uint64_t seed = 0);

/// Merges block operators into one global diagonal-phase operator. All
/// blocks must carry the same antilinearity flag, agree on overlap phases
/// within tol.gauge, and jointly cover every ambient coordinate.
SymmetryOperator patch_blocks(const std::vector<BlockOperator>& blocks, int ambient_dim,
                              const ToleranceConfig& tol);

/// The end-to-end pipeline: orthogonality gate, COSP alignment, the nested
/// block chain {0,1,2} subset {0,1,2,3} subset ... with per-block
/// reconstruction, patching, and final verification of the recovered
/// symmetry on seeded random projections.
PipelineReport reconstruct_symmetry(const MapOracle& map, const Cosp& cosp, int dim,
                                    const ToleranceConfig& tol, const PipelineOptions& opts = {});

/// Stage names as they appear in stage logs and report documents.
std::string block_stage_name(const BlockIndex& block);
inline constexpr const char* kStageGate = "verify_orth_preserving";
inline constexpr const char* kStageAlign = "align_cosp";
inline constexpr const char* kStagePatch = "patch_blocks";
inline constexpr const char* kStageFinal = "final_verification";

/// Message attached to align_cosp rejections.
inline constexpr const char* kImageNotCospMessage = "image family is not a COSP";

}  // namespace wignerkit
