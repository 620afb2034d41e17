// Copyright 2026 The Hermit Authors
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

#include <array>
#include <string>

#include "hermit/circuit.hpp"
#include "hermit/kak.hpp"

namespace hermit {

enum class LayoutKind {
  AllToAll,
  /// Line c - t1 - t2.
  LnnControlFirst,
  /// Line t2 - t1 - c.
  LnnControlLast,
  /// Line t1 - c - t2.
  LnnControlMiddle,
};

/// Physical wires of the control and the two targets.
struct Layout {
  LayoutKind kind = LayoutKind::AllToAll;
  int c = 0;
  int t1 = 1;
  int t2 = 2;

  static Layout of(LayoutKind kind);
  bool linear() const { return kind != LayoutKind::AllToAll; }
};

enum class BasisKind {
  /// Single-CNOT controlled-pi blocks, no merging.
  ControlledPi,
  /// {CNOT, Ry, Rz}
  ZY,
  /// {CNOT, R_v}
  Rv,
  /// {CNOT, Pi}
  Pi,
};

std::string layout_name(LayoutKind kind);
LayoutKind layout_from_name(const std::string& name);
std::string basis_name(BasisKind kind);
BasisKind basis_from_name(const std::string& name);

/// Controlled-pi skeleton on logical wires c = 0, t1 = 1, t2 = 2. Fills
/// `report->branches` and `report->global_phase` when given.
Circuit build_cu4_cpi_skeleton(const Matrix& v, SynthesisReport* report = nullptr);

/// Expands controlled-pi, C-iY, CZ and phase gates into CNOTs plus
/// single-qubit gates of the basis, merging runs of single-qubit gates.
Circuit rewrite_basis(const Circuit& skeleton, BasisKind basis);

/// Maps a CNOT-level circuit on logical wires (c, t1, t2) = (0, 1, 2) onto
/// the line of `layout`, rewriting fan-out CNOT pairs so every CNOT acts on
/// neighbours. Skeletons with controlled-pi gates are expanded first.
Circuit lnn_lower(const Circuit& circuit, const Layout& layout);

/// 8x8 matrix of C-v with wires placed per layout (control off: identity).
Matrix controlled_target(const Matrix& v, const Layout& layout);

struct Cu4Result {
  Circuit circuit;
  SynthesisReport report;
};

/// Throws SynthesisError if the final circuit misses C-v by more than eps.
Cu4Result build_cu4(const Matrix& v, const Layout& layout, BasisKind basis, double eps = tol::kCircuit);

}  // namespace hermit
