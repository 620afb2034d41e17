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

#include <string>
#include <vector>

#include "hermit/circuit.hpp"

namespace hermit {

enum class GateSet {
  /// {CNOT, U}
  UniversalU,
  /// {CNOT, H, Rz}
  UniversalHRz,
  /// {CNOT, H, T}
  CliffordT,
  /// {CNOT, H, S}
  Clifford,
  /// {CNOT, Pi(theta, phi)} with theta, phi in [0, pi)
  HermitianPi,
  /// {CNOT, H, Pi(pi/2, phi)} with phi in [0, pi/2]
  HermitianHPi,
  /// {CNOT, H, Pi_T}
  HermitianHPiT,
  /// {CNOT, H, Pi_T, X}
  HermitianHPiTX,
  /// {CNOT, H, Pi_S, X}
  HermitianHPiSX,
};

std::string gate_set_name(GateSet set);
/// Throws InputError on unknown names.
GateSet gate_set_from_name(const std::string& name);
std::vector<GateSet> all_gate_sets();
bool is_hermitian_set(GateSet set);

/// Pi_S = Pi(pi/2, pi/4), Pi_T = Pi(pi/2, pi/8), h = v(pi/4, 0).
Axis pi_s_axis();
Axis pi_t_axis();
Axis h_axis();

bool in_gate_set(const GateOp& op, GateSet set);
bool circuit_in_gate_set(const Circuit& c, GateSet set);

struct HermitizeResult {
  Circuit circuit;
  /// input = e^{i global_phase} output; error is filled when the register
  /// is small enough to simulate, otherwise left negative.
  SynthesisReport report;
};

/// Rewrites a circuit into a Hermitian gate set. X gates are cancelled in
/// pairs where they meet across CNOT targets; for {CNOT, H, Pi_T} any X left
/// over is rebuilt on the circuit's declared ancilla, and InputError is
/// thrown when none is declared. Multi-controlled gates are rejected.
HermitizeResult hermitize(const Circuit& c, GateSet target);

/// Removes pairs of X gates on a wire that are separated only by CNOTs
/// targeting that wire (and by gates on other wires).
Circuit cancel_x_pairs(const Circuit& c);

std::vector<std::string> builtin_names();
/// Reference circuits; throws InputError on unknown names.
///   toffoli_hermitian_cliffordT  wires t = 0, c1 = 1, c2 = 2
///   toffoli_minimal_hermitian    wires c1 = 0, c2 = 1, t = 2
///   x_via_ancilla_cnot_pit       wires q = 0, a = 1 (ancilla)
///   x_via_ancilla_cnot_h         wires q = 0, a = 1 (ancilla)
Circuit builtin(const std::string& name);

/// The ancilla X constructions placed on wire q with ancilla a.
Circuit x_via_ancilla_cnot_pit(int q, int a, int width);
Circuit x_via_ancilla_cnot_h(int q, int a, int width);

}  // namespace hermit
