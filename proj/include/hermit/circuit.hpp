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

#include <optional>
#include <string>
#include <vector>

#include "hermit/bloch.hpp"

namespace hermit {

// Qubit 0 is the most significant bit of a basis-state index. Ops are
// applied in list order, so the unitary of [g1, g2, ..., gn] is gn ... g2 g1.

enum class GateKind {
  CNOT,
  CZ,
  /// Controlled iY; target matrix [[0, 1], [-1, 0]].
  CiY,
  SWAP,
  H,
  X,
  /// diag(1, e^{i angle})
  Phase,
  /// R_angle(axis)
  Rot,
  /// Pi(axis)
  Pi,
  /// Arbitrary 2x2 unitary.
  U2,
  /// Multi-controlled e^{i psi} R_angle(axis); controls first, target last.
  McRot,
  /// Multi-controlled X; controls first, target last.
  McX,
};

std::string kind_name(GateKind kind);
/// Inverse of kind_name; throws InputError on unknown names.
GateKind kind_from_name(const std::string& name);

struct GateOp {
  GateKind kind = GateKind::X;
  /// Controls first, target last. SWAP and CZ are symmetric.
  std::vector<int> qubits;
  double angle = 0.0;
  double psi = 0.0;
  Axis axis = Axis::z_axis();
  Mat2 matrix = Mat2::Identity();

  static GateOp cnot(int control, int target);
  static GateOp cz(int a, int b);
  static GateOp ciy(int control, int target);
  static GateOp swap(int a, int b);
  static GateOp h(int q);
  static GateOp x(int q);
  static GateOp phase(int q, double lambda);
  static GateOp rot(int q, double lambda, const Axis& axis);
  static GateOp rz(int q, double lambda) { return rot(q, lambda, Axis::z_axis()); }
  static GateOp ry(int q, double lambda) { return rot(q, lambda, Axis::y_axis()); }
  static GateOp pi(int q, const Axis& axis);
  static GateOp u2(int q, const Mat2& m);
  static GateOp mc_rot(std::vector<int> controls, int target, double lambda, const Axis& axis, double psi = 0.0);
  static GateOp mc_x(std::vector<int> controls, int target);
  /// C-(e^{i psi} Pi(axis)) as a McRot.
  static GateOp controlled_pi(int control, int target, const Axis& axis, double psi = 0.0);

  int target() const { return qubits.back(); }
  int num_controls() const;
  bool is_single_qubit() const { return qubits.size() == 1; }
  /// The 2x2 operator applied to the target when all controls are set (SWAP
  /// has none and throws).
  Mat2 target_matrix() const;
  /// Dense matrix on the op's own qubits, in qubits order.
  Matrix local_matrix() const;
};

enum class Connectivity { AllToAll, Linear };

struct Circuit {
  int width = 0;
  std::vector<GateOp> ops;
  Connectivity connectivity = Connectivity::AllToAll;
  /// Wire that may be used as a scratch ancilla (starts and ends in any state).
  std::optional<int> ancilla;

  Circuit() = default;
  explicit Circuit(int w, Connectivity c = Connectivity::AllToAll) : width(w), connectivity(c) {}

  Circuit& add(const GateOp& op);
  Circuit& append(const Circuit& other);
};

inline constexpr int kMaxSimWidth = 12;

/// Throws InputError if an op has out-of-range or repeated qubits.
void validate_ops(const Circuit& c);

Matrix circuit_unitary(const Circuit& c);

/// Embeds a single-qubit operator at wire q of an n-qubit register.
Matrix embed(const Mat2& g, int q, int width);

PhaseMatch assert_equiv(const Circuit& c, const Matrix& target, double eps = tol::kCircuit);

struct ConnectivityViolation {
  std::size_t op_index = 0;
  std::string message;
};

std::vector<ConnectivityViolation> validate_connectivity(const Circuit& c);

struct GateCounts {
  int cnot = 0;
  int cz = 0;
  int ciy = 0;
  int swap = 0;
  int h = 0;
  int x = 0;
  int phase = 0;
  int rot_z = 0;
  int rot_y = 0;
  int rot_other = 0;
  int pi = 0;
  /// Pi gates whose axis is exactly x.
  int pi_x = 0;
  /// Pi gates in the xy or xz plane, excluding the x axis itself.
  int pi_xy = 0;
  int pi_xz = 0;
  int u2 = 0;
  int mc_rot = 0;
  int mc_x = 0;

  int rot() const { return rot_z + rot_y + rot_other; }
  int total_single_qubit() const { return h + x + phase + rot() + pi + u2; }
  int two_qubit() const { return cnot + cz + ciy + swap; }
  bool operator==(const GateCounts&) const = default;
};

GateCounts count_gates(const Circuit& c);

struct BranchOutcome {
  int k = 0;
  double phi = 0.0;
  double error = 0.0;
  bool accepted = false;
};

struct SynthesisReport {
  GateCounts counts;
  double error = 0.0;
  double global_phase = 0.0;
  std::vector<BranchOutcome> branches;
};

/// Plain-text listing, one op per line, with Pi(theta,phi), P(lambda), CNOT names.
std::string to_text(const Circuit& c);

/// Inverse circuit (reversed order, each op inverted).
Circuit inverse(const Circuit& c);

}  // namespace hermit
