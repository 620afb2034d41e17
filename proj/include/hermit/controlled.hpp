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
#include <vector>

#include "hermit/circuit.hpp"

namespace hermit {

/// C-(e^{i psi} Pi(axis)) with one control.
struct ControlledPiSpec {
  Axis axis = Axis::x_axis();
  double psi = 0.0;
  int control = 0;
  int target = 1;
};

/// Multi-controlled e^{i psi} R_lambda(axis).
struct McRotationSpec {
  std::vector<int> controls;
  int target = 0;
  double lambda = 0.0;
  Axis axis = Axis::z_axis();
  double psi = 0.0;
};

/// u = e^{i psi} Pi(axis).
struct PiWitness {
  double psi = 0.0;
  Axis axis = Axis::x_axis();
};

/// v_M with Pi(v_target) = Pi(v_M) Pi(v_source) Pi(v_M).
Axis conjugate_pi(const Axis& v_target, const Axis& v_source);

/// Realizes the rotation of `spec` about new_axis instead of spec.axis by
/// conjugating the original multi-controlled rotation with Pi(v_M) on the
/// target.
Circuit mc_axis_transform(const McRotationSpec& spec, const Axis& new_axis);

/// P(psi) on the control, then Pi(v_M) CNOT Pi(v_M) on the target. The phase
/// gate is omitted when psi = 0.
Circuit controlled_pi_one_cnot(const ControlledPiSpec& spec);

/// Witness that C-u needs only one CNOT: present iff u is traceless.
std::optional<PiWitness> single_cnot_witness(const Mat2& u);

/// MC-Pi(axis) as Rz, Ry rotations around a (multi-controlled) X.
Circuit cpi_to_zy(const std::vector<int>& controls, int target, const Axis& axis);

/// MC-Pi(v) for v = R_sigma(phi) tau with tau perpendicular to sigma, as
/// R_sigma(-phi), MC-Pi(tau), R_sigma(phi) in time order.
Circuit cpi_planar(const std::vector<int>& controls, int target, const Axis& v, const Axis& tau, const Axis& sigma,
                   double phi);

/// Dense matrix of a multi-controlled 2x2 operator on `width` qubits.
Matrix controlled_matrix(const std::vector<int>& controls, int target, const Mat2& g, int width);

}  // namespace hermit
