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
#include <optional>
#include <vector>

#include "hermit/circuit.hpp"

namespace hermit {

/// Factors of the 3-CNOT template on (t1, t2) = (0, 1), in time order:
///   D on t1, C on t2; CNOT(t1, t2); Ry(theta1) on t1, Rz(theta3) on t2;
///   CNOT(t2, t1); Ry(theta2) on t1; CNOT(t1, t2); B on t1, A on t2.
/// The template's matrix is e^{-i gamma} times the factorized operator.
struct KakFactors {
  Mat2 a = Mat2::Identity();
  Mat2 b = Mat2::Identity();
  Mat2 c = Mat2::Identity();
  Mat2 d = Mat2::Identity();
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
  double gamma = 0.0;
};

/// Weyl-chamber style coordinates: M = e^{i g} exp(i (a XX + b YY + c ZZ)).
struct CanonicalCoords {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double g = 0.0;
};

KakFactors kak_factorize(const Matrix& v);

/// The 3-CNOT template circuit on wires t1, t2 of a register of `width`.
Circuit kak_circuit(const KakFactors& f, int t1 = 0, int t2 = 1, int width = 2);

/// Splits K = A (x) B (up to a phase) into SU(2) factors.
std::pair<Mat2, Mat2> tensor_factor(const Mat4& k);

/// exp(i (a XX + b YY + c ZZ))
Mat4 canonical_gate(double a, double b, double c);

/// Parameters of the pi-rotation form of an SU(4) element, in time order on
/// (t1, t2): Pi(v1), Pi(v2); U1, U2; C-iY(t1, t2); Pi(v3), Pi(v4); CZ;
/// Pi(v5) on t1; CNOT(t1, t2); U1^dagger, U2^dagger; Pi(v6), Pi(v7).
/// v[0] is v1.
struct Su4PiParams {
  Mat2 u1 = Mat2::Identity();
  Mat2 u2 = Mat2::Identity();
  std::array<Axis, 7> v{Axis::x_axis(), Axis::x_axis(), Axis::x_axis(), Axis::x_axis(),
                        Axis::x_axis(), Axis::x_axis(), Axis::x_axis()};
};

Circuit su4_pi_circuit(const Su4PiParams& p, int t1 = 0, int t2 = 1, int width = 2);

struct Su4Attempt {
  std::optional<Su4PiParams> params;
  /// Max-norm distance between the rebuilt circuit and the input (no phase
  /// freedom).
  double error = 0.0;
};

/// Requires det u = 1. Returns params only if the rebuilt circuit equals u
/// exactly within tolerance.
Su4Attempt try_su4_to_pi_params(const Mat4& u, double eps = tol::kCircuit);

/// Throws SynthesisError when try_su4_to_pi_params fails.
Su4PiParams su4_to_pi_params(const Mat4& u, double eps = tol::kCircuit);

struct PhaseSelection {
  double phi = 0.0;
  /// e^{-i phi} v
  Mat4 u = Mat4::Identity();
  Su4PiParams params;
  /// One entry per tried branch k = 0..3.
  std::vector<BranchOutcome> branches;
};

/// Tries phi_k = (arg det v + 2 pi k) / 4 and keeps the first branch whose
/// pi-rotation form is exact. Throws SynthesisError if none is.
PhaseSelection phase_select(const Matrix& v, double eps = tol::kCircuit);

}  // namespace hermit
