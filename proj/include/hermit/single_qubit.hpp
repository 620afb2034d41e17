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

#include "hermit/bloch.hpp"

namespace hermit {

/// u = e^{i gamma} R_lambda(axis), lambda in [0, 2pi], axis canonical.
struct AxisAngleForm {
  double lambda = 0.0;
  Axis axis = Axis::z_axis();
  double gamma = 0.0;
};

/// u = e^{i gamma} Pi(v2) Pi(v1).
struct TwoPiFactorization {
  Axis v1 = Axis::x_axis();
  Axis v2 = Axis::x_axis();
  double gamma = 0.0;
};

enum class EulerConvention {
  /// u = e^{i gamma} Rz(angles[0]) Ry(angles[1]) Rz(angles[2])
  ZYZ,
  /// u = e^{i gamma} Rz(angles[0]) Ry(angles[1]) Rx(angles[2])
  ZYX,
};

struct EulerAngles {
  EulerConvention convention = EulerConvention::ZYZ;
  std::array<double, 3> angles{0.0, 0.0, 0.0};
  double gamma = 0.0;
};

AxisAngleForm to_axis_angle(const Mat2& u);

/// Writes u as a product of two pi-rotations. If a hint is given it is used
/// as v1 and must be perpendicular to the rotation axis of u within 1e-8.
TwoPiFactorization two_pi_factorize(const Mat2& u, const std::optional<Axis>& v1_hint = std::nullopt);

/// An axis v_M with Pi(v_M) v1 Pi(v_M) = v2 on the sphere, i.e. the
/// normalized midpoint, or a fixed perpendicular when v1 = -v2.
Axis midpoint_axes(const Axis& v1, const Axis& v2);

EulerAngles euler_decompose(const Mat2& u, EulerConvention convention);

/// Rebuilds the matrix described by an Euler decomposition.
Mat2 euler_matrix(const EulerAngles& e);

/// Special-unitary part of u: u / sqrt(det u), principal branch.
Mat2 special_unitary(const Mat2& u);

}  // namespace hermit
