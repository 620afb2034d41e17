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

#include "hermit/single_qubit.hpp"

#include <cmath>

namespace hermit {

namespace {

// Below this the vector part of an SU(2) element is treated as zero.
constexpr double kVectorEps = 1e-14;
constexpr double kEntryEps = 1e-12;

Mat2 ry(double a) { return rotation_matrix(a, Axis::y_axis()); }
Mat2 rz(double a) { return rotation_matrix(a, Axis::z_axis()); }
Mat2 rx(double a) { return rotation_matrix(a, Axis::x_axis()); }

// ZYZ angles of an SU(2) element, up to its sign.
std::array<double, 3> zyz_angles(const Mat2& s) {
  const double c = std::abs(s(0, 0));
  const double sn = std::abs(s(1, 0));
  if (sn < kEntryEps) return {2 * std::arg(s(1, 1)), 0.0, 0.0};
  if (c < kEntryEps) return {2 * std::arg(s(1, 0)), kPi, 0.0};
  const double b = 2 * std::atan2(sn, c);
  const double sum = 2 * std::arg(s(1, 1));
  const double diff = 2 * std::arg(s(1, 0));
  return {(sum + diff) / 2, b, (sum - diff) / 2};
}

}  // namespace

Mat2 special_unitary(const Mat2& u) { return u / std::sqrt(u.determinant()); }

AxisAngleForm to_axis_angle(const Mat2& u) {
  require_unitary(u, "single-qubit operator");
  AxisAngleForm out;
  out.gamma = std::arg(u.determinant()) / 2;
  const Mat2 s = std::polar(1.0, -out.gamma) * u;
  const Vec3 w(-s(1, 0).imag(), s(1, 0).real(), -s(0, 0).imag());
  const double c = s(0, 0).real();
  const double wn = w.norm();
  if (wn < kVectorEps) {
    // s = +-I
    out.lambda = 0.0;
    out.axis = Axis::z_axis();
    if (c < 0) out.gamma += kPi;
    out.gamma = wrap_phase(out.gamma);
    return out;
  }
  out.lambda = 2 * std::atan2(wn, c);
  const auto [axis, sign] = Axis::normalized(w).canonical();
  out.axis = axis;
  if (sign < 0) {
    // R_l(-v) = -R_{2pi - l}(v)
    out.lambda = 2 * kPi - out.lambda;
    out.gamma += kPi;
  }
  out.gamma = wrap_phase(out.gamma);
  return out;
}

TwoPiFactorization two_pi_factorize(const Mat2& u, const std::optional<Axis>& v1_hint) {
  const AxisAngleForm form = to_axis_angle(u);
  TwoPiFactorization out;
  if (form.lambda == 0.0) {
    out.v1 = v1_hint.value_or(Axis::x_axis());
    out.v2 = out.v1;
    out.gamma = std::arg(u(0, 0));
    return out;
  }
  if (v1_hint) {
    if (std::abs(v1_hint->dot(form.axis)) > 1e-8)
      throw InputError("v1 hint is not perpendicular to the rotation axis");
    out.v1 = *v1_hint;
  } else {
    const Vec3 perp = Vec3::UnitZ().cross(form.axis.vec());
    out.v1 = perp.norm() > 1e-8 ? Axis::normalized(perp) : Axis::x_axis();
  }
  out.v2 = rotate_axis(out.v1, form.axis, form.lambda / 2);
  out.gamma = form.gamma;
  return out;
}

Axis midpoint_axes(const Axis& v1, const Axis& v2) {
  const Vec3 sum = v1.vec() + v2.vec();
  if (sum.norm() > 1e-10) return Axis::normalized(sum);
  const Vec3 w = std::abs(v1.z()) < 0.9 ? Vec3::UnitZ() : Vec3::UnitY();
  return Axis::normalized(w.cross(v1.vec()));
}

Mat2 euler_matrix(const EulerAngles& e) {
  const auto& a = e.angles;
  const Mat2 last = e.convention == EulerConvention::ZYZ ? rz(a[2]) : rx(a[2]);
  return std::polar(1.0, e.gamma) * rz(a[0]) * ry(a[1]) * last;
}

EulerAngles euler_decompose(const Mat2& u, EulerConvention convention) {
  require_unitary(u, "single-qubit operator");
  EulerAngles out;
  out.convention = convention;
  const Mat2 s = special_unitary(u);
  if (convention == EulerConvention::ZYZ) {
    out.angles = zyz_angles(s);
  } else {
    // Rx(c) = Ry(pi/2) Rz(c) Ry(-pi/2), so s Ry(pi/2) has ZYZ angles (a, b + pi/2, c).
    out.angles = zyz_angles(s * ry(kPi / 2));
    out.angles[1] -= kPi / 2;
  }
  // Rz(a) Ry(b) Rz(c) = -Rz(a + pi) Ry(-b) Rz(c - pi); keep whichever form
  // has more vanishing angles so callers can drop them.
  const auto zeros = [](std::array<double, 3>& angles) {
    int n = 0;
    for (double& a : angles) {
      a = normalize_rotation_angle(a);
      if (std::abs(a) < 1e-12) ++n;
      if (std::abs(a) < 1e-15) a = 0.0;
    }
    return n;
  };
  int best = zeros(out.angles);
  if (convention == EulerConvention::ZYZ) {
    for (const double shift : {kPi, -kPi}) {
      std::array<double, 3> alt{out.angles[0] + shift, -out.angles[1], out.angles[2] - shift};
      const int n = zeros(alt);
      if (n > best) {
        best = n;
        out.angles = alt;
      }
    }
  }
  out.gamma = 0.0;
  out.gamma = equiv_up_to_phase(euler_matrix(out), u, 1.0).phase;
  return out;
}

}  // namespace hermit
