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

#include "hermit/controlled.hpp"

#include <algorithm>
#include <cmath>

#include "hermit/single_qubit.hpp"

namespace hermit {

namespace {

constexpr double kZeroAngle = 1e-12;

int width_for(const std::vector<int>& controls, int target) {
  int w = target;
  for (int c : controls) w = std::max(w, c);
  return w + 1;
}

bool is_x(const Axis& a) { return a.near(Axis::x_axis(), 1e-14); }

GateOp mc_pi(const std::vector<int>& controls, int target, const Axis& axis) {
  if (is_x(axis)) return controls.size() == 1 ? GateOp::cnot(controls[0], target) : GateOp::mc_x(controls, target);
  return GateOp::mc_rot(controls, target, kPi, axis, kPi / 2);
}

}  // namespace

Axis conjugate_pi(const Axis& v_target, const Axis& v_source) { return midpoint_axes(v_target, v_source); }

Circuit mc_axis_transform(const McRotationSpec& spec, const Axis& new_axis) {
  const Axis vm = midpoint_axes(new_axis, spec.axis);
  Circuit c(width_for(spec.controls, spec.target));
  c.add(GateOp::pi(spec.target, vm));
  const bool exact_x = is_x(spec.axis) && std::abs(wrap_phase(spec.lambda) - kPi) < 1e-14 &&
                       std::abs(wrap_phase(spec.psi - kPi / 2)) < 1e-14;
  if (exact_x)
    c.add(spec.controls.size() == 1 ? GateOp::cnot(spec.controls[0], spec.target)
                                    : GateOp::mc_x(spec.controls, spec.target));
  else
    c.add(GateOp::mc_rot(spec.controls, spec.target, spec.lambda, spec.axis, spec.psi));
  c.add(GateOp::pi(spec.target, vm));
  return c;
}

Circuit controlled_pi_one_cnot(const ControlledPiSpec& spec) {
  const Axis vm = midpoint_axes(spec.axis, Axis::x_axis());
  Circuit c(std::max(spec.control, spec.target) + 1);
  if (std::abs(wrap_phase(spec.psi)) > kZeroAngle) c.add(GateOp::phase(spec.control, spec.psi));
  c.add(GateOp::pi(spec.target, vm));
  c.add(GateOp::cnot(spec.control, spec.target));
  c.add(GateOp::pi(spec.target, vm));
  return c;
}

std::optional<PiWitness> single_cnot_witness(const Mat2& u) {
  require_unitary(u, "single-qubit operator");
  if (std::abs(u.trace()) > 1e-8) return std::nullopt;
  const AxisAngleForm form = to_axis_angle(u);
  // e^{i g} R_pi(v) = e^{i (g - pi/2)} Pi(v)
  return PiWitness{wrap_phase(form.gamma - kPi / 2), form.axis};
}

Circuit cpi_to_zy(const std::vector<int>& controls, int target, const Axis& axis) {
  const Axis vm = midpoint_axes(axis, Axis::x_axis());
  // Pi(v_M) = e^{ig} Rz(a) Ry(b) Rx(c); Rx commutes with X, so
  // Pi(v) = Pi(v_M) X Pi(v_M) = Rz(a) Ry(b) X Ry(-b) Rz(-a).
  const EulerAngles e = euler_decompose(pi_rotation(vm), EulerConvention::ZYX);
  const double a = e.angles[0];
  const double b = e.angles[1];
  Circuit c(width_for(controls, target));
  if (std::abs(a) > kZeroAngle) c.add(GateOp::rz(target, -a));
  if (std::abs(b) > kZeroAngle) c.add(GateOp::ry(target, -b));
  c.add(controls.size() == 1 ? GateOp::cnot(controls[0], target) : GateOp::mc_x(controls, target));
  if (std::abs(b) > kZeroAngle) c.add(GateOp::ry(target, b));
  if (std::abs(a) > kZeroAngle) c.add(GateOp::rz(target, a));
  return c;
}

Circuit cpi_planar(const std::vector<int>& controls, int target, const Axis& v, const Axis& tau, const Axis& sigma,
                   double phi) {
  if (std::abs(tau.dot(sigma)) > 1e-10) throw InputError("tau is not perpendicular to sigma");
  if (!rotate_axis(tau, sigma, phi).near(v, 1e-10)) throw InputError("axis is not R_sigma(phi) tau");
  Circuit c(width_for(controls, target));
  const bool rotate = std::abs(wrap_phase(phi)) > kZeroAngle;
  if (rotate) c.add(GateOp::rot(target, -phi, sigma));
  c.add(mc_pi(controls, target, tau));
  if (rotate) c.add(GateOp::rot(target, phi, sigma));
  return c;
}

Matrix controlled_matrix(const std::vector<int>& controls, int target, const Mat2& g, int width) {
  const Eigen::Index dim = Eigen::Index{1} << width;
  Matrix m = Matrix::Identity(dim, dim);
  Eigen::Index cmask = 0;
  for (int q : controls) cmask |= Eigen::Index{1} << (width - 1 - q);
  const Eigen::Index tmask = Eigen::Index{1} << (width - 1 - target);
  for (Eigen::Index i = 0; i < dim; ++i) {
    if ((i & cmask) != cmask || (i & tmask)) continue;
    const Eigen::Index j = i | tmask;
    m(i, i) = g(0, 0);
    m(i, j) = g(0, 1);
    m(j, i) = g(1, 0);
    m(j, j) = g(1, 1);
  }
  return m;
}

}  // namespace hermit
