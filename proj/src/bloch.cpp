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

#include "hermit/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hermit {

namespace {
constexpr double kSignEps = 1e-12;
}

Axis::Axis(double x, double y, double z) : v_(x, y, z) {
  const double n2 = v_.squaredNorm();
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > tol::kAxisNorm) {
    std::ostringstream msg;
    msg << "axis (" << x << ", " << y << ", " << z << ") is not a unit vector";
    throw InputError(msg.str());
  }
}

Axis Axis::normalized(const Vec3& v) {
  const double n = v.norm();
  if (!std::isfinite(n) || n < 1e-300) throw InputError("cannot normalize a zero vector");
  return Axis(v / n, Unchecked{});
}

Axis Axis::spherical(double theta, double phi) {
  return normalized(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta));
}

double Axis::theta() const { return std::acos(std::clamp(v_.z(), -1.0, 1.0)); }

double Axis::phi() const {
  if (std::abs(v_.x()) < kSignEps && std::abs(v_.y()) < kSignEps) return 0.0;
  return std::atan2(v_.y(), v_.x());
}

std::pair<Axis, int> Axis::canonical() const {
  // theta, phi in [0, pi): y > 0, or y = 0 with x > 0, or the north pole.
  bool flip = false;
  if (v_.y() < -kSignEps) {
    flip = true;
  } else if (std::abs(v_.y()) <= kSignEps) {
    if (v_.x() < -kSignEps)
      flip = true;
    else if (std::abs(v_.x()) <= kSignEps && v_.z() < 0)
      flip = true;
  }
  if (flip) return {-*this, -1};
  return {*this, +1};
}

double wrap_phase(double angle) {
  double a = std::remainder(angle, 2 * kPi);  // [-pi, pi]
  if (a <= -kPi) a += 2 * kPi;
  return a;
}

double normalize_rotation_angle(double angle) { return 2 * wrap_phase(angle / 2); }

Mat2 rotation_matrix(double lambda, const Axis& axis) {
  const double c = std::cos(lambda / 2);
  const double s = std::sin(lambda / 2);
  Mat2 m;
  m << Complex(c, -axis.z() * s), Complex(-axis.y() * s, -axis.x() * s),
      Complex(axis.y() * s, -axis.x() * s), Complex(c, axis.z() * s);
  return m;
}

Mat2 pi_rotation(const Axis& axis) {
  Mat2 m;
  m << axis.z(), Complex(axis.x(), -axis.y()), Complex(axis.x(), axis.y()), -axis.z();
  return m;
}

Mat2 pi_rotation(double theta, double phi) {
  Mat2 m;
  m << std::cos(theta), std::polar(std::sin(theta), -phi), std::polar(std::sin(theta), phi), -std::cos(theta);
  return m;
}

Mat2 phase_gate(double lambda) {
  Mat2 m;
  m << 1, 0, 0, std::polar(1.0, lambda);
  return m;
}

Axis rotate_axis(const Axis& axis, const Axis& about, double angle) {
  const Vec3& v = axis.vec();
  const Vec3& k = about.vec();
  const Vec3 r = v * std::cos(angle) + k.cross(v) * std::sin(angle) + k * k.dot(v) * (1 - std::cos(angle));
  return Axis::normalized(r);
}

namespace gates {
Mat2 identity() { return Mat2::Identity(); }
Mat2 x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}
Mat2 y() {
  Mat2 m;
  m << 0, -kI, kI, 0;
  return m;
}
Mat2 z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}
Mat2 h() {
  Mat2 m;
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}
Mat2 s() { return phase_gate(kPi / 2); }
Mat2 t() { return phase_gate(kPi / 4); }
}  // namespace gates

double max_norm(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

PhaseMatch equiv_up_to_phase(const Matrix& a, const Matrix& b, double eps) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << "dimension mismatch: " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x" << b.cols();
    throw InputError(msg.str());
  }
  PhaseMatch out;
  if (a.size() == 0) {
    out.equivalent = true;
    return out;
  }
  const Matrix overlap = a.adjoint() * b;
  Eigen::Index r = 0, c = 0;
  overlap.cwiseAbs().maxCoeff(&r, &c);
  out.phase = std::abs(overlap(r, c)) > 0 ? wrap_phase(std::arg(overlap(r, c))) : 0.0;
  out.error = max_norm(b - std::polar(1.0, out.phase) * a);
  out.equivalent = out.error <= eps;
  return out;
}

bool is_unitary(const Matrix& m, double eps) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  if (!m.allFinite()) return false;
  return max_norm(m * m.adjoint() - Matrix::Identity(m.rows(), m.cols())) <= eps;
}

void require_unitary(const Matrix& m, const std::string& what, double eps) {
  if (!is_unitary(m, eps)) throw InputError(what + " is not unitary");
}

}  // namespace hermit
