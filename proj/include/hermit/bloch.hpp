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

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace hermit {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Matrix = Eigen::MatrixXcd;
using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Default numerical tolerances. Every public entry point that compares
/// matrices takes an explicit tolerance defaulting to one of these.
namespace tol {
inline constexpr double kUnitarity = 1e-10;
inline constexpr double kIdentity = 1e-12;
inline constexpr double kCircuit = 1e-9;
inline constexpr double kAxisNorm = 1e-12;
}  // namespace tol

/// Raised for malformed caller input (non-unit axes, non-unitary matrices,
/// dimension mismatches, violated preconditions).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a synthesis routine cannot reproduce its target. This
/// indicates a bug rather than a class of inputs.
class SynthesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A real unit vector on the Bloch sphere.
///
/// Spherical view: v(theta, phi) = (sin theta cos phi, sin theta sin phi,
/// cos theta).
class Axis {
 public:
  /// Throws InputError unless x^2 + y^2 + z^2 = 1 within tol::kAxisNorm.
  Axis(double x, double y, double z);

  /// Rescales a nonzero vector onto the sphere.
  static Axis normalized(const Vec3& v);
  static Axis normalized(double x, double y, double z) { return normalized(Vec3(x, y, z)); }
  static Axis spherical(double theta, double phi);

  static Axis x_axis() { return Axis(1, 0, 0); }
  static Axis y_axis() { return Axis(0, 1, 0); }
  static Axis z_axis() { return Axis(0, 0, 1); }

  double x() const { return v_.x(); }
  double y() const { return v_.y(); }
  double z() const { return v_.z(); }
  const Vec3& vec() const { return v_; }

  double theta() const;
  double phi() const;

  Axis operator-() const { return Axis(-v_, Unchecked{}); }
  double dot(const Axis& other) const { return v_.dot(other.v_); }
  bool near(const Axis& other, double eps) const { return (v_ - other.v_).cwiseAbs().maxCoeff() <= eps; }

  /// Representative of {v, -v} with theta, phi in [0, pi), plus the sign
  /// relating it to *this (Pi(-v) = -Pi(v), so callers must keep the sign).
  std::pair<Axis, int> canonical() const;

 private:
  struct Unchecked {};
  Axis(const Vec3& v, Unchecked) : v_(v) {}

  Vec3 v_;
};

/// Wraps an angle into (-pi, pi].
double wrap_phase(double angle);

/// Normalizes a rotation angle so that angle/2 lies in (-pi, pi].
double normalize_rotation_angle(double angle);

/// exp(-i lambda v.sigma / 2).
Mat2 rotation_matrix(double lambda, const Axis& axis);

/// The Hermitian pi-rotation i R_pi(v).
Mat2 pi_rotation(const Axis& axis);
Mat2 pi_rotation(double theta, double phi);

/// diag(1, e^{i lambda}).
Mat2 phase_gate(double lambda);

/// Rodrigues rotation of `axis` about `about` by `angle`.
Axis rotate_axis(const Axis& axis, const Axis& about, double angle);

namespace gates {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
Mat2 h();
Mat2 s();
Mat2 t();
}  // namespace gates

struct PhaseMatch {
  bool equivalent = false;
  /// b ~= e^{i phase} a
  double phase = 0.0;
  /// max-norm of b - e^{i phase} a
  double error = 0.0;
};

/// Compares a and b up to a global phase. The phase is the argument of the
/// largest-magnitude entry of a^dagger b.
PhaseMatch equiv_up_to_phase(const Matrix& a, const Matrix& b, double eps = tol::kCircuit);

double max_norm(const Matrix& m);
bool is_unitary(const Matrix& m, double eps = tol::kUnitarity);
void require_unitary(const Matrix& m, const std::string& what, double eps = tol::kUnitarity);

}  // namespace hermit
