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

#include "hermit/kak.hpp"

#include <cmath>
#include <limits>

#include "hermit/single_qubit.hpp"

namespace hermit {

namespace {

const Mat4& magic() {
  static const Mat4 m = [] {
    Mat4 out;
    const Complex i = kI;
    out << 1, i, 0, 0,  //
        0, 0, i, 1,     //
        0, 0, i, -1,    //
        1, -i, 0, 0;
    return Mat4(out / std::sqrt(2.0));
  }();
  return m;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

// Real orthogonal O with O^T P O diagonal, for complex symmetric unitary P.
// Re P and Im P commute, so a generic real combination has their common
// eigenbasis; a few fixed coefficients are tried and the cleanest kept.
Eigen::Matrix4d real_diagonalizer(const Mat4& p) {
  static constexpr double kCoefficients[] = {1.0, 0.6180339887498949, 1.4142135623730951, 2.718281828459045,
                                             0.3183098861837907, 5.196152422706632};
  Eigen::Matrix4d best;
  double best_residual = std::numeric_limits<double>::infinity();
  for (double c : kCoefficients) {
    const Eigen::Matrix4d sym = p.real() + c * p.imag();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(sym);
    const Eigen::Matrix4d o = solver.eigenvectors();
    Mat4 d = o.transpose().cast<Complex>() * p * o.cast<Complex>();
    d.diagonal().setZero();
    const double residual = d.cwiseAbs().maxCoeff();
    if (residual < best_residual) {
      best_residual = residual;
      best = o;
    }
  }
  if (best.determinant() < 0) best.col(0) *= -1;
  return best;
}

CanonicalCoords canonical_coords(const Eigen::Vector4cd& h) {
  static const Eigen::Matrix4d system = [] {
    const Mat4 xx = kron(gates::x(), gates::x());
    const Mat4 yy = kron(gates::y(), gates::y());
    const Mat4 zz = kron(gates::z(), gates::z());
    Eigen::Matrix4d s;
    for (int j = 0; j < 4; ++j) {
      const Eigen::Vector4cd col = magic().col(j);
      s(j, 0) = (col.adjoint() * xx * col)(0).real();
      s(j, 1) = (col.adjoint() * yy * col)(0).real();
      s(j, 2) = (col.adjoint() * zz * col)(0).real();
      s(j, 3) = 1.0;
    }
    return s;
  }();
  Eigen::Vector4d args;
  for (int j = 0; j < 4; ++j) args(j) = std::arg(h(j));
  const Eigen::Vector4d x = system.partialPivLu().solve(args);
  return {x(0), x(1), x(2), x(3)};
}

Mat2 s_gate() { return gates::s(); }
Axis pi_s_axis() { return Axis::spherical(kPi / 2, kPi / 4); }
Axis h_axis() { return Axis::spherical(kPi / 4, 0); }

Mat2 adj(const Mat2& m) { return m.adjoint(); }

Su4PiParams params_from_factors(const KakFactors& f) {
  Su4PiParams p;
  const Mat2 d_prime = adj(s_gate()) * f.d;
  const Mat2 c_prime = pi_rotation(pi_s_axis()) * f.c;
  p.v[3] = Axis::spherical(kPi / 2, kPi / 4 + f.theta3 / 2);
  p.v[2] = rotate_axis(h_axis(), Axis::y_axis(), -f.theta1 / 2);
  p.v[4] = rotate_axis(h_axis(), Axis::y_axis(), f.theta2 / 2);
  const TwoPiFactorization bd = two_pi_factorize(f.b * d_prime);
  const TwoPiFactorization ac = two_pi_factorize(f.a * c_prime);
  p.v[0] = bd.v1;
  p.v[5] = bd.v2;
  p.v[1] = ac.v1;
  p.v[6] = ac.v2;
  p.u1 = special_unitary(d_prime * pi_rotation(p.v[0]));
  p.u2 = special_unitary(c_prime * pi_rotation(p.v[1]));
  return p;
}

}  // namespace

Mat4 canonical_gate(double a, double b, double c) {
  // XX, YY, ZZ commute and square to I.
  const Mat4 xx = kron(gates::x(), gates::x());
  const Mat4 yy = kron(gates::y(), gates::y());
  const Mat4 zz = kron(gates::z(), gates::z());
  const auto expi = [](double t, const Mat4& p) -> Mat4 {
    return std::cos(t) * Mat4::Identity() + kI * std::sin(t) * p;
  };
  return expi(a, xx) * expi(b, yy) * expi(c, zz);
}

std::pair<Mat2, Mat2> tensor_factor(const Mat4& k) {
  // r((i1, j1), (i2, j2)) = A(i1, j1) B(i2, j2)
  Mat4 r;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) r(2 * i1 + j1, 2 * i2 + j2) = k(2 * i1 + i2, 2 * j1 + j2);
  Eigen::Index p = 0, q = 0;
  r.cwiseAbs().maxCoeff(&p, &q);
  Mat2 a, b;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      a(i, j) = r(2 * i + j, q);
      b(i, j) = r(p, 2 * i + j) / r(p, q);
    }
  return {special_unitary(a), special_unitary(b)};
}

Circuit kak_circuit(const KakFactors& f, int t1, int t2, int width) {
  Circuit c(width);
  c.add(GateOp::u2(t1, f.d)).add(GateOp::u2(t2, f.c));
  c.add(GateOp::cnot(t1, t2));
  c.add(GateOp::ry(t1, f.theta1)).add(GateOp::rz(t2, f.theta3));
  c.add(GateOp::cnot(t2, t1));
  c.add(GateOp::ry(t1, f.theta2));
  c.add(GateOp::cnot(t1, t2));
  c.add(GateOp::u2(t1, f.b)).add(GateOp::u2(t2, f.a));
  return c;
}

KakFactors kak_factorize(const Matrix& v) {
  if (v.rows() != 4 || v.cols() != 4) throw InputError("KAK factorization needs a 4x4 matrix");
  require_unitary(v, "two-qubit operator");
  const Mat4 u = v * std::pow(v.determinant(), -0.25);
  const Mat4& m = magic();
  const Mat4 up = m.adjoint() * u * m;
  const Mat4 p = up.transpose() * up;
  const Eigen::Matrix4d o = real_diagonalizer(p);
  const Mat4 oc = o.cast<Complex>();
  Eigen::Vector4cd h = (oc.transpose() * p * oc).diagonal().cwiseSqrt();
  // det up = 1 forces prod h = +-1; pick the sign that keeps K1 in SO(4).
  if (h.prod().real() < 0) h(0) = -h(0);
  const Mat4 k1_magic = up * oc * h.cwiseInverse().asDiagonal();
  const Mat4 k1 = m * k1_magic * m.adjoint();
  const Mat4 k2 = m * oc.transpose() * m.adjoint();
  const auto [l1a, l1b] = tensor_factor(k1);
  const auto [l2a, l2b] = tensor_factor(k2);
  const CanonicalCoords can = canonical_coords(h);

  // CNOT12 (Ry(t2) x I) CNOT21 (Ry(t1) x Rz(t3)) CNOT12
  //   = e^{-i pi/4} (W x I) Can(pi/4 - t2/2, pi/4 + t1/2, pi/4 - t3/2) (I x W^dagger)
  // with W = Rz(pi/2).
  const Mat2 w = rotation_matrix(kPi / 2, Axis::z_axis());
  KakFactors f;
  f.theta2 = kPi / 2 - 2 * can.a;
  f.theta1 = 2 * can.b - kPi / 2;
  f.theta3 = kPi / 2 - 2 * can.c;
  f.b = l1a * w.adjoint();
  f.a = l1b;
  f.d = l2a;
  f.c = w * l2b;
  const PhaseMatch match = assert_equiv(kak_circuit(f), v);
  if (!match.equivalent) throw SynthesisError("KAK reconstruction failed");
  f.gamma = match.phase;
  return f;
}

Circuit su4_pi_circuit(const Su4PiParams& p, int t1, int t2, int width) {
  Circuit c(width);
  c.add(GateOp::pi(t1, p.v[0])).add(GateOp::pi(t2, p.v[1]));
  c.add(GateOp::u2(t1, p.u1)).add(GateOp::u2(t2, p.u2));
  c.add(GateOp::ciy(t1, t2));
  c.add(GateOp::pi(t1, p.v[2])).add(GateOp::pi(t2, p.v[3]));
  c.add(GateOp::cz(t1, t2));
  c.add(GateOp::pi(t1, p.v[4]));
  c.add(GateOp::cnot(t1, t2));
  c.add(GateOp::u2(t1, p.u1.adjoint())).add(GateOp::u2(t2, p.u2.adjoint()));
  c.add(GateOp::pi(t1, p.v[5])).add(GateOp::pi(t2, p.v[6]));
  return c;
}

Su4Attempt try_su4_to_pi_params(const Mat4& u, double eps) {
  if (std::abs(u.determinant() - Complex(1.0)) > tol::kCircuit) throw InputError("operator is not in SU(4)");
  KakFactors f = kak_factorize(u);
  Su4Attempt best;
  best.error = std::numeric_limits<double>::infinity();
  // The rebuilt circuit lies in SU(4) and is proportional to u, so it is
  // u times a power of i. Shifting every canonical coordinate by pi/2
  // multiplies the core by i and the sign of v7 supplies -1; one of the
  // combinations is exact.
  for (int shift = 0; shift < 2; ++shift) {
    if (shift == 1) {
      f.theta1 += kPi;
      f.theta2 -= kPi;
      f.theta3 -= kPi;
    }
    Su4PiParams p = params_from_factors(f);
    for (int flip = 0; flip < 2; ++flip) {
      if (flip == 1) p.v[6] = -p.v[6];
      const double err = max_norm(circuit_unitary(su4_pi_circuit(p)) - u);
      if (err < best.error) {
        best.error = err;
        best.params = p;
      }
    }
  }
  if (best.error > eps) best.params.reset();
  return best;
}

Su4PiParams su4_to_pi_params(const Mat4& u, double eps) {
  Su4Attempt attempt = try_su4_to_pi_params(u, eps);
  if (!attempt.params) throw SynthesisError("no exact pi-rotation form for this SU(4) element");
  return *attempt.params;
}

PhaseSelection phase_select(const Matrix& v, double eps) {
  if (v.rows() != 4 || v.cols() != 4) throw InputError("phase selection needs a 4x4 matrix");
  require_unitary(v, "two-qubit operator");
  PhaseSelection out;
  bool found = false;
  const double base = std::arg(v.determinant());
  for (int k = 0; k < 4; ++k) {
    BranchOutcome branch;
    branch.k = k;
    branch.phi = (base + 2 * kPi * k) / 4;
    const Mat4 u = std::polar(1.0, -branch.phi) * v;
    const Su4Attempt attempt = try_su4_to_pi_params(u, eps);
    branch.error = attempt.error;
    branch.accepted = attempt.params.has_value();
    if (branch.accepted && !found) {
      found = true;
      out.phi = branch.phi;
      out.u = u;
      out.params = *attempt.params;
    }
    out.branches.push_back(branch);
  }
  if (!found) throw SynthesisError("no phase branch admits an exact pi-rotation form");
  return out;
}

}  // namespace hermit
