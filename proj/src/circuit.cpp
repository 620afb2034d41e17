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

#include "hermit/circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <utility>

namespace hermit {

namespace {

const std::array<std::pair<GateKind, const char*>, 12> kKindNames{{
    {GateKind::CNOT, "cnot"},
    {GateKind::CZ, "cz"},
    {GateKind::CiY, "ciy"},
    {GateKind::SWAP, "swap"},
    {GateKind::H, "h"},
    {GateKind::X, "x"},
    {GateKind::Phase, "phase"},
    {GateKind::Rot, "rot"},
    {GateKind::Pi, "pi"},
    {GateKind::U2, "u2"},
    {GateKind::McRot, "mcrot"},
    {GateKind::McX, "mcx"},
}};

constexpr double kPlaneEps = 1e-10;

GateOp make(GateKind kind, std::vector<int> qubits) {
  GateOp op;
  op.kind = kind;
  op.qubits = std::move(qubits);
  return op;
}

Mat2 ciy_matrix() {
  Mat2 m;
  m << 0, 1, -1, 0;
  return m;
}

}  // namespace

std::string kind_name(GateKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  throw InputError("unknown gate kind");
}

GateKind kind_from_name(const std::string& name) {
  for (const auto& [k, n] : kKindNames)
    if (name == n) return k;
  throw InputError("unknown gate kind '" + name + "'");
}

GateOp GateOp::cnot(int control, int target) { return make(GateKind::CNOT, {control, target}); }
GateOp GateOp::cz(int a, int b) { return make(GateKind::CZ, {a, b}); }
GateOp GateOp::ciy(int control, int target) { return make(GateKind::CiY, {control, target}); }
GateOp GateOp::swap(int a, int b) { return make(GateKind::SWAP, {a, b}); }
GateOp GateOp::h(int q) { return make(GateKind::H, {q}); }
GateOp GateOp::x(int q) { return make(GateKind::X, {q}); }

GateOp GateOp::phase(int q, double lambda) {
  GateOp op = make(GateKind::Phase, {q});
  op.angle = lambda;
  return op;
}

GateOp GateOp::rot(int q, double lambda, const Axis& axis) {
  GateOp op = make(GateKind::Rot, {q});
  op.angle = lambda;
  op.axis = axis;
  return op;
}

GateOp GateOp::pi(int q, const Axis& axis) {
  GateOp op = make(GateKind::Pi, {q});
  op.axis = axis;
  return op;
}

GateOp GateOp::u2(int q, const Mat2& m) {
  GateOp op = make(GateKind::U2, {q});
  op.matrix = m;
  return op;
}

GateOp GateOp::mc_rot(std::vector<int> controls, int target, double lambda, const Axis& axis, double psi) {
  if (controls.empty()) throw InputError("multi-controlled rotation needs at least one control");
  controls.push_back(target);
  GateOp op = make(GateKind::McRot, std::move(controls));
  op.angle = lambda;
  op.axis = axis;
  op.psi = psi;
  return op;
}

GateOp GateOp::mc_x(std::vector<int> controls, int target) {
  if (controls.empty()) throw InputError("multi-controlled X needs at least one control");
  controls.push_back(target);
  return make(GateKind::McX, std::move(controls));
}

GateOp GateOp::controlled_pi(int control, int target, const Axis& axis, double psi) {
  // Pi(v) = i R_pi(v)
  return mc_rot({control}, target, kPi, axis, wrap_phase(psi + kPi / 2));
}

int GateOp::num_controls() const {
  switch (kind) {
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::CiY:
      return 1;
    case GateKind::McRot:
    case GateKind::McX:
      return static_cast<int>(qubits.size()) - 1;
    default:
      return 0;
  }
}

Mat2 GateOp::target_matrix() const {
  switch (kind) {
    case GateKind::CNOT:
    case GateKind::X:
    case GateKind::McX:
      return gates::x();
    case GateKind::CZ:
      return gates::z();
    case GateKind::CiY:
      return ciy_matrix();
    case GateKind::H:
      return gates::h();
    case GateKind::Phase:
      return phase_gate(angle);
    case GateKind::Rot:
      return rotation_matrix(angle, axis);
    case GateKind::Pi:
      return pi_rotation(axis);
    case GateKind::U2:
      return matrix;
    case GateKind::McRot:
      return std::polar(1.0, psi) * rotation_matrix(angle, axis);
    case GateKind::SWAP:
      break;
  }
  throw InputError("SWAP has no target matrix");
}

Matrix GateOp::local_matrix() const {
  const int k = static_cast<int>(qubits.size());
  const int dim = 1 << k;
  Matrix m = Matrix::Identity(dim, dim);
  if (kind == GateKind::SWAP) {
    m.setZero();
    m(0, 0) = m(3, 3) = m(1, 2) = m(2, 1) = 1;
    return m;
  }
  m.bottomRightCorner(2, 2) = target_matrix();
  return m;
}

Circuit& Circuit::add(const GateOp& op) {
  ops.push_back(op);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.width > width) throw InputError("appended circuit is wider than the host");
  ops.insert(ops.end(), other.ops.begin(), other.ops.end());
  return *this;
}

void validate_ops(const Circuit& c) {
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    const GateOp& op = c.ops[i];
    std::size_t expected = 0;
    switch (op.kind) {
      case GateKind::CNOT:
      case GateKind::CZ:
      case GateKind::CiY:
      case GateKind::SWAP:
        expected = 2;
        break;
      case GateKind::McRot:
      case GateKind::McX:
        expected = std::max<std::size_t>(op.qubits.size(), 2);
        break;
      default:
        expected = 1;
    }
    std::ostringstream msg;
    msg << "op " << i << " (" << kind_name(op.kind) << "): ";
    if (op.qubits.size() != expected) {
      msg << "expected " << expected << " qubits, got " << op.qubits.size();
      throw InputError(msg.str());
    }
    for (std::size_t a = 0; a < op.qubits.size(); ++a) {
      if (op.qubits[a] < 0 || op.qubits[a] >= c.width) {
        msg << "qubit " << op.qubits[a] << " out of range for width " << c.width;
        throw InputError(msg.str());
      }
      for (std::size_t b = 0; b < a; ++b)
        if (op.qubits[a] == op.qubits[b]) {
          msg << "repeated qubit " << op.qubits[a];
          throw InputError(msg.str());
        }
    }
    if (op.kind == GateKind::U2) require_unitary(op.matrix, msg.str() + "matrix");
  }
}

namespace {

// Left-multiplies `state` (rows indexed by basis states) by op embedded in
// the register.
void apply_op(Matrix& state, const GateOp& op, int width) {
  const Matrix local = op.local_matrix();
  const int k = static_cast<int>(op.qubits.size());
  const int dim = 1 << k;
  std::vector<Eigen::Index> masks(k);
  Eigen::Index op_mask = 0;
  for (int m = 0; m < k; ++m) {
    masks[m] = Eigen::Index{1} << (width - 1 - op.qubits[m]);
    op_mask |= masks[m];
  }
  std::vector<Eigen::Index> rows(dim);
  Matrix gathered(dim, state.cols());
  const Eigen::Index total = state.rows();
  for (Eigen::Index base = 0; base < total; ++base) {
    if (base & op_mask) continue;
    for (int j = 0; j < dim; ++j) {
      Eigen::Index idx = base;
      for (int m = 0; m < k; ++m)
        if ((j >> (k - 1 - m)) & 1) idx |= masks[m];
      rows[j] = idx;
      gathered.row(j) = state.row(idx);
    }
    const Matrix updated = local * gathered;
    for (int j = 0; j < dim; ++j) state.row(rows[j]) = updated.row(j);
  }
}

}  // namespace

Matrix circuit_unitary(const Circuit& c) {
  if (c.width < 0 || c.width > kMaxSimWidth) throw InputError("circuit width outside simulator range");
  validate_ops(c);
  const Eigen::Index dim = Eigen::Index{1} << c.width;
  Matrix u = Matrix::Identity(dim, dim);
  for (const GateOp& op : c.ops) apply_op(u, op, c.width);
  return u;
}

Matrix embed(const Mat2& g, int q, int width) {
  Circuit c(width);
  c.add(GateOp::u2(q, g));
  Matrix u = Matrix::Identity(Eigen::Index{1} << width, Eigen::Index{1} << width);
  apply_op(u, c.ops.front(), width);
  return u;
}

PhaseMatch assert_equiv(const Circuit& c, const Matrix& target, double eps) {
  return equiv_up_to_phase(circuit_unitary(c), target, eps);
}

std::vector<ConnectivityViolation> validate_connectivity(const Circuit& c) {
  std::vector<ConnectivityViolation> out;
  if (c.connectivity == Connectivity::AllToAll) return out;
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    const GateOp& op = c.ops[i];
    if (op.qubits.size() < 2) continue;
    std::ostringstream msg;
    if (op.qubits.size() > 2) {
      msg << kind_name(op.kind) << " acts on " << op.qubits.size() << " qubits";
      out.push_back({i, msg.str()});
    } else if (std::abs(op.qubits[0] - op.qubits[1]) != 1) {
      msg << kind_name(op.kind) << " on non-adjacent qubits " << op.qubits[0] << ", " << op.qubits[1];
      out.push_back({i, msg.str()});
    }
  }
  return out;
}

GateCounts count_gates(const Circuit& c) {
  GateCounts n;
  for (const GateOp& op : c.ops) {
    switch (op.kind) {
      case GateKind::CNOT: ++n.cnot; break;
      case GateKind::CZ: ++n.cz; break;
      case GateKind::CiY: ++n.ciy; break;
      case GateKind::SWAP: ++n.swap; break;
      case GateKind::H: ++n.h; break;
      case GateKind::X: ++n.x; break;
      case GateKind::Phase: ++n.phase; break;
      case GateKind::U2: ++n.u2; break;
      case GateKind::McRot: ++n.mc_rot; break;
      case GateKind::McX: ++n.mc_x; break;
      case GateKind::Rot: {
        const Vec3& v = op.axis.vec();
        if (std::abs(v.x()) <= kPlaneEps && std::abs(v.y()) <= kPlaneEps)
          ++n.rot_z;
        else if (std::abs(v.x()) <= kPlaneEps && std::abs(v.z()) <= kPlaneEps)
          ++n.rot_y;
        else
          ++n.rot_other;
        break;
      }
      case GateKind::Pi: {
        ++n.pi;
        const Vec3& v = op.axis.vec();
        const bool y0 = std::abs(v.y()) <= kPlaneEps;
        const bool z0 = std::abs(v.z()) <= kPlaneEps;
        if (y0 && z0)
          ++n.pi_x;
        else if (z0)
          ++n.pi_xy;
        else if (y0)
          ++n.pi_xz;
        break;
      }
    }
  }
  return n;
}

std::string to_text(const Circuit& c) {
  std::ostringstream out;
  out << std::setprecision(6);
  const auto wires = [](const GateOp& op) {
    std::ostringstream w;
    for (std::size_t i = 0; i < op.qubits.size(); ++i) w << (i ? "," : "") << "q" << op.qubits[i];
    return w.str();
  };
  const auto axis_text = [](const Axis& a) {
    const auto [canon, sign] = a.canonical();
    std::ostringstream t;
    t << (sign < 0 ? "-" : "") << "(" << canon.theta() << "," << canon.phi() << ")";
    return t.str();
  };
  for (const GateOp& op : c.ops) {
    switch (op.kind) {
      case GateKind::CNOT: out << "CNOT"; break;
      case GateKind::CZ: out << "CZ"; break;
      case GateKind::CiY: out << "C-iY"; break;
      case GateKind::SWAP: out << "SWAP"; break;
      case GateKind::H: out << "H"; break;
      case GateKind::X: out << "X"; break;
      case GateKind::Phase: out << "P(" << op.angle << ")"; break;
      case GateKind::Rot: out << "R" << axis_text(op.axis) << "(" << op.angle << ")"; break;
      case GateKind::Pi: out << "Pi" << axis_text(op.axis); break;
      case GateKind::U2: out << "U"; break;
      case GateKind::McRot:
        out << "MC-e^{i" << op.psi << "}R" << axis_text(op.axis) << "(" << op.angle << ")";
        break;
      case GateKind::McX: out << "MC-X"; break;
    }
    out << " " << wires(op) << "\n";
  }
  return out.str();
}

Circuit inverse(const Circuit& c) {
  Circuit out = c;
  out.ops.clear();
  for (auto it = c.ops.rbegin(); it != c.ops.rend(); ++it) {
    GateOp op = *it;
    switch (op.kind) {
      case GateKind::Phase:
      case GateKind::Rot:
        op.angle = -op.angle;
        break;
      case GateKind::McRot:
        op.angle = -op.angle;
        op.psi = -op.psi;
        break;
      case GateKind::U2:
        op.matrix = Mat2(op.matrix.adjoint());
        break;
      case GateKind::CiY:
        // (iY)^dagger = -iY = R_pi(y)
        op = GateOp::mc_rot({op.qubits[0]}, op.qubits[1], kPi, Axis::y_axis());
        break;
      default:
        break;
    }
    out.ops.push_back(op);
  }
  return out;
}

}  // namespace hermit
