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

#include "hermit/hermitian_sets.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "hermit/single_qubit.hpp"

namespace hermit {

namespace {

constexpr double kEps = 1e-12;

const std::array<std::pair<GateSet, const char*>, 9> kSetNames{{
    {GateSet::UniversalU, "universal-u"},
    {GateSet::UniversalHRz, "universal-hrz"},
    {GateSet::CliffordT, "clifford-t"},
    {GateSet::Clifford, "clifford"},
    {GateSet::HermitianPi, "hermitian-pi"},
    {GateSet::HermitianHPi, "hermitian-hpi"},
    {GateSet::HermitianHPiT, "hermitian-hpit"},
    {GateSet::HermitianHPiTX, "hermitian-hpit-x"},
    {GateSet::HermitianHPiSX, "hermitian-hpis-x"},
}};

bool is_pi_about(const GateOp& op, const Axis& axis) {
  return op.kind == GateKind::Pi && op.axis.near(axis, kEps);
}

bool is_x(const GateOp& op) { return op.kind == GateKind::X || is_pi_about(op, Axis::x_axis()); }
bool is_h(const GateOp& op) { return op.kind == GateKind::H || is_pi_about(op, h_axis()); }

// lambda = k * step (mod 2 pi) for an integer k in [0, 2 pi / step).
std::optional<int> multiple_of(double lambda, double step) {
  const double r = lambda / step;
  const double k = std::round(r);
  if (std::abs(r - k) * step > kEps) return std::nullopt;
  const int n = static_cast<int>(std::lround(2 * kPi / step));
  return ((static_cast<int>(k) % n) + n) % n;
}

// phi of an axis in the xy plane, reduced to [0, pi) via v ~ -v.
std::optional<double> equator_phi(const Axis& axis) {
  if (std::abs(axis.z()) > kEps) return std::nullopt;
  double phi = std::atan2(axis.y(), axis.x());
  if (phi < -kEps) phi += kPi;
  if (phi >= kPi - kEps) phi -= kPi;
  return std::max(phi, 0.0);
}

bool is_canonical_pi(const GateOp& op) {
  if (op.kind != GateKind::Pi) return false;
  const auto [canon, sign] = op.axis.canonical();
  return sign > 0;
}

Mat2 op_matrix(const GateOp& op) { return op.target_matrix(); }

// A run of single-qubit ops on one wire, in time order.
using Run = std::vector<GateOp>;

Mat2 run_matrix(const Run& run) {
  Mat2 m = Mat2::Identity();
  for (const GateOp& op : run) m = op_matrix(op) * m;
  return m;
}

class Rewriter {
 public:
  explicit Rewriter(GateSet target) : target_(target) {}

  double phase() const { return phase_; }

  // Appends `replacement` for the single-qubit operator u, recording the
  // phase with u = e^{i p} replacement.
  void emit_single(Circuit& out, const Mat2& u, const Run& replacement) {
    const PhaseMatch m = equiv_up_to_phase(run_matrix(replacement), u, 1e-9);
    if (!m.equivalent) throw SynthesisError("single-qubit rewrite does not reproduce its gate");
    phase_ += m.phase;
    for (const GateOp& op : replacement) out.add(op);
  }

  Run rewrite(int q, const GateOp& op) const {
    if (in_gate_set(op, target_)) return {op};
    const Mat2 u = op_matrix(op);
    switch (target_) {
      case GateSet::HermitianPi: return to_pi(q, u);
      case GateSet::HermitianHPi: return to_hpi(q, u);
      case GateSet::HermitianHPiT:
      case GateSet::HermitianHPiTX: return to_discrete(q, u, pi_t_axis(), kPi / 4);
      case GateSet::HermitianHPiSX: return to_discrete(q, u, pi_s_axis(), kPi / 2);
      default: break;
    }
    throw InputError("hermitize needs a Hermitian target set");
  }

 private:
  static GateOp canonical_pi(int q, const Axis& v) { return GateOp::pi(q, v.canonical().first); }

  Run to_pi(int q, const Mat2& u) const {
    const AxisAngleForm form = to_axis_angle(u);
    if (form.lambda == 0.0) return {};
    if (std::abs(u.trace()) <= 1e-11) return {canonical_pi(q, form.axis)};
    const TwoPiFactorization f = two_pi_factorize(u);
    return {canonical_pi(q, f.v1), canonical_pi(q, f.v2)};
  }

  // Rz(lambda) from X and Pi(pi/2, phi), phi in [0, pi/2]:
  // Pi(pi/2, phi) X = Rz(2 phi), X Pi(pi/2, phi) = Rz(-2 phi).
  static Run rz_hpi(int q, double lambda) {
    lambda = wrap_phase(lambda);
    if (std::abs(lambda) < kEps) return {};
    const GateOp x = GateOp::pi(q, Axis::x_axis());
    if (lambda > 0) return {x, GateOp::pi(q, Axis::spherical(kPi / 2, lambda / 2))};
    return {GateOp::pi(q, Axis::spherical(kPi / 2, -lambda / 2)), x};
  }

  Run to_hpi(int q, const Mat2& u) const {
    if (equiv_up_to_phase(gates::h(), u, kEps).equivalent) return {GateOp::h(q)};
    const EulerAngles e = euler_decompose(u, EulerConvention::ZYZ);
    const auto& a = e.angles;
    Run out;
    const auto append = [&out](const Run& r) { out.insert(out.end(), r.begin(), r.end()); };
    if (std::abs(a[1]) < kEps) {
      append(rz_hpi(q, a[0] + a[2]));
      return out;
    }
    // Ry(b) = Rz(pi/2) H Rz(b) H Rz(-pi/2) up to phase
    append(rz_hpi(q, a[2] - kPi / 2));
    out.push_back(GateOp::h(q));
    append(rz_hpi(q, a[1]));
    out.push_back(GateOp::h(q));
    append(rz_hpi(q, a[0] + kPi / 2));
    return out;
  }

  // Discrete sets: P(k step) via Pi_step X, Z via H X H, X and Y directly.
  static Run to_discrete(int q, const Mat2& u, const Axis& pi_axis, double step) {
    if (equiv_up_to_phase(gates::h(), u, kEps).equivalent) return {GateOp::h(q)};
    if (equiv_up_to_phase(gates::x(), u, kEps).equivalent) return {GateOp::x(q)};
    if (equiv_up_to_phase(gates::y(), u, kEps).equivalent)
      return {GateOp::h(q), GateOp::x(q), GateOp::h(q), GateOp::x(q)};
    const bool diagonal = std::abs(u(0, 1)) < kEps && std::abs(u(1, 0)) < kEps;
    if (!diagonal) throw InputError("gate is outside the group generated by the target set");
    const auto k = multiple_of(std::arg(u(1, 1) / u(0, 0)), step);
    if (!k) throw InputError("phase angle is not a multiple of the target set's step");
    const int n = static_cast<int>(std::lround(2 * kPi / step));
    if (*k == 0) return {};
    if (2 * *k == n) return {GateOp::h(q), GateOp::x(q), GateOp::h(q)};
    Run out;
    const GateOp p = GateOp::pi(q, pi_axis);
    if (2 * *k < n) {
      for (int i = 0; i < *k; ++i) out.insert(out.end(), {GateOp::x(q), p});
    } else {
      for (int i = 0; i < n - *k; ++i) out.insert(out.end(), {p, GateOp::x(q)});
    }
    return out;
  }

  GateSet target_;
  double phase_ = 0.0;
};

void lower_two_qubit(const GateOp& op, Circuit& out) {
  const int a = op.qubits[0];
  const int b = op.qubits[1];
  switch (op.kind) {
    case GateKind::CNOT: out.add(op); return;
    case GateKind::CZ:
      out.add(GateOp::h(b)).add(GateOp::cnot(a, b)).add(GateOp::h(b));
      return;
    case GateKind::SWAP:
      out.add(GateOp::cnot(a, b)).add(GateOp::cnot(b, a)).add(GateOp::cnot(a, b));
      return;
    case GateKind::CiY:
      // iY = Z X
      out.add(GateOp::cnot(a, b)).add(GateOp::h(b)).add(GateOp::cnot(a, b)).add(GateOp::h(b));
      return;
    default: break;
  }
  throw InputError("hermitize does not handle multi-controlled gates");
}

}  // namespace

std::string gate_set_name(GateSet set) {
  for (const auto& [s, name] : kSetNames)
    if (s == set) return name;
  throw InputError("unknown gate set");
}

GateSet gate_set_from_name(const std::string& name) {
  for (const auto& [s, n] : kSetNames)
    if (name == n) return s;
  throw InputError("unknown gate set '" + name + "'");
}

std::vector<GateSet> all_gate_sets() {
  std::vector<GateSet> out;
  for (const auto& entry : kSetNames) out.push_back(entry.first);
  return out;
}

bool is_hermitian_set(GateSet set) {
  switch (set) {
    case GateSet::HermitianPi:
    case GateSet::HermitianHPi:
    case GateSet::HermitianHPiT:
    case GateSet::HermitianHPiTX:
    case GateSet::HermitianHPiSX: return true;
    default: return false;
  }
}

Axis pi_s_axis() { return Axis::spherical(kPi / 2, kPi / 4); }
Axis pi_t_axis() { return Axis::spherical(kPi / 2, kPi / 8); }
Axis h_axis() { return Axis::spherical(kPi / 4, 0); }

bool in_gate_set(const GateOp& op, GateSet set) {
  if (op.kind == GateKind::CNOT) return true;
  if (!op.is_single_qubit()) return false;
  switch (set) {
    case GateSet::UniversalU: return true;
    case GateSet::UniversalHRz:
      return op.kind == GateKind::H || op.kind == GateKind::Phase ||
             (op.kind == GateKind::Rot && op.axis.near(Axis::z_axis(), kEps));
    case GateSet::CliffordT:
      return op.kind == GateKind::H || (op.kind == GateKind::Phase && multiple_of(op.angle, kPi / 4));
    case GateSet::Clifford:
      return op.kind == GateKind::H || (op.kind == GateKind::Phase && multiple_of(op.angle, kPi / 2));
    case GateSet::HermitianPi:
      return op.kind == GateKind::H || op.kind == GateKind::X || is_canonical_pi(op);
    case GateSet::HermitianHPi: {
      if (op.kind == GateKind::H || op.kind == GateKind::X) return true;
      if (!is_canonical_pi(op)) return false;
      const auto phi = equator_phi(op.axis);
      return phi && *phi <= kPi / 2 + kEps;
    }
    case GateSet::HermitianHPiT: return is_h(op) || is_pi_about(op, pi_t_axis());
    case GateSet::HermitianHPiTX: return is_h(op) || is_x(op) || is_pi_about(op, pi_t_axis());
    case GateSet::HermitianHPiSX: return is_h(op) || is_x(op) || is_pi_about(op, pi_s_axis());
  }
  return false;
}

bool circuit_in_gate_set(const Circuit& c, GateSet set) {
  for (const GateOp& op : c.ops)
    if (!in_gate_set(op, set)) return false;
  return true;
}

Circuit cancel_x_pairs(const Circuit& c) {
  std::vector<GateOp> ops = c.ops;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < ops.size() && !changed; ++i) {
      if (!ops[i].is_single_qubit() || !is_x(ops[i])) continue;
      const int q = ops[i].target();
      for (std::size_t j = i + 1; j < ops.size(); ++j) {
        const GateOp& op = ops[j];
        const bool touches = std::find(op.qubits.begin(), op.qubits.end(), q) != op.qubits.end();
        if (!touches) continue;
        if (op.is_single_qubit() && is_x(op)) {
          ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(j));
          ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        // X on the target commutes with CNOT.
        if (op.kind == GateKind::CNOT && op.target() == q) continue;
        break;
      }
    }
  }
  Circuit out = c;
  out.ops = std::move(ops);
  return out;
}

HermitizeResult hermitize(const Circuit& c, GateSet target) {
  if (!is_hermitian_set(target)) throw InputError("hermitize needs a Hermitian target set");
  validate_ops(c);
  Circuit lowered(c.width, c.connectivity);
  lowered.ancilla = c.ancilla;
  for (const GateOp& op : c.ops) {
    if (op.is_single_qubit())
      lowered.add(op);
    else
      lower_two_qubit(op, lowered);
  }

  Rewriter rewriter(target);
  Circuit out(c.width, c.connectivity);
  out.ancilla = c.ancilla;
  for (const GateOp& op : lowered.ops) {
    if (!op.is_single_qubit()) {
      out.add(op);
      continue;
    }
    rewriter.emit_single(out, op.target_matrix(), rewriter.rewrite(op.target(), op));
  }
  out = cancel_x_pairs(out);

  if (target == GateSet::HermitianHPiT) {
    Circuit rebuilt(out.width, out.connectivity);
    rebuilt.ancilla = out.ancilla;
    for (const GateOp& op : out.ops) {
      if (op.is_single_qubit() && is_x(op)) {
        if (!out.ancilla) throw InputError("an X gate remains; {CNOT, H, Pi_T} needs a declared ancilla wire");
        if (*out.ancilla == op.target()) throw InputError("an X gate remains on the ancilla wire");
        rebuilt.append(x_via_ancilla_cnot_pit(op.target(), *out.ancilla, out.width));
      } else {
        rebuilt.add(op);
      }
    }
    out = std::move(rebuilt);
  }

  HermitizeResult result;
  result.report.global_phase = wrap_phase(rewriter.phase());
  result.report.counts = count_gates(out);
  result.report.error = -1.0;
  if (c.width <= kMaxSimWidth) {
    const Matrix diff = circuit_unitary(c) - std::polar(1.0, result.report.global_phase) * circuit_unitary(out);
    result.report.error = max_norm(diff);
    if (result.report.error > tol::kCircuit) throw SynthesisError("hermitized circuit differs from its input");
  }
  result.circuit = std::move(out);
  return result;
}

Circuit x_via_ancilla_cnot_pit(int q, int a, int width) {
  Circuit c(width);
  c.ancilla = a;
  const GateOp p = GateOp::pi(a, pi_t_axis());
  c.add(GateOp::cnot(a, q)).add(p).add(GateOp::cnot(a, q)).add(p);
  return c;
}

Circuit x_via_ancilla_cnot_h(int q, int a, int width) {
  Circuit c(width);
  c.ancilla = a;
  for (int i = 0; i < 2; ++i) {
    c.add(GateOp::cnot(a, q)).add(GateOp::h(q)).add(GateOp::cnot(q, a)).add(GateOp::h(q));
  }
  return c;
}

std::vector<std::string> builtin_names() {
  return {"toffoli_hermitian_cliffordT", "toffoli_minimal_hermitian", "x_via_ancilla_cnot_pit",
          "x_via_ancilla_cnot_h"};
}

Circuit builtin(const std::string& name) {
  const GateOp pt0 = GateOp::pi(0, pi_t_axis());
  const GateOp pt1 = GateOp::pi(1, pi_t_axis());
  const GateOp pt2 = GateOp::pi(2, pi_t_axis());
  if (name == "toffoli_hermitian_cliffordT") {
    // t = 0, c1 = 1, c2 = 2
    Circuit c(3);
    c.add(GateOp::h(0)).add(GateOp::cnot(1, 2));
    c.add(GateOp::cnot(0, 1));
    c.add(pt1).add(pt2);
    c.add(GateOp::cnot(0, 1));
    c.add(GateOp::cnot(0, 2));
    c.add(GateOp::x(0)).add(pt1).add(pt2);
    c.add(GateOp::cnot(1, 2));
    c.add(pt0).add(pt2);
    c.add(GateOp::cnot(0, 2));
    c.add(GateOp::h(0)).add(pt2);
    return c;
  }
  if (name == "toffoli_minimal_hermitian") {
    // c1 = 0, c2 = 1, t = 2
    Circuit c(3);
    c.add(GateOp::h(2));
    c.add(GateOp::cnot(1, 2));
    c.add(GateOp::cnot(0, 1));
    c.add(pt1).add(pt2);
    c.add(GateOp::cnot(0, 1));
    c.add(GateOp::cnot(2, 0));
    c.add(pt0).add(pt1);
    c.add(GateOp::cnot(1, 0));
    c.add(GateOp::cnot(1, 2));
    c.add(pt0).add(pt2);
    c.add(GateOp::cnot(2, 0));
    c.add(pt0).add(GateOp::h(2));
    return c;
  }
  if (name == "x_via_ancilla_cnot_pit") return x_via_ancilla_cnot_pit(0, 1, 2);
  if (name == "x_via_ancilla_cnot_h") return x_via_ancilla_cnot_h(0, 1, 2);
  throw InputError("unknown builtin '" + name + "'");
}

}  // namespace hermit
