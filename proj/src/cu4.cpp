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

#include "hermit/cu4.hpp"

#include <cmath>
#include <optional>
#include <utility>

#include "hermit/controlled.hpp"
#include "hermit/single_qubit.hpp"

namespace hermit {

namespace {

constexpr int kC = 0;
constexpr int kT1 = 1;
constexpr int kT2 = 2;
constexpr double kPlaneEps = 1e-10;
constexpr double kZeroAngle = 1e-12;

// C-(e^{i psi} Pi(axis)) read back from a McRot op.
struct ControlledPiView {
  int control;
  int target;
  Axis axis;
  double psi;
};

std::optional<ControlledPiView> as_controlled_pi(const GateOp& op) {
  if (op.kind != GateKind::McRot || op.qubits.size() != 2) return std::nullopt;
  if (std::abs(wrap_phase(op.angle - kPi)) > 1e-12) return std::nullopt;
  return ControlledPiView{op.qubits[0], op.qubits[1], op.axis, wrap_phase(op.psi - kPi / 2)};
}

// A controlled gate split around its single CNOT.
struct Block {
  std::vector<GateOp> pre;
  GateOp cnot;
  std::vector<GateOp> post;
};

Block split_block(const Circuit& c) {
  Block b;
  bool seen = false;
  for (const GateOp& op : c.ops) {
    if (op.kind == GateKind::CNOT) {
      if (seen) throw SynthesisError("controlled block has more than one CNOT");
      b.cnot = op;
      seen = true;
    } else {
      (seen ? b.post : b.pre).push_back(op);
    }
  }
  if (!seen) throw SynthesisError("controlled block has no CNOT");
  return b;
}

// C-Pi(v) without its phase.
Block pure_cpi_block(int control, int target, const Axis& v, BasisKind basis) {
  if (basis == BasisKind::ControlledPi || basis == BasisKind::Pi)
    return split_block(controlled_pi_one_cnot({v, 0.0, control, target}));
  if (std::abs(v.z()) <= kPlaneEps)
    return split_block(cpi_planar({control}, target, v, Axis::x_axis(), Axis::z_axis(), std::atan2(v.y(), v.x())));
  if (std::abs(v.y()) <= kPlaneEps)
    return split_block(cpi_planar({control}, target, v, Axis::x_axis(), Axis::y_axis(), std::atan2(-v.z(), v.x())));
  return split_block(cpi_to_zy({control}, target, v));
}

Block cpi_block(const ControlledPiView& g, BasisKind basis) {
  Block b = pure_cpi_block(g.control, g.target, g.axis, basis);
  if (std::abs(g.psi) > kZeroAngle) {
    const GateOp phase = basis == BasisKind::ControlledPi ? GateOp::phase(g.control, g.psi)
                                                          : GateOp::rz(g.control, g.psi);
    b.pre.insert(b.pre.begin(), phase);
  }
  return b;
}

Block ciy_block(int control, int target, BasisKind basis) {
  if (basis == BasisKind::ControlledPi) return cpi_block({control, target, Axis::y_axis(), kPi / 2}, basis);
  // S on the control commutes with the CNOT and is placed first.
  Block b;
  b.pre = {GateOp::rz(control, kPi / 2), GateOp::rz(target, -kPi / 2)};
  b.cnot = GateOp::cnot(control, target);
  b.post = {GateOp::rz(target, kPi / 2)};
  return b;
}

// CZ(a, b) with the CNOT controlled by b.
Block cz_block(int a, int b, BasisKind basis) {
  if (basis == BasisKind::ControlledPi) return cpi_block({b, a, Axis::z_axis(), 0.0}, basis);
  Block out;
  out.pre = {GateOp::ry(a, kPi / 2)};
  out.cnot = GateOp::cnot(b, a);
  out.post = {GateOp::ry(a, -kPi / 2)};
  return out;
}

void emit(Circuit& out, const Block& b) {
  for (const GateOp& op : b.pre) out.add(op);
  out.add(b.cnot);
  for (const GateOp& op : b.post) out.add(op);
}

// Fan-out pair: both pre parts, both CNOTs, both post parts.
void emit_pair(Circuit& out, const Block& first, const Block& second) {
  for (const GateOp& op : first.pre) out.add(op);
  for (const GateOp& op : second.pre) out.add(op);
  out.add(first.cnot).add(second.cnot);
  for (const GateOp& op : first.post) out.add(op);
  for (const GateOp& op : second.post) out.add(op);
}

Circuit expand(const Circuit& skeleton, BasisKind basis) {
  Circuit out(skeleton.width);
  out.ancilla = skeleton.ancilla;
  const auto& ops = skeleton.ops;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const GateOp& op = ops[i];
    if (const auto g = as_controlled_pi(op)) {
      const auto next = i + 1 < ops.size() ? as_controlled_pi(ops[i + 1]) : std::nullopt;
      if (next && next->control == g->control && next->target != g->target) {
        emit_pair(out, cpi_block(*g, basis), cpi_block(*next, basis));
        ++i;
      } else {
        emit(out, cpi_block(*g, basis));
      }
      continue;
    }
    switch (op.kind) {
      case GateKind::CiY:
        emit(out, ciy_block(op.qubits[0], op.qubits[1], basis));
        break;
      case GateKind::CZ:
        emit(out, cz_block(op.qubits[0], op.qubits[1], basis));
        break;
      case GateKind::Phase:
        out.add(basis == BasisKind::ControlledPi ? op : GateOp::rz(op.qubits[0], op.angle));
        break;
      case GateKind::McRot:
      case GateKind::McX:
      case GateKind::SWAP:
        throw InputError("rewrite_basis: unsupported gate " + kind_name(op.kind));
      default:
        out.add(op);
    }
  }
  return out;
}

// R_lambda(axis) up to phase with lambda in (-pi, pi].
std::pair<double, Axis> rotation_of(const Mat2& m) {
  const AxisAngleForm form = to_axis_angle(m);
  const double lambda = form.lambda > kPi ? form.lambda - 2 * kPi : form.lambda;
  return {lambda, form.axis};
}

std::vector<GateOp> resynthesize(const Mat2& m, int q, BasisKind basis) {
  std::vector<GateOp> out;
  const auto [lambda, axis] = rotation_of(m);
  if (std::abs(lambda) < kZeroAngle) return out;
  switch (basis) {
    case BasisKind::ZY: {
      if (axis.near(Axis::z_axis(), kZeroAngle)) {
        out.push_back(GateOp::rz(q, lambda));
      } else if (axis.near(Axis::y_axis(), kZeroAngle)) {
        out.push_back(GateOp::ry(q, lambda));
      } else {
        const EulerAngles e = euler_decompose(m, EulerConvention::ZYZ);
        if (std::abs(e.angles[2]) > kZeroAngle) out.push_back(GateOp::rz(q, e.angles[2]));
        if (std::abs(e.angles[1]) > kZeroAngle) out.push_back(GateOp::ry(q, e.angles[1]));
        if (std::abs(e.angles[0]) > kZeroAngle) out.push_back(GateOp::rz(q, e.angles[0]));
      }
      break;
    }
    case BasisKind::Rv:
      out.push_back(GateOp::rot(q, lambda, axis));
      break;
    case BasisKind::Pi: {
      if (std::abs(m.trace()) <= 1e-11) {
        out.push_back(GateOp::pi(q, to_axis_angle(m).axis));
      } else {
        const TwoPiFactorization f = two_pi_factorize(m);
        out.push_back(GateOp::pi(q, f.v1));
        out.push_back(GateOp::pi(q, f.v2));
      }
      break;
    }
    case BasisKind::ControlledPi:
      out.push_back(GateOp::u2(q, m));
      break;
  }
  return out;
}

Circuit merge_single_qubit_runs(const Circuit& in, BasisKind basis) {
  Circuit out(in.width, in.connectivity);
  out.ancilla = in.ancilla;
  std::vector<std::optional<Mat2>> pending(in.width);
  const auto flush = [&](int q) {
    if (!pending[q]) return;
    for (const GateOp& op : resynthesize(*pending[q], q, basis)) out.add(op);
    pending[q].reset();
  };
  for (const GateOp& op : in.ops) {
    if (op.is_single_qubit()) {
      const int q = op.qubits[0];
      pending[q] = op.target_matrix() * pending[q].value_or(Mat2::Identity());
      continue;
    }
    for (int q : op.qubits) flush(q);
    out.add(op);
  }
  for (int q = 0; q < in.width; ++q) flush(q);
  return out;
}

bool has_controlled_gates(const Circuit& c) {
  for (const GateOp& op : c.ops)
    if (op.kind == GateKind::McRot || op.kind == GateKind::CiY || op.kind == GateKind::CZ) return true;
  return false;
}

// Fan-out CNOT pair starting at op i: CNOT(c, a), single-qubit ops,
// CNOT(c, b). Ops in between on b move before the pair, ops on a after it.
struct FanOut {
  std::size_t first = 0;
  std::size_t second = 0;
  std::vector<GateOp> before;
  std::vector<GateOp> after;
};

std::optional<FanOut> find_fan_out(const std::vector<GateOp>& ops, std::size_t i) {
  const GateOp& a = ops[i];
  if (a.kind != GateKind::CNOT || a.qubits[0] != kC) return std::nullopt;
  FanOut f;
  f.first = i;
  std::vector<GateOp> between;
  std::size_t k = i + 1;
  for (; k < ops.size() && ops[k].is_single_qubit(); ++k) between.push_back(ops[k]);
  if (k == ops.size()) return std::nullopt;
  const GateOp& b = ops[k];
  if (b.kind != GateKind::CNOT || b.qubits[0] != kC || b.qubits[1] == a.qubits[1]) return std::nullopt;
  for (const GateOp& op : between) {
    if (op.qubits[0] == b.qubits[1])
      f.before.push_back(op);
    else if (op.qubits[0] == a.qubits[1])
      f.after.push_back(op);
    else
      return std::nullopt;
  }
  f.second = k;
  return f;
}

}  // namespace

Layout Layout::of(LayoutKind kind) {
  switch (kind) {
    case LayoutKind::AllToAll:
    case LayoutKind::LnnControlFirst:
      return {kind, 0, 1, 2};
    case LayoutKind::LnnControlLast:
      return {kind, 2, 1, 0};
    case LayoutKind::LnnControlMiddle:
      return {kind, 1, 0, 2};
  }
  throw InputError("unknown layout");
}

std::string layout_name(LayoutKind kind) {
  switch (kind) {
    case LayoutKind::AllToAll: return "a2a";
    case LayoutKind::LnnControlFirst: return "lnn-first";
    case LayoutKind::LnnControlLast: return "lnn-last";
    case LayoutKind::LnnControlMiddle: return "lnn-mid";
  }
  throw InputError("unknown layout");
}

LayoutKind layout_from_name(const std::string& name) {
  for (LayoutKind k : {LayoutKind::AllToAll, LayoutKind::LnnControlFirst, LayoutKind::LnnControlLast,
                       LayoutKind::LnnControlMiddle})
    if (layout_name(k) == name) return k;
  throw InputError("unknown layout '" + name + "' (expected a2a, lnn-first, lnn-mid or lnn-last)");
}

std::string basis_name(BasisKind kind) {
  switch (kind) {
    case BasisKind::ControlledPi: return "cpi";
    case BasisKind::ZY: return "zy";
    case BasisKind::Rv: return "rv";
    case BasisKind::Pi: return "pi";
  }
  throw InputError("unknown basis");
}

BasisKind basis_from_name(const std::string& name) {
  for (BasisKind k : {BasisKind::ControlledPi, BasisKind::ZY, BasisKind::Rv, BasisKind::Pi})
    if (basis_name(k) == name) return k;
  throw InputError("unknown basis '" + name + "' (expected cpi, zy, rv or pi)");
}

Circuit build_cu4_cpi_skeleton(const Matrix& v, SynthesisReport* report) {
  const PhaseSelection sel = phase_select(v);
  const Su4PiParams& p = sel.params;
  if (report) {
    report->branches = sel.branches;
    report->global_phase = sel.phi;
  }
  Circuit c(3);
  c.add(GateOp::controlled_pi(kC, kT1, p.v[0])).add(GateOp::controlled_pi(kC, kT2, p.v[1]));
  c.add(GateOp::phase(kC, sel.phi));
  c.add(GateOp::u2(kT1, p.u1)).add(GateOp::u2(kT2, p.u2));
  c.add(GateOp::ciy(kT1, kT2));
  c.add(GateOp::controlled_pi(kC, kT1, p.v[2])).add(GateOp::controlled_pi(kC, kT2, p.v[3]));
  c.add(GateOp::cz(kT1, kT2));
  c.add(GateOp::controlled_pi(kC, kT1, p.v[4]));
  c.add(GateOp::cnot(kT1, kT2));
  c.add(GateOp::u2(kT1, p.u1.adjoint())).add(GateOp::u2(kT2, p.u2.adjoint()));
  c.add(GateOp::controlled_pi(kC, kT1, p.v[5])).add(GateOp::controlled_pi(kC, kT2, p.v[6]));
  return c;
}

Circuit rewrite_basis(const Circuit& skeleton, BasisKind basis) {
  const Circuit expanded = expand(skeleton, basis);
  if (basis == BasisKind::ControlledPi) return expanded;
  return merge_single_qubit_runs(expanded, basis);
}

Circuit lnn_lower(const Circuit& circuit, const Layout& layout) {
  const Circuit in = has_controlled_gates(circuit) ? rewrite_basis(circuit, BasisKind::ControlledPi) : circuit;
  if (in.width != 3) throw InputError("lnn_lower expects a 3-qubit circuit");
  if (!layout.linear()) return in;

  std::vector<FanOut> pairs;
  for (std::size_t i = 0; i < in.ops.size(); ++i)
    if (auto f = find_fan_out(in.ops, i)) {
      pairs.push_back(*f);
      i = f->second;
    }
  const bool middle = layout.kind == LayoutKind::LnnControlMiddle;
  if (middle && pairs.size() < 2) throw InputError("control-middle lowering needs two fan-out pairs");

  std::array<int, 3> pos{layout.c, layout.t1, layout.t2};
  Circuit out(3, Connectivity::Linear);
  out.ancilla = in.ancilla;
  const auto map = [&](GateOp op) {
    for (int& q : op.qubits) q = pos[q];
    return op;
  };
  const auto cnot = [&](int control, int target) { out.add(GateOp::cnot(pos[control], pos[target])); };
  // CNOT(c, t) followed by SWAP(c, t) = CNOT(t, c) CNOT(c, t) in time order.
  const auto cnot_then_swap = [&](int t) {
    cnot(t, kC);
    cnot(kC, t);
    std::swap(pos[kC], pos[t]);
  };

  std::size_t next_pair = 0;
  for (std::size_t i = 0; i < in.ops.size(); ++i) {
    if (next_pair < pairs.size() && pairs[next_pair].first == i) {
      const FanOut& f = pairs[next_pair];
      const int a = in.ops[f.first].qubits[1];
      const int b = in.ops[f.second].qubits[1];
      for (const GateOp& op : f.before) out.add(map(op));
      if (middle && (next_pair == 0 || next_pair + 1 == pairs.size())) {
        // Route the swap of c with t1 through this pair.
        const int other = a == kT1 ? b : a;
        if (next_pair == 0) {
          cnot(kC, other);
          cnot_then_swap(kT1);
        } else {
          cnot_then_swap(kT1);
          cnot(kC, other);
        }
      } else {
        const int near = std::abs(pos[kC] - pos[a]) == 1 ? a : b;
        const int far = near == a ? b : a;
        cnot(near, far);
        cnot(kC, near);
        cnot(near, far);
      }
      for (const GateOp& op : f.after) out.add(map(op));
      i = f.second;
      ++next_pair;
      continue;
    }
    out.add(map(in.ops[i]));
  }
  if (pos != std::array<int, 3>{layout.c, layout.t1, layout.t2})
    throw SynthesisError("LNN lowering did not restore the wire mapping");
  const auto violations = validate_connectivity(out);
  if (!violations.empty()) throw InputError("LNN lowering: " + violations.front().message);
  return out;
}

Matrix controlled_target(const Matrix& v, const Layout& layout) {
  if (v.rows() != 4 || v.cols() != 4) throw InputError("controlled target needs a 4x4 matrix");
  Matrix logical = Matrix::Identity(8, 8);
  logical.bottomRightCorner(4, 4) = v;
  const std::array<int, 3> pos{layout.c, layout.t1, layout.t2};
  const auto physical = [&](int x) {
    int y = 0;
    for (int q = 0; q < 3; ++q)
      if ((x >> (2 - q)) & 1) y |= 1 << (2 - pos[q]);
    return y;
  };
  Matrix out = Matrix::Zero(8, 8);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) out(physical(r), physical(c)) = logical(r, c);
  return out;
}

Cu4Result build_cu4(const Matrix& v, const Layout& layout, BasisKind basis, double eps) {
  if (v.rows() != 4 || v.cols() != 4) throw InputError("controlled-U(4) synthesis needs a 4x4 matrix");
  require_unitary(v, "two-qubit operator");
  Cu4Result result;
  const Circuit skeleton = build_cu4_cpi_skeleton(v, &result.report);
  result.circuit = rewrite_basis(skeleton, basis);
  if (layout.linear()) result.circuit = lnn_lower(result.circuit, layout);
  const PhaseMatch match = assert_equiv(result.circuit, controlled_target(v, layout), eps);
  result.report.counts = count_gates(result.circuit);
  result.report.error = match.error;
  result.report.global_phase = match.phase;
  if (!match.equivalent) throw SynthesisError("controlled-U(4) circuit misses its target");
  return result;
}

}  // namespace hermit
