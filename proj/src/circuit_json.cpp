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

#include "hermit/circuit_json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace hermit {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError("complex entries must be [re, im] number pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

double number_field(const Json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_number())
    throw InputError(std::string("missing numeric parameter '") + key + "'");
  return params[key].get<double>();
}

Axis axis_field(const Json& params) {
  if (!params.contains("axis")) throw InputError("missing parameter 'axis'");
  const Json& a = params["axis"];
  if (!a.is_array() || a.size() != 3) throw InputError("axis must be [x, y, z]");
  for (const Json& v : a)
    if (!v.is_number()) throw InputError("axis must be [x, y, z]");
  return Axis(a[0].get<double>(), a[1].get<double>(), a[2].get<double>());
}

Json axis_to_json(const Axis& a) { return Json::array({a.x(), a.y(), a.z()}); }

Json params_to_json(const GateOp& op) {
  Json p = Json::object();
  switch (op.kind) {
    case GateKind::Phase: p["lambda"] = op.angle; break;
    case GateKind::Rot:
      p["lambda"] = op.angle;
      p["axis"] = axis_to_json(op.axis);
      break;
    case GateKind::Pi: p["axis"] = axis_to_json(op.axis); break;
    case GateKind::U2: {
      Json rows = Json::array();
      for (int r = 0; r < 2; ++r) rows.push_back(Json::array({complex_to_json(op.matrix(r, 0)), complex_to_json(op.matrix(r, 1))}));
      p["matrix"] = rows;
      break;
    }
    case GateKind::McRot:
      p["lambda"] = op.angle;
      p["axis"] = axis_to_json(op.axis);
      p["psi"] = op.psi;
      break;
    default: break;
  }
  return p;
}

GateOp op_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("ops must be objects");
  if (!j.contains("kind") || !j["kind"].is_string()) throw InputError("op is missing 'kind'");
  if (!j.contains("qubits") || !j["qubits"].is_array()) throw InputError("op is missing 'qubits'");
  GateOp op;
  op.kind = kind_from_name(j["kind"].get<std::string>());
  for (const Json& q : j["qubits"]) {
    if (!q.is_number_integer()) throw InputError("qubit indices must be integers");
    op.qubits.push_back(q.get<int>());
  }
  const Json params = j.contains("params") ? j["params"] : Json::object();
  if (!params.is_object()) throw InputError("'params' must be an object");

  std::size_t arity = 1;
  switch (op.kind) {
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::CiY:
    case GateKind::SWAP: arity = 2; break;
    case GateKind::McRot:
    case GateKind::McX: arity = 0; break;
    default: break;
  }
  if (arity != 0 && op.qubits.size() != arity)
    throw InputError("gate '" + kind_name(op.kind) + "' takes " + std::to_string(arity) + " qubits");
  if (arity == 0 && op.qubits.size() < 2) throw InputError("multi-controlled gates need a control and a target");

  switch (op.kind) {
    case GateKind::Phase: op.angle = number_field(params, "lambda"); break;
    case GateKind::Rot:
      op.angle = number_field(params, "lambda");
      op.axis = axis_field(params);
      break;
    case GateKind::Pi: op.axis = axis_field(params); break;
    case GateKind::U2: {
      if (!params.contains("matrix")) throw InputError("u2 needs 'matrix'");
      const Json& rows = params["matrix"];
      if (!rows.is_array() || rows.size() != 2) throw InputError("u2 matrix must be 2x2");
      for (int r = 0; r < 2; ++r) {
        if (!rows[r].is_array() || rows[r].size() != 2) throw InputError("u2 matrix must be 2x2");
        for (int c = 0; c < 2; ++c) op.matrix(r, c) = complex_from_json(rows[r][c]);
      }
      require_unitary(op.matrix, "u2 matrix");
      break;
    }
    case GateKind::McRot:
      op.angle = number_field(params, "lambda");
      op.axis = axis_field(params);
      op.psi = params.contains("psi") ? number_field(params, "psi") : 0.0;
      break;
    default: break;
  }
  return op;
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(complex_to_json(m(r, c)));
  return {{"dim", m.rows()}, {"entries", entries}};
}

Matrix matrix_from_json(const Json& j, double unitarity_eps) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
    throw InputError("matrix file needs an integer 'dim'");
  const long dim = j["dim"].get<long>();
  if (dim < 2 || (dim & (dim - 1)) != 0 || dim > (1L << kMaxSimWidth))
    throw InputError("matrix dimension must be a power of two between 2 and 2^12");
  if (!j.contains("entries") || !j["entries"].is_array()) throw InputError("matrix file needs 'entries'");
  const Json& entries = j["entries"];
  if (entries.size() != static_cast<std::size_t>(dim * dim))
    throw InputError("matrix file has " + std::to_string(entries.size()) + " entries, expected " +
                     std::to_string(dim * dim));
  Matrix m(dim, dim);
  for (long r = 0; r < dim; ++r)
    for (long c = 0; c < dim; ++c) m(r, c) = complex_from_json(entries[static_cast<std::size_t>(r * dim + c)]);
  require_unitary(m, "matrix", unitarity_eps);
  return m;
}

Json circuit_to_json(const Circuit& c) {
  Json ops = Json::array();
  for (const GateOp& op : c.ops)
    ops.push_back({{"kind", kind_name(op.kind)}, {"qubits", op.qubits}, {"params", params_to_json(op)}});
  Json j = {{"width", c.width},
            {"connectivity", c.connectivity == Connectivity::Linear ? "lnn" : "all"},
            {"ops", ops}};
  if (c.ancilla) j["ancilla"] = *c.ancilla;
  return j;
}

Circuit circuit_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("circuit file must be a JSON object");
  if (!j.contains("width") || !j["width"].is_number_integer()) throw InputError("circuit file needs an integer 'width'");
  Circuit c(j["width"].get<int>());
  if (c.width < 1) throw InputError("circuit width must be positive");
  if (j.contains("connectivity")) {
    const std::string conn = j["connectivity"].is_string() ? j["connectivity"].get<std::string>() : "";
    if (conn == "lnn")
      c.connectivity = Connectivity::Linear;
    else if (conn != "all")
      throw InputError("connectivity must be \"all\" or \"lnn\"");
  }
  if (j.contains("ancilla")) {
    if (!j["ancilla"].is_number_integer()) throw InputError("'ancilla' must be a qubit index");
    c.ancilla = j["ancilla"].get<int>();
    if (*c.ancilla < 0 || *c.ancilla >= c.width) throw InputError("ancilla index out of range");
  }
  if (!j.contains("ops") || !j["ops"].is_array()) throw InputError("circuit file needs an 'ops' list");
  for (const Json& op : j["ops"]) c.ops.push_back(op_from_json(op));
  validate_ops(c);
  return c;
}

Json counts_to_json(const GateCounts& n) {
  return {{"cnot", n.cnot},   {"cz", n.cz},       {"ciy", n.ciy},     {"swap", n.swap},       {"h", n.h},
          {"x", n.x},         {"phase", n.phase}, {"rot", n.rot()},   {"rot_z", n.rot_z},     {"rot_y", n.rot_y},
          {"rot_other", n.rot_other}, {"pi", n.pi}, {"pi_x", n.pi_x}, {"pi_xy", n.pi_xy}, {"pi_xz", n.pi_xz},
          {"u2", n.u2},       {"mcrot", n.mc_rot}, {"mcx", n.mc_x}};
}

Json report_to_json(const SynthesisReport& report) {
  Json branches = Json::array();
  for (const BranchOutcome& b : report.branches)
    branches.push_back({{"k", b.k}, {"phi", b.phi}, {"error", b.error}, {"accepted", b.accepted}});
  return {{"counts", counts_to_json(report.counts)},
          {"error", report.error},
          {"global_phase", report.global_phase},
          {"branches", branches}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

Matrix load_matrix(const std::string& path, double unitarity_eps) {
  return matrix_from_json(read_json_file(path), unitarity_eps);
}

Circuit load_circuit(const std::string& path) { return circuit_from_json(read_json_file(path)); }

bool same_structure(const Circuit& a, const Circuit& b) {
  if (a.width != b.width || a.connectivity != b.connectivity || a.ancilla != b.ancilla) return false;
  if (a.ops.size() != b.ops.size()) return false;
  for (std::size_t i = 0; i < a.ops.size(); ++i) {
    const GateOp& x = a.ops[i];
    const GateOp& y = b.ops[i];
    if (x.kind != y.kind || x.qubits != y.qubits || x.angle != y.angle || x.psi != y.psi) return false;
    if (x.axis.vec() != y.axis.vec() || x.matrix != y.matrix) return false;
  }
  return true;
}

}  // namespace hermit
