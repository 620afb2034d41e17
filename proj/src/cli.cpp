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

#include "hermit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hermit/circuit_json.hpp"
#include "hermit/cu4.hpp"
#include "hermit/hermitian_sets.hpp"
#include "hermit/single_qubit.hpp"

namespace hermit {

namespace {

namespace fs = std::filesystem;

struct Io {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
};

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

double default_tolerance() {
  const char* env = std::getenv("HERMIT_TOL");
  if (env == nullptr || *env == '\0') return tol::kCircuit;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0)) throw InputError(std::string("HERMIT_TOL is not a positive number: ") + env);
  return v;
}

Json read_json(const std::string& path, Io& io) {
  if (path != "-") return read_json_file(path);
  try {
    return Json::parse(io.in);
  } catch (const Json::exception& e) {
    throw InputError(std::string("stdin is not valid JSON: ") + e.what());
  }
}

void print_counts(std::ostream& out, const GateCounts& n) {
  const std::pair<const char*, int> rows[] = {
      {"cnot", n.cnot},   {"cz", n.cz},       {"ciy", n.ciy},       {"swap", n.swap},       {"h", n.h},
      {"x", n.x},         {"phase", n.phase}, {"rot_z", n.rot_z},   {"rot_y", n.rot_y},     {"rot_other", n.rot_other},
      {"pi", n.pi},       {"pi_x", n.pi_x},   {"pi_xy", n.pi_xy},   {"pi_xz", n.pi_xz},     {"u2", n.u2},
      {"mcrot", n.mc_rot}, {"mcx", n.mc_x}};
  for (const auto& [name, value] : rows) out << name << ": " << value << '\n';
}

// Writes the circuit to --out when given, then prints either JSON or text.
void emit(Io& io, bool json, const Circuit& c, const std::optional<SynthesisReport>& report,
          const std::string& out_path) {
  if (!out_path.empty()) write_json_file(out_path, circuit_to_json(c));
  if (json) {
    Json j = {{"circuit", circuit_to_json(c)}};
    if (report) j["report"] = report_to_json(*report);
    io.out << j.dump(2) << '\n';
    return;
  }
  io.out << to_text(c);
  if (report) {
    io.out << "error: " << fmt(report->error) << '\n';
    io.out << "global_phase: " << fmt(report->global_phase) << '\n';
    print_counts(io.out, report->counts);
  }
}

struct Synth1qArgs {
  std::string matrix;
  std::vector<double> axis;
  std::optional<double> angle;
  std::string out;
};

int cmd_synth1q(const Synth1qArgs& a, bool json, double eps, Io& io) {
  Mat2 u;
  if (!a.matrix.empty()) {
    const Matrix m = matrix_from_json(read_json(a.matrix, io));
    if (m.rows() != 2) throw InputError("synth1q needs a 2x2 matrix");
    u = m;
  } else if (a.axis.size() == 2 && a.angle) {
    u = rotation_matrix(*a.angle, Axis::spherical(a.axis[0], a.axis[1]));
  } else {
    throw InputError("synth1q needs --matrix FILE or --axis THETA PHI with --angle LAMBDA");
  }
  const TwoPiFactorization f = two_pi_factorize(u);
  Circuit c(1);
  c.add(GateOp::pi(0, f.v1)).add(GateOp::pi(0, f.v2));
  const PhaseMatch m = assert_equiv(c, u, eps);
  SynthesisReport report;
  report.counts = count_gates(c);
  report.error = m.error;
  report.global_phase = m.phase;
  if (!m.equivalent) throw SynthesisError("two-pi circuit misses its target by " + fmt(m.error));
  emit(io, json, c, report, a.out);
  return exit_code::kOk;
}

struct Cu4Args {
  std::string matrix;
  std::string layout = "a2a";
  std::string basis = "zy";
  std::string out;
  std::string emit_target;
  std::string batch;
};

Cu4Result synth_cu4_one(const Matrix& v, const Cu4Args& a, double eps) {
  if (v.rows() != 4) throw InputError("synth-cu4 needs a 4x4 matrix");
  return build_cu4(v, Layout::of(layout_from_name(a.layout)), basis_from_name(a.basis), eps);
}

int cmd_synth_cu4_batch(const Cu4Args& a, bool json, double eps, Io& io) {
  if (a.out.empty()) throw InputError("--batch needs --out DIR for the emitted circuits");
  if (!fs::is_directory(a.batch)) throw InputError("'" + a.batch + "' is not a directory");
  fs::create_directories(a.out);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.batch))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  int worst = exit_code::kOk;
  Json summary = Json::array();
  for (const fs::path& file : files) {
    Json row = {{"file", file.filename().string()}};
    try {
      const Cu4Result r = synth_cu4_one(load_matrix(file.string()), a, eps);
      const fs::path target = fs::path(a.out) / (file.stem().string() + ".circuit.json");
      write_json_file(target.string(), circuit_to_json(r.circuit));
      row["status"] = "ok";
      row["report"] = report_to_json(r.report);
      if (!json)
        io.out << file.filename().string() << ": ok cnot=" << r.report.counts.cnot << " error=" << fmt(r.report.error)
               << '\n';
    } catch (const InputError& e) {
      worst = std::max(worst, exit_code::kInputError);
      row["status"] = "input-error";
      row["message"] = e.what();
      io.err << file.filename().string() << ": " << e.what() << '\n';
    } catch (const SynthesisError& e) {
      worst = std::max(worst, exit_code::kSynthesisFailure);
      row["status"] = "synthesis-failure";
      row["message"] = e.what();
      io.err << file.filename().string() << ": " << e.what() << '\n';
    }
    summary.push_back(row);
  }
  if (json) io.out << summary.dump(2) << '\n';
  return worst;
}

int cmd_synth_cu4(const Cu4Args& a, bool json, double eps, Io& io) {
  if (!a.batch.empty()) return cmd_synth_cu4_batch(a, json, eps, io);
  if (a.matrix.empty()) throw InputError("synth-cu4 needs --matrix FILE or --batch DIR");
  const Matrix v = matrix_from_json(read_json(a.matrix, io));
  const Cu4Result r = synth_cu4_one(v, a, eps);
  if (!a.emit_target.empty())
    write_json_file(a.emit_target, matrix_to_json(controlled_target(v, Layout::of(layout_from_name(a.layout)))));
  emit(io, json, r.circuit, r.report, a.out);
  return exit_code::kOk;
}

struct VerifyArgs {
  std::string circuit;
  std::string matrix;
  std::optional<double> tol;
};

int cmd_verify(const VerifyArgs& a, bool json, double eps, Io& io) {
  const double t = a.tol.value_or(eps);
  if (!(t > 0)) throw InputError("--tol must be positive");
  const Circuit c = circuit_from_json(read_json(a.circuit, io));
  // The target only has to be unitary to the requested tolerance.
  const Matrix m = matrix_from_json(read_json(a.matrix, io), std::max(t, tol::kUnitarity));
  if (m.rows() != (Eigen::Index{1} << c.width))
    throw InputError("matrix dimension " + std::to_string(m.rows()) + " does not match circuit width " +
                     std::to_string(c.width));
  const PhaseMatch r = assert_equiv(c, m, t);
  if (json) {
    io.out << Json({{"equivalent", r.equivalent}, {"phase", r.phase}, {"error", r.error}, {"tol", t}}).dump(2) << '\n';
  } else {
    io.out << "equivalent: " << (r.equivalent ? "yes" : "no") << '\n';
    io.out << "phase: " << fmt(r.phase) << '\n';
    io.out << "error: " << fmt(r.error) << '\n';
  }
  return r.equivalent ? exit_code::kOk : exit_code::kNotEquivalent;
}

int cmd_builtin(const std::string& name, bool list, const std::string& out_path, bool json, Io& io) {
  if (list) {
    for (const std::string& n : builtin_names()) io.out << n << '\n';
    return exit_code::kOk;
  }
  if (name.empty()) throw InputError("builtin needs a NAME (see --list)");
  const Circuit c = builtin(name);
  if (!out_path.empty()) write_json_file(out_path, circuit_to_json(c));
  if (json)
    io.out << circuit_to_json(c).dump(2) << '\n';
  else
    io.out << to_text(c);
  return exit_code::kOk;
}

int cmd_count(const std::string& path, bool json, Io& io) {
  const Circuit c = circuit_from_json(read_json(path, io));
  const GateCounts n = count_gates(c);
  if (json)
    io.out << counts_to_json(n).dump(2) << '\n';
  else
    print_counts(io.out, n);
  return exit_code::kOk;
}

int cmd_hermitize(const std::string& path, const std::string& set, const std::string& out_path, bool json, Io& io) {
  const Circuit c = circuit_from_json(read_json(path, io));
  const HermitizeResult r = hermitize(c, gate_set_from_name(set));
  emit(io, json, r.circuit, r.report, out_path);
  return exit_code::kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
  Io io{out, err, in};
  CLI::App app{"Hermitian pi-rotation circuit synthesis"};
  app.name("hermit");
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON output");

  Synth1qArgs s1;
  auto* synth1q = app.add_subcommand("synth1q", "Two pi-rotation circuit for a single-qubit operator");
  auto* s1_matrix = synth1q->add_option("--matrix", s1.matrix, "2x2 matrix file");
  auto* s1_axis = synth1q->add_option("--axis", s1.axis, "Rotation axis as THETA PHI")->expected(2);
  auto* s1_angle = synth1q->add_option("--angle", s1.angle, "Rotation angle");
  s1_matrix->excludes(s1_axis)->excludes(s1_angle);
  s1_axis->needs(s1_angle);
  s1_angle->needs(s1_axis);
  synth1q->add_option("--out", s1.out, "Write the circuit file here");

  Cu4Args cu;
  auto* synth_cu4 = app.add_subcommand("synth-cu4", "Controlled two-qubit operator synthesis");
  synth_cu4->add_option("--matrix", cu.matrix, "4x4 matrix file");
  synth_cu4->add_option("--layout", cu.layout, "a2a | lnn-first | lnn-mid | lnn-last");
  synth_cu4->add_option("--basis", cu.basis, "cpi | zy | rv | pi");
  synth_cu4->add_option("--out", cu.out, "Circuit file (or output directory with --batch)");
  synth_cu4->add_option("--emit-target", cu.emit_target, "Write the 8x8 controlled operator here");
  synth_cu4->add_option("--batch", cu.batch, "Synthesize every .json matrix file in a directory");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a circuit against a matrix up to global phase");
  verify->add_option("--circuit", va.circuit, "Circuit file")->required();
  verify->add_option("--matrix", va.matrix, "Matrix file")->required();
  verify->add_option("--tol", va.tol, "Max-norm tolerance");

  std::string builtin_name;
  std::string builtin_out;
  bool builtin_list = false;
  auto* builtin_cmd = app.add_subcommand("builtin", "Print a reference circuit");
  builtin_cmd->add_option("name", builtin_name, "Circuit name");
  builtin_cmd->add_flag("--list", builtin_list, "List the available names");
  builtin_cmd->add_option("--out", builtin_out, "Write the circuit file here");

  std::string count_path;
  auto* count = app.add_subcommand("count", "Gate counts of a circuit");
  count->add_option("--circuit", count_path, "Circuit file")->required();

  std::string herm_path;
  std::string herm_set;
  std::string herm_out;
  auto* herm = app.add_subcommand("hermitize", "Rewrite a circuit into a Hermitian gate set");
  herm->add_option("--circuit", herm_path, "Circuit file")->required();
  herm->add_option("--set", herm_set, "hermitian-pi | hermitian-hpi | hermitian-hpit | hermitian-hpit-x | hermitian-hpis-x")
      ->required();
  herm->add_option("--out", herm_out, "Write the circuit file here");

  for (CLI::App* sub : app.get_subcommands({})) sub->add_flag("--json", json, "Machine-readable JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kInputError;
  }

  try {
    const double eps = default_tolerance();
    if (synth1q->parsed()) return cmd_synth1q(s1, json, eps, io);
    if (synth_cu4->parsed()) return cmd_synth_cu4(cu, json, eps, io);
    if (verify->parsed()) return cmd_verify(va, json, eps, io);
    if (builtin_cmd->parsed()) return cmd_builtin(builtin_name, builtin_list, builtin_out, json, io);
    if (count->parsed()) return cmd_count(count_path, json, io);
    if (herm->parsed()) return cmd_hermitize(herm_path, herm_set, herm_out, json, io);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInputError;
  } catch (const SynthesisError& e) {
    err << "synthesis failure: " << e.what() << '\n';
    return exit_code::kSynthesisFailure;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::kSynthesisFailure;
  }
  return exit_code::kInputError;
}

}  // namespace hermit
