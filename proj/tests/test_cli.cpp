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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <catch_amalgamated.hpp>

#include "hermit/circuit_json.hpp"
#include "hermit/cli.hpp"
#include "test_util.hpp"

using namespace hermit;
namespace ref = hermit::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "hermit");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err, in);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "hermit_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write_matrix(const std::string& name, const Matrix& m) {
  const std::string p = (scratch() / name).string();
  write_json_file(p, matrix_to_json(m));
  return p;
}

std::string write_circuit(const std::string& name, const Circuit& c) {
  const std::string p = (scratch() / name).string();
  write_json_file(p, circuit_to_json(c));
  return p;
}

}  // namespace

TEST_CASE("cli: synth1q") {
  SECTION("S gives two pi rotations and phase pi / 4") {
    const Run r = run({"synth1q", "--matrix", write_matrix("s.json", gates::s()), "--json"});
    REQUIRE(r.code == exit_code::kOk);
    const Json j = Json::parse(r.out);
    CHECK(j["circuit"]["ops"].size() == 2);
    CHECK(j["report"]["counts"]["pi"] == 2);
    CHECK(std::abs(j["report"]["global_phase"].get<double>() - kPi / 4) < 1e-12);
    CHECK(j["report"]["error"].get<double>() < 1e-12);
  }
  SECTION("axis and angle") {
    const std::string out = (scratch() / "rot.circuit.json").string();
    const Run r = run({"synth1q", "--axis", "0.4", "1.1", "--angle", "2.3", "--out", out});
    REQUIRE(r.code == exit_code::kOk);
    CHECK(r.out.find("error:") != std::string::npos);
    const Circuit c = load_circuit(out);
    CHECK(ref::phase_distance(circuit_unitary(c), rotation_matrix(2.3, Axis::spherical(0.4, 1.1))) < 1e-10);
  }
  SECTION("stdin input") {
    const Run r = run({"synth1q", "--matrix", "-"}, matrix_to_json(gates::h()).dump());
    CHECK(r.code == exit_code::kOk);
  }
  SECTION("bad input") {
    CHECK(run({"synth1q"}).code == exit_code::kInputError);
    CHECK(run({"synth1q", "--matrix", write_matrix("i4.json", Matrix::Identity(4, 4))}).code == exit_code::kInputError);
    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 1) = 0.3;
    const Run r = run({"synth1q", "--matrix", write_matrix("bad.json", bad)});
    CHECK(r.code == exit_code::kInputError);
    CHECK_FALSE(r.err.empty());
    CHECK(run({"synth1q", "--matrix", "-"}, "not json").code == exit_code::kInputError);
  }
}

TEST_CASE("cli: synth-cu4 and verify close the loop") {
  Rng rng = ref::seeded(91);
  const std::string v = write_matrix("v.json", haar_unitary(4, rng));
  for (const std::string layout : {"a2a", "lnn-first", "lnn-mid", "lnn-last"}) {
    const std::string circuit = (scratch() / ("cu4-" + layout + ".json")).string();
    const std::string target = (scratch() / ("target-" + layout + ".json")).string();
    const Run s = run({"synth-cu4", "--matrix", v, "--layout", layout, "--basis", "pi", "--out", circuit,
                       "--emit-target", target, "--json"});
    REQUIRE(s.code == exit_code::kOk);
    CHECK(Json::parse(s.out)["report"]["counts"]["cnot"] == (layout == "a2a" ? 10 : 13));
    const Run ok = run({"verify", "--circuit", circuit, "--matrix", target});
    CHECK(ok.code == exit_code::kOk);
    CHECK(ok.out.find("equivalent: yes") != std::string::npos);
  }
  CHECK(run({"synth-cu4", "--matrix", v, "--layout", "ring"}).code == exit_code::kInputError);
  CHECK(run({"synth-cu4", "--matrix", v, "--basis", "t"}).code == exit_code::kInputError);
  CHECK(run({"synth-cu4", "--matrix", write_matrix("h2.json", gates::h())}).code == exit_code::kInputError);
  CHECK(run({"synth-cu4"}).code == exit_code::kInputError);
}

TEST_CASE("cli: synth-cu4 batch") {
  Rng rng = ref::seeded(92);
  const fs::path in = scratch() / "batch_in";
  const fs::path out = scratch() / "batch_out";
  fs::remove_all(in);
  fs::remove_all(out);
  fs::create_directories(in);
  for (int i = 0; i < 3; ++i)
    write_json_file((in / ("m" + std::to_string(i) + ".json")).string(), matrix_to_json(haar_unitary(4, rng)));
  const Run r = run({"synth-cu4", "--batch", in.string(), "--out", out.string(), "--json"});
  CHECK(r.code == exit_code::kOk);
  CHECK(Json::parse(r.out).size() == 3);
  CHECK(fs::exists(out / "m1.circuit.json"));

  write_json_file((in / "z_bad.json").string(), matrix_to_json(gates::h()));
  const Run bad = run({"synth-cu4", "--batch", in.string(), "--out", out.string()});
  CHECK(bad.code == exit_code::kInputError);
  CHECK(bad.out.find("m2.json: ok") != std::string::npos);
  CHECK(run({"synth-cu4", "--batch", in.string()}).code == exit_code::kInputError);
}

TEST_CASE("cli: verify") {
  Circuit cnot(2);
  cnot.add(GateOp::cnot(0, 1));
  Circuit cz(2);
  cz.add(GateOp::cz(0, 1));
  const std::string cnot_file = write_circuit("cnot.json", cnot);
  const std::string cz_matrix = write_matrix("cz.json", circuit_unitary(cz));
  const std::string cnot_matrix = write_matrix("cnot_m.json", circuit_unitary(cnot));
  const Run no = run({"verify", "--circuit", cnot_file, "--matrix", cz_matrix});
  CHECK(no.code == exit_code::kNotEquivalent);
  CHECK(no.out.find("equivalent: no") != std::string::npos);

  // a perturbed target flips with the tolerance
  Circuit rz(2);
  rz.add(GateOp::cnot(0, 1)).add(GateOp::rz(1, 1e-6));
  const std::string near = write_matrix("near.json", circuit_unitary(rz));
  CHECK(run({"verify", "--circuit", cnot_file, "--matrix", near, "--tol", "1e-9"}).code == exit_code::kNotEquivalent);
  CHECK(run({"verify", "--circuit", cnot_file, "--matrix", near, "--tol", "1e-5"}).code == exit_code::kOk);
  CHECK(run({"verify", "--circuit", cnot_file, "--matrix", near, "--tol", "-1"}).code == exit_code::kInputError);

  const Run j = run({"verify", "--circuit", cnot_file, "--matrix", cnot_matrix, "--json"});
  CHECK(j.code == exit_code::kOk);
  CHECK(Json::parse(j.out)["equivalent"] == true);

  CHECK(run({"verify", "--circuit", cnot_file, "--matrix", write_matrix("h3.json", gates::h())}).code ==
        exit_code::kInputError);
  CHECK(run({"verify", "--circuit", "/nonexistent.json", "--matrix", cz_matrix}).code == exit_code::kInputError);
}

TEST_CASE("cli: HERMIT_TOL") {
  Circuit cnot(2);
  cnot.add(GateOp::cnot(0, 1));
  Circuit rz(2);
  rz.add(GateOp::cnot(0, 1)).add(GateOp::rz(1, 1e-6));
  const std::string c = write_circuit("cnot_env.json", cnot);
  const std::string m = write_matrix("near_env.json", circuit_unitary(rz));
  ::setenv("HERMIT_TOL", "1e-5", 1);
  CHECK(run({"verify", "--circuit", c, "--matrix", m}).code == exit_code::kOk);
  ::setenv("HERMIT_TOL", "abc", 1);
  CHECK(run({"verify", "--circuit", c, "--matrix", m}).code == exit_code::kInputError);
  ::unsetenv("HERMIT_TOL");
  CHECK(run({"verify", "--circuit", c, "--matrix", m}).code == exit_code::kNotEquivalent);
}

TEST_CASE("cli: builtin and count") {
  const Run list = run({"builtin", "--list"});
  CHECK(list.code == exit_code::kOk);
  CHECK(list.out.find("toffoli_minimal_hermitian") != std::string::npos);

  const Run b = run({"builtin", "toffoli_minimal_hermitian", "--json"});
  REQUIRE(b.code == exit_code::kOk);
  const Run n = run({"count", "--circuit", "-", "--json"}, b.out);
  REQUIRE(n.code == exit_code::kOk);
  const Json counts = Json::parse(n.out);
  CHECK(counts["cnot"] == 7);
  CHECK(counts["pi"] == 7);
  CHECK(counts["h"] == 2);

  const Run text = run({"count", "--circuit", write_circuit("empty.json", Circuit(2))});
  CHECK(text.code == exit_code::kOk);
  CHECK(text.out.find("cnot: 0") != std::string::npos);
  CHECK(text.out.find("pi: 0") != std::string::npos);

  CHECK(run({"builtin", "fredkin"}).code == exit_code::kInputError);
  CHECK(run({"builtin"}).code == exit_code::kInputError);
}

TEST_CASE("cli: hermitize") {
  Circuit t(1);
  t.add(GateOp::phase(0, kPi / 4));
  const std::string in = write_circuit("t.json", t);
  const std::string out = (scratch() / "t_herm.json").string();
  const Run r = run({"hermitize", "--circuit", in, "--set", "hermitian-hpit-x", "--out", out});
  REQUIRE(r.code == exit_code::kOk);
  const Circuit c = load_circuit(out);
  CHECK(c.ops.size() == 2);
  CHECK(ref::phase_distance(circuit_unitary(c), ref::T()) < 1e-12);
  CHECK(run({"hermitize", "--circuit", in, "--set", "hermitian-hpit"}).code == exit_code::kInputError);
  CHECK(run({"hermitize", "--circuit", in, "--set", "nope"}).code == exit_code::kInputError);
}

TEST_CASE("cli: usage") {
  CHECK(run({"--help"}).code == exit_code::kOk);
  CHECK(run({}).code == exit_code::kInputError);
  CHECK(run({"transmogrify"}).code == exit_code::kInputError);
  CHECK(run({"verify", "--circuit", "x.json"}).code == exit_code::kInputError);
}
