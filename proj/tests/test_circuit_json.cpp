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

#include <filesystem>
#include <fstream>

#include <catch_amalgamated.hpp>

#include "hermit/circuit_json.hpp"
#include "hermit/cu4.hpp"
#include "test_util.hpp"

using namespace hermit;
namespace ref = hermit::testing;
namespace fs = std::filesystem;

namespace {

Circuit every_kind(Rng& rng) {
  Circuit c(4, Connectivity::AllToAll);
  c.ancilla = 3;
  c.add(GateOp::cnot(0, 1)).add(GateOp::cz(1, 2)).add(GateOp::ciy(2, 0)).add(GateOp::swap(0, 3));
  c.add(GateOp::h(1)).add(GateOp::x(2)).add(GateOp::phase(0, random_angle(rng)));
  c.add(GateOp::rot(3, random_angle(rng), random_axis(rng))).add(GateOp::pi(2, random_axis(rng)));
  c.add(GateOp::u2(1, haar_unitary(2, rng)));
  c.add(GateOp::mc_rot({0, 1}, 2, random_angle(rng), random_axis(rng), random_angle(rng)));
  c.add(GateOp::mc_x({0, 1, 2}, 3));
  return c;
}

Json minimal_op(const std::string& kind, std::vector<int> qubits, Json params = Json::object()) {
  return {{"kind", kind}, {"qubits", qubits}, {"params", params}};
}

Json wrap(const Json& op, int width = 2) { return {{"width", width}, {"ops", Json::array({op})}}; }

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "hermit_json_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("circuit JSON round trip is bit exact") {
  Rng rng = ref::seeded(81);
  for (int i = 0; i < 50; ++i) {
    const Circuit c = every_kind(rng);
    const Json j = circuit_to_json(c);
    const Circuit back = circuit_from_json(j);
    CHECK(same_structure(c, back));
    // text round trip, too
    CHECK(same_structure(c, circuit_from_json(Json::parse(j.dump(2)))));
  }
}

TEST_CASE("synthesized circuits survive a file round trip") {
  Rng rng = ref::seeded(82);
  const Matrix v = haar_unitary(4, rng);
  const Cu4Result r = build_cu4(v, Layout::of(LayoutKind::LnnControlMiddle), BasisKind::Pi);
  const fs::path p = temp_file("cu4.circuit.json");
  write_json_file(p.string(), circuit_to_json(r.circuit));
  const Circuit back = load_circuit(p.string());
  CHECK(same_structure(back, r.circuit));
  CHECK(back.connectivity == Connectivity::Linear);
  CHECK(ref::distance(circuit_unitary(back), circuit_unitary(r.circuit)) == 0);
}

TEST_CASE("matrix JSON round trip") {
  Rng rng = ref::seeded(83);
  for (int dim : {2, 4, 8}) {
    const Matrix m = haar_unitary(dim, rng);
    const Json j = matrix_to_json(m);
    CHECK(j["dim"] == dim);
    CHECK(j["entries"].size() == static_cast<std::size_t>(dim * dim));
    CHECK(matrix_from_json(Json::parse(j.dump())) == m);
  }
  const fs::path p = temp_file("h.json");
  write_json_file(p.string(), matrix_to_json(gates::h()));
  CHECK(load_matrix(p.string()) == gates::h());
}

TEST_CASE("matrix files are validated") {
  const Json h = matrix_to_json(gates::h());
  Json bad = h;
  bad["dim"] = 3;
  CHECK_THROWS_AS(matrix_from_json(bad), InputError);
  bad = h;
  bad["entries"].erase(0);
  CHECK_THROWS_AS(matrix_from_json(bad), InputError);
  bad = h;
  bad["entries"][0] = Json::array({1.0, 0.0});
  CHECK_THROWS_AS(matrix_from_json(bad), InputError);
  // a looser tolerance accepts the same entries
  CHECK_NOTHROW(matrix_from_json(bad, 1.0));
  bad = h;
  bad["entries"][1] = "0.7";
  CHECK_THROWS_AS(matrix_from_json(bad), InputError);
  bad = h;
  bad.erase("dim");
  CHECK_THROWS_AS(matrix_from_json(bad), InputError);
  CHECK_THROWS_AS(matrix_from_json(Json::array()), InputError);
}

TEST_CASE("circuit files are validated") {
  CHECK_NOTHROW(circuit_from_json(wrap(minimal_op("h", {0}))));
  CHECK_NOTHROW(circuit_from_json(wrap(minimal_op("pi", {1}, {{"axis", {0.0, 0.0, 1.0}}}))));
  CHECK_THROWS_AS(circuit_from_json(wrap(minimal_op("toffoli", {0, 1}))), InputError);
  CHECK_THROWS_AS(circuit_from_json(wrap(minimal_op("cnot", {0}))), InputError);
  CHECK_THROWS_AS(circuit_from_json(wrap(minimal_op("cnot", {0, 0}))), InputError);
  CHECK_THROWS_AS(circuit_from_json(wrap(minimal_op("h", {2}))), InputError);
  CHECK_THROWS_AS(circuit_from_json(wrap(minimal_op("phase", {0}))), InputError);
  CHECK_THROWS_AS(circuit_from_json(wrap(minimal_op("pi", {0}, {{"axis", {1.0, 1.0, 0.0}}}))), InputError);
  CHECK_THROWS_AS(circuit_from_json(wrap(minimal_op("pi", {0}, {{"axis", {1.0, 0.0}}}))), InputError);
  CHECK_THROWS_AS(
      circuit_from_json(wrap(minimal_op("u2", {0}, {{"matrix", {{{1, 0}, {1, 0}}, {{0, 0}, {1, 0}}}}}))),
      InputError);
  CHECK_THROWS_AS(circuit_from_json(wrap(minimal_op("mcx", {1}))), InputError);

  Json no_width = wrap(minimal_op("h", {0}));
  no_width.erase("width");
  CHECK_THROWS_AS(circuit_from_json(no_width), InputError);
  Json conn = wrap(minimal_op("h", {0}));
  conn["connectivity"] = "ring";
  CHECK_THROWS_AS(circuit_from_json(conn), InputError);
  Json anc = wrap(minimal_op("h", {0}));
  anc["ancilla"] = 5;
  CHECK_THROWS_AS(circuit_from_json(anc), InputError);
  CHECK_THROWS_AS(circuit_from_json(Json{{"width", 0}, {"ops", Json::array()}}), InputError);
  CHECK_THROWS_AS(circuit_from_json(Json{{"width", 2}}), InputError);
}

TEST_CASE("file errors") {
  CHECK_THROWS_AS(read_json_file("/nonexistent/x.json"), InputError);
  const fs::path p = temp_file("broken.json");
  std::ofstream(p) << "{\"width\": ";
  CHECK_THROWS_AS(load_circuit(p.string()), InputError);
}

TEST_CASE("report JSON") {
  SynthesisReport r;
  r.counts.cnot = 10;
  r.counts.rot_y = 10;
  r.counts.rot_z = 15;
  r.error = 1e-12;
  r.global_phase = 0.5;
  r.branches.push_back({});
  const Json j = report_to_json(r);
  CHECK(j["counts"]["cnot"] == 10);
  CHECK(j["counts"]["rot"] == 25);
  CHECK(j["error"] == 1e-12);
  CHECK(j["branches"].size() == 1);
}
