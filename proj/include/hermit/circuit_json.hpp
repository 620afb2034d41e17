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

#include <string>

#include <json.hpp>

#include "hermit/circuit.hpp"

namespace hermit {

using Json = nlohmann::json;

// Matrix file:  {"dim": n, "entries": [[re, im], ...]}  row-major, n * n pairs.
// Circuit file: {"width": n, "connectivity": "all" | "lnn", "ancilla": q?,
//                "ops": [{"kind": ..., "qubits": [...], "params": {...}}]}
// params by kind: phase {lambda}; rot {lambda, axis}; pi {axis};
// u2 {matrix: [[[re, im], ...], ...]}; mcrot {lambda, axis, psi}; others {}.
// Doubles are written in shortest round-trip form, so parse(write(x)) == x
// bit for bit.

Json matrix_to_json(const Matrix& m);
/// Throws InputError on malformed input or when the matrix is not unitary.
Matrix matrix_from_json(const Json& j, double unitarity_eps = tol::kUnitarity);

Json circuit_to_json(const Circuit& c);
/// Throws InputError on malformed input, unknown kinds, non-unit axes or
/// out-of-range qubits.
Circuit circuit_from_json(const Json& j);

Json counts_to_json(const GateCounts& counts);
Json report_to_json(const SynthesisReport& report);

/// File helpers; I/O and parse failures raise InputError.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
Matrix load_matrix(const std::string& path, double unitarity_eps = tol::kUnitarity);
Circuit load_circuit(const std::string& path);

/// Structural equality (kinds, qubits, parameters compared exactly).
bool same_structure(const Circuit& a, const Circuit& b);

}  // namespace hermit
