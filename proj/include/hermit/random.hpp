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

#include <random>

#include "hermit/bloch.hpp"

namespace hermit {

using Rng = std::mt19937_64;

/// Haar-distributed unitary of the given dimension (QR of a complex
/// Ginibre matrix with the diagonal phases of R removed).
Matrix haar_unitary(int dim, Rng& rng);

/// Uniform point on the Bloch sphere.
Axis random_axis(Rng& rng);

/// Uniform angle in (-pi, pi].
double random_angle(Rng& rng);

}  // namespace hermit
