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

#include "hermit/random.hpp"

namespace hermit {

Matrix haar_unitary(int dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) z(i, j) = Complex(normal(rng), normal(rng));
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1.0);
  }
  return q;
}

Axis random_axis(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec3 v;
  do {
    v = Vec3(normal(rng), normal(rng), normal(rng));
  } while (v.norm() < 1e-6);
  return Axis::normalized(v);
}

double random_angle(Rng& rng) {
  std::uniform_real_distribution<double> uni(-kPi, kPi);
  return uni(rng);
}

}  // namespace hermit
