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

#include <catch_amalgamated.hpp>

#include "hermit/bloch.hpp"
#include "test_util.hpp"

using namespace hermit;
namespace ref = hermit::testing;

TEST_CASE("axis construction checks the norm") {
  CHECK_NOTHROW(Axis(0, 0, 1));
  CHECK_THROWS_AS(Axis(1, 1, 0), InputError);
  CHECK_THROWS_AS(Axis(0, 0, 1 + 1e-9), InputError);
  const Axis a = Axis::normalized(3, 0, 4);
  CHECK(a.x() == Catch::Approx(0.6));
  CHECK(a.z() == Catch::Approx(0.8));
  CHECK_THROWS_AS(Axis::normalized(0, 0, 0), InputError);
}

TEST_CASE("spherical view round trips") {
  const Axis a = Axis::spherical(0.7, 2.1);
  CHECK(a.theta() == Catch::Approx(0.7));
  CHECK(a.phi() == Catch::Approx(2.1));
  CHECK(Axis::spherical(kPi / 2, 0).near(Axis::x_axis(), 1e-15));
}

TEST_CASE("canonical axis keeps theta and phi in [0, pi)") {
  Rng rng = ref::seeded(11);
  for (int i = 0; i < 200; ++i) {
    const Axis v = random_axis(rng);
    const auto [c, sign] = v.canonical();
    CHECK(c.theta() >= 0.0);
    CHECK(c.theta() < kPi);
    CHECK(c.phi() >= 0.0);
    CHECK(c.phi() < kPi);
    CHECK((sign * c.vec() - v.vec()).norm() < 1e-15);
  }
  const auto [mz, sz] = Axis(0, 0, -1).canonical();
  CHECK(mz.near(Axis::z_axis(), 0));
  CHECK(sz == -1);
  CHECK((-Axis::x_axis()).canonical().first.near(Axis::x_axis(), 0));
}

TEST_CASE("rotation matrix matches its closed form") {
  CHECK(ref::distance(rotation_matrix(0, Axis::y_axis()), ref::I2()) < 1e-15);
  CHECK(ref::distance(rotation_matrix(2 * kPi, Axis(0.6, 0, 0.8)), -ref::I2()) < 1e-15);
  CHECK(ref::distance(rotation_matrix(kPi, Axis::x_axis()), Complex(0, -1) * ref::X()) < 1e-15);
  // Pi(x) = X = i R_pi(x)
  CHECK(ref::distance(kI * rotation_matrix(kPi, Axis::x_axis()), pi_rotation(Axis::x_axis())) < 1e-15);

  Rng rng = ref::seeded(12);
  for (int i = 0; i < 200; ++i) {
    const Axis v = random_axis(rng);
    const double l = 2 * random_angle(rng);
    CHECK(ref::distance(rotation_matrix(l, v), ref::rot(l, v.x(), v.y(), v.z())) < 1e-14);
    CHECK(std::abs(rotation_matrix(l, v).determinant() - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(rotation_matrix(1.0, Axis(1, 1, 1)), InputError);
}

TEST_CASE("pi rotations") {
  CHECK(ref::distance(pi_rotation(Axis::x_axis()), ref::X()) < 1e-15);
  CHECK(ref::distance(pi_rotation(Axis::spherical(kPi / 4, 0)), ref::H()) < 1e-15);
  CHECK(ref::distance(pi_rotation(kPi / 2, kPi / 2), ref::Y()) < 1e-15);

  Rng rng = ref::seeded(13);
  for (int i = 0; i < 500; ++i) {
    const Axis v = random_axis(rng);
    const Mat2 p = pi_rotation(v);
    CHECK(ref::distance(p * p, ref::I2()) < 1e-12);
    CHECK(ref::distance(p.adjoint(), p) < 1e-12);
    CHECK(std::abs(p.trace()) < 1e-12);
    CHECK(ref::distance(pi_rotation(-v), -p) < 1e-15);
    CHECK(ref::distance(p, ref::pi_tp(v.theta(), v.phi())) < 1e-14);
    CHECK(ref::distance(p, kI * rotation_matrix(kPi, v)) < 1e-14);
  }
}

TEST_CASE("phase gates") {
  CHECK(ref::distance(phase_gate(kPi / 2), ref::S()) < 1e-15);
  CHECK(ref::distance(phase_gate(kPi / 4), ref::T()) < 1e-15);
  CHECK(ref::distance(phase_gate(0), ref::I2()) < 1e-15);
  // P(l) = e^{i l / 2} R_l(z)
  for (double l : {-2.0, 0.3, 1.7, 3.0})
    CHECK(ref::distance(phase_gate(l), std::polar(1.0, l / 2) * rotation_matrix(l, Axis::z_axis())) < 1e-15);
}

TEST_CASE("named gate constants") {
  CHECK(ref::distance(gates::x(), ref::X()) == 0);
  CHECK(ref::distance(gates::y(), ref::Y()) == 0);
  CHECK(ref::distance(gates::z(), ref::Z()) == 0);
  CHECK(ref::distance(gates::h(), ref::H()) < 1e-16);
  CHECK(ref::distance(gates::s(), ref::S()) < 1e-16);
  CHECK(ref::distance(gates::t(), ref::T()) < 1e-16);
}

TEST_CASE("rotate_axis") {
  CHECK(rotate_axis(Axis::z_axis(), Axis::x_axis(), kPi / 2).near(-Axis::y_axis(), 1e-15));
  CHECK(rotate_axis(Axis::x_axis(), Axis::z_axis(), kPi / 2).near(Axis::y_axis(), 1e-15));
  Rng rng = ref::seeded(14);
  for (int i = 0; i < 200; ++i) {
    const Axis a = random_axis(rng);
    const Axis b = random_axis(rng);
    const Axis about = random_axis(rng);
    const double t = random_angle(rng);
    CHECK(rotate_axis(about, about, t).near(about, 1e-14));
    CHECK(std::abs(rotate_axis(a, about, t).dot(rotate_axis(b, about, t)) - a.dot(b)) < 1e-12);
    // Pi(R a) = R_t(about) Pi(a) R_t(about)^dagger
    const Mat2 r = rotation_matrix(t, about);
    CHECK(ref::distance(pi_rotation(rotate_axis(a, about, t)), r * pi_rotation(a) * r.adjoint()) < 1e-13);
  }
}

TEST_CASE("angle normalization") {
  CHECK(wrap_phase(kPi) == Catch::Approx(kPi));
  CHECK(wrap_phase(-kPi) == Catch::Approx(kPi));
  CHECK(wrap_phase(3 * kPi / 2) == Catch::Approx(-kPi / 2));
  CHECK(normalize_rotation_angle(2 * kPi) == Catch::Approx(2 * kPi));
  CHECK(normalize_rotation_angle(3 * kPi) == Catch::Approx(-kPi));
  CHECK(normalize_rotation_angle(-2 * kPi) == Catch::Approx(2 * kPi));
  Rng rng = ref::seeded(15);
  for (int i = 0; i < 100; ++i) {
    const double l = 10 * random_angle(rng);
    const double n = normalize_rotation_angle(l);
    CHECK(n / 2 > -kPi);
    CHECK(n / 2 <= kPi + 1e-15);
    CHECK(ref::distance(rotation_matrix(n, Axis::y_axis()), rotation_matrix(l, Axis::y_axis())) < 1e-13);
  }
}

TEST_CASE("equivalence up to phase") {
  const PhaseMatch a = equiv_up_to_phase(ref::X(), Complex(0, 1) * ref::X(), 1e-10);
  CHECK(a.equivalent);
  CHECK(a.phase == Catch::Approx(kPi / 2));
  CHECK_FALSE(equiv_up_to_phase(ref::X(), ref::Z(), 1e-10).equivalent);
  const PhaseMatch b = equiv_up_to_phase(-ref::I2(), ref::I2(), 1e-10);
  CHECK(b.equivalent);
  CHECK(std::abs(wrap_phase(b.phase)) == Catch::Approx(kPi));
  CHECK_THROWS_AS(equiv_up_to_phase(ref::I2(), Matrix::Identity(4, 4), 1e-10), InputError);

  Rng rng = ref::seeded(16);
  for (int i = 0; i < 100; ++i) {
    const Matrix u = haar_unitary(4, rng);
    const Matrix v = haar_unitary(4, rng);
    const double g = random_angle(rng);
    const PhaseMatch m = equiv_up_to_phase(u, std::polar(1.0, g) * u);
    CHECK(m.equivalent);
    CHECK(std::abs(wrap_phase(m.phase - g)) < 1e-12);
    const PhaseMatch back = equiv_up_to_phase(std::polar(1.0, g) * u, u);
    CHECK(back.equivalent);
    CHECK(std::abs(wrap_phase(back.phase + g)) < 1e-12);
    CHECK(equiv_up_to_phase(u, u).equivalent);
    CHECK(equiv_up_to_phase(u, v).equivalent == equiv_up_to_phase(v, u).equivalent);
  }
}

TEST_CASE("unitarity checks") {
  CHECK(is_unitary(ref::H()));
  CHECK_FALSE(is_unitary(ref::mat2(1, 1, 0, 1)));
  CHECK_THROWS_AS(require_unitary(ref::mat2(1, 0, 0, 2), "m"), InputError);
  CHECK(max_norm(ref::mat2(0, -3, ref::C(0, 2), 1)) == Catch::Approx(3));
}
