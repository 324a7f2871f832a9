// Copyright 2026 The qicsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qic/info.hpp"
#include "qic/linalg.hpp"
#include "qic/random.hpp"

using namespace qic;

namespace {

GlobalPureState basis_state(const RegisterLayout& layout, std::int64_t idx) {
  GlobalPureState s;
  s.layout = layout;
  s.amps = Vec::Zero(layout.total_dim());
  s.amps(idx) = 1.0;
  return s;
}

GlobalPureState plus_state(const std::string& label) {
  GlobalPureState s;
  s.layout = RegisterLayout({{label, 2}});
  s.amps = Vec::Constant(2, 1.0 / std::sqrt(2.0));
  return s;
}

DensityOperator qubit_density(const std::string& label, const Mat& m) {
  DensityOperator rho;
  rho.layout = RegisterLayout({{label, 2}});
  rho.mat = m;
  return rho;
}

}  // namespace

TEST_CASE("tensor of basis states places the amplitude row-major") {
  auto a = basis_state(RegisterLayout({{"A", 2}}), 0);
  auto b = basis_state(RegisterLayout({{"B", 2}}), 1);
  auto ab = tensor(a, b);
  CHECK(ab.layout.labels() == std::vector<std::string>{"A", "B"});
  CHECK(ab.amps(1) == cx(1.0, 0.0));
  CHECK(ab.amps.cwiseAbs().sum() == doctest::Approx(1.0));
}

TEST_CASE("tensor of plus states is uniform") {
  auto ab = tensor(plus_state("A"), plus_state("B"));
  for (int i = 0; i < 4; ++i) {
    CHECK(ab.amps(i).real() == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("tensor norm is multiplicative on random states") {
  Rng rng(11);
  auto a = rng.haar_state(RegisterLayout({{"A", 2}}));
  auto b = rng.haar_state(RegisterLayout({{"B", 3}}));
  auto ab = tensor(a, b);
  CHECK(ab.amps.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("tensor rejects label collisions") {
  auto a = plus_state("A");
  CHECK_THROWS_AS(tensor(a, a), validation_error);
}

TEST_CASE("partial trace of |00><00| keeps |0><0|") {
  auto s = basis_state(RegisterLayout({{"A", 2}, {"B", 2}}), 0);
  auto rho = partial_trace(s, {"A"});
  CHECK(rho.mat(0, 0).real() == doctest::Approx(1.0));
  CHECK(std::abs(rho.mat(1, 1)) == doctest::Approx(0.0));
}

TEST_CASE("partial trace of a maximally entangled pair is maximally mixed") {
  GlobalPureState s;
  s.layout = RegisterLayout({{"A", 2}, {"B", 2}});
  s.amps = Vec::Zero(4);
  s.amps(0) = s.amps(3) = 1.0 / std::sqrt(2.0);
  auto rho = partial_trace(s, {"A"});
  CHECK((rho.mat - 0.5 * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial trace respects dim_cap") {
  auto s = basis_state(RegisterLayout({{"A", 8}, {"B", 2}}), 0);
  SimConfig cfg;
  cfg.dim_cap = 4;
  CHECK_THROWS_AS(partial_trace(s, {"A"}, cfg), dim_cap_error);
}

TEST_CASE("purification round-trips for random density operators") {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    DensityOperator rho = rng.density("A", 3, rng.uniform_int(1, 3));
    auto pure = purify(rho, "R");
    auto back = partial_trace(pure, {"A"});
    CHECK((back.mat - rho.mat).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("purify of a pure state concentrates on one fresh index") {
  auto rho = qubit_density("A", (Mat(2, 2) << 1, 0, 0, 0).finished());
  auto pure = purify(rho, "R");
  CHECK(std::abs(std::abs(pure.amps(0)) - 1.0) < 1e-12);
}

TEST_CASE("purify of the maximally mixed qubit is maximally entangled") {
  auto rho = qubit_density("A", 0.5 * Mat::Identity(2, 2));
  auto pure = purify(rho, "R");
  CHECK(entropy(pure, {"A"}) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("purify of diag(0.7, 0.3) matches the eigendecomposition form") {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = 0.7;
  m(1, 1) = 0.3;
  auto pure = purify(qubit_density("A", m), "R");
  CHECK(pure.amps(0).real() == doctest::Approx(std::sqrt(0.7)).epsilon(1e-12));
  CHECK(pure.amps(3).real() == doctest::Approx(std::sqrt(0.3)).epsilon(1e-12));
  CHECK(std::abs(pure.amps(1)) + std::abs(pure.amps(2)) < 1e-12);
}

TEST_CASE("identity isometry leaves states unchanged") {
  Rng rng(5);
  auto s = rng.haar_state(RegisterLayout({{"A", 2}, {"B", 3}}));
  auto t = apply_isometry(s, identity_isometry({{"A", 2}}));
  // layout order changes (A moves to the end); compare via reduced states
  CHECK(trace_distance(partial_trace(s, {"A"}), partial_trace(t, {"A"})) <
        1e-10);
  CHECK(trace_distance(partial_trace(s, {"B"}), partial_trace(t, {"B"})) <
        1e-10);
}

TEST_CASE("reflection about theta = pi/8 maps |0> to the 2-theta vector") {
  const double theta = 3.14159265358979323846 / 8.0;
  Isometry v;
  v.in = {{"C", 2}};
  v.out = {{"C", 2}};
  v.m = Mat(2, 2);
  v.m << std::cos(2 * theta), std::sin(2 * theta), std::sin(2 * theta),
      -std::cos(2 * theta);
  auto s = basis_state(RegisterLayout({{"C", 2}}), 0);
  auto t = apply_isometry(s, v);
  CHECK(t.amps(0).real() == doctest::Approx(std::cos(2 * theta)));
  CHECK(t.amps(1).real() == doctest::Approx(std::sin(2 * theta)));
}

TEST_CASE("basis copy isometry duplicates |+> into a Bell state") {
  Isometry copy;
  copy.in = {{"B", 2}};
  copy.out = {{"Bp", 2}, {"B", 2}};
  copy.m = Mat::Zero(4, 2);
  copy.m(0, 0) = 1.0;  // |0> -> |00>
  copy.m(3, 1) = 1.0;  // |1> -> |11>
  auto t = apply_isometry(plus_state("B"), copy);
  CHECK(t.amps(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(t.amps(3).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(std::abs(t.amps(1)) + std::abs(t.amps(2)) < 1e-12);
}

TEST_CASE("apply_isometry rejects broken signatures and non-isometries") {
  auto s = plus_state("A");
  Isometry bad;
  bad.in = {{"A", 3}};
  bad.out = {{"B", 3}};
  bad.m = Mat::Identity(3, 3);
  CHECK_THROWS_AS(apply_isometry(s, bad), validation_error);

  Isometry not_iso;
  not_iso.in = {{"A", 2}};
  not_iso.out = {{"B", 2}};
  not_iso.m = Mat::Identity(2, 2) * 1.5;
  CHECK_THROWS_AS(apply_isometry(s, not_iso), validation_error);
}

TEST_CASE("trace distance basics") {
  Rng rng(7);
  DensityOperator rho = rng.density("A", 2, 2);
  CHECK(trace_distance(rho, rho) < 1e-12);

  auto zero = qubit_density("A", (Mat(2, 2) << 1, 0, 0, 0).finished());
  auto one = qubit_density("A", (Mat(2, 2) << 0, 0, 0, 1).finished());
  CHECK(trace_distance(zero, one) == doctest::Approx(2.0));

  auto mixed = qubit_density("A", 0.5 * Mat::Identity(2, 2));
  CHECK(trace_distance(mixed, zero) == doctest::Approx(1.0));

  auto other = qubit_density("B", 0.5 * Mat::Identity(2, 2));
  CHECK_THROWS_AS(trace_distance(mixed, other), validation_error);
}

TEST_CASE("eig_hermitian sorts descending and reconstructs") {
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = 3.0;
  m(1, 1) = 1.0;
  m(2, 2) = 2.0;
  auto eig = eig_hermitian(m);
  CHECK(eig.values(0) == doctest::Approx(3.0));
  CHECK(eig.values(1) == doctest::Approx(2.0));
  CHECK(eig.values(2) == doctest::Approx(1.0));

  Mat x(2, 2);
  x << 0, 1, 1, 0;
  auto ex = eig_hermitian(x);
  CHECK(ex.values(0) == doctest::Approx(1.0));
  CHECK(ex.values(1) == doctest::Approx(-1.0));

  Rng rng(13);
  DensityOperator rho = rng.density("A", 4, 4);
  auto er = eig_hermitian(rho.mat);
  Mat rebuilt = er.vectors * er.values.asDiagonal() * er.vectors.adjoint();
  CHECK((rebuilt - rho.mat).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("eigenvalues of the round density matrix at theta = pi/8") {
  const double theta = 3.14159265358979323846 / 8.0;
  // equal mixture of |0> and cos(2t)|0> + sin(2t)|1>
  Mat rho(2, 2);
  const double c = std::cos(2 * theta), s = std::sin(2 * theta);
  rho << 0.5 + 0.5 * c * c, 0.5 * c * s, 0.5 * c * s, 0.5 * s * s;
  auto eig = eig_hermitian(rho);
  const double expect_hi = std::pow(std::cos(theta), 2);
  const double expect_lo = std::pow(std::sin(theta), 2);
  CHECK(eig.values(0) == doctest::Approx(expect_hi).epsilon(1e-10));
  CHECK(eig.values(1) == doctest::Approx(expect_lo).epsilon(1e-10));
  CHECK(eig.values(0) == doctest::Approx(0.85355).epsilon(1e-4));
  CHECK(eig.values(1) == doctest::Approx(0.14645).epsilon(1e-4));
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
  Mat m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(eig_hermitian(m), validation_error);
}

TEST_CASE("trace distance is monotone under channels (random)") {
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    DensityOperator r1 = rng.density("A", 3, rng.uniform_int(1, 3));
    DensityOperator r2 = rng.density("A", 3, rng.uniform_int(1, 3));
    const double before = trace_distance(r1, r2);
    Isometry v = rng.isometry({{"A", 3}}, {{"B", 3}, {"E", 2}});
    auto n1 = partial_trace(apply_isometry(r1, v), {"B"});
    auto n2 = partial_trace(apply_isometry(r2, v), {"B"});
    CHECK(trace_distance(n1, n2) <= before + 1e-9);
  }
}

TEST_CASE("conditional density extracts classical branches") {
  // 1/sqrt(2) |0>_X |0>_C + 1/sqrt(2) |1>_X |+>_C
  GlobalPureState s;
  s.layout = RegisterLayout({{"X", 2}, {"C", 2}});
  s.amps = Vec::Zero(4);
  s.amps(0) = 1.0 / std::sqrt(2.0);
  s.amps(2) = 0.5;
  s.amps(3) = 0.5;
  double prob = 0.0;
  auto rho = conditional_density(s, {"C"}, "X", 1, &prob);
  CHECK(prob == doctest::Approx(0.5));
  CHECK(rho.mat(0, 1).real() == doctest::Approx(0.5));
}
