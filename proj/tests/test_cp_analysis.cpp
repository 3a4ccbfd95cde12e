// Copyright 2026 The rdlab Authors
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

#include "doctest.h"

#include "oracles.hpp"
#include "rdlab/correlations.hpp"
#include "rdlab/cp_analysis.hpp"
#include "rdlab/error.hpp"
#include "rdlab/random.hpp"
#include "test_helpers.hpp"

using namespace rdlab;
using namespace rdlab::testing;

namespace {

// Brute-force Choi eigenvalues at t = pi/2 for the correlated embedding
// (1/4 sigma_z (x) sigma_z, I/2) under the C-NOT propagator. Analytic form
// (1 -/+ sqrt 2) / 2, each twice.
constexpr double kCnotChoiMin = -0.2071067811865476;
constexpr double kCnotChoiMax = 1.2071067811865481;

double max_image_diff(const LinearMap& a, const LinearMap& b) {
  double worst = 0.0;
  for (int i = 0; i < a.d_in(); ++i)
    for (int j = 0; j < a.d_in(); ++j) worst = std::max(worst, max_diff(a.image(i, j), b.image(i, j)));
  return worst;
}

KrausSet random_kraus(Sampler& s, int d_in, int d_out, int count) {
  KrausSet k;
  k.d_in = d_in;
  k.d_out = d_out;
  for (int n = 0; n < count; ++n) k.operators.push_back(s.ginibre(d_out, d_in));
  return k;
}

// Random traceless-on-B correlation operator: marginal-free part of a
// random correlated state.
CMatrix random_corr_op(Sampler& s, int d_A, int d_B) {
  return decompose(JointState(s.correlated_state(d_A, d_B), d_A, d_B)).corr_op;
}

const CMatrix& zz_quarter() {
  static const CMatrix m = 0.25 * tensor(pauli_z(), pauli_z());
  return m;
}

}  // namespace

TEST_SUITE("cp_analysis") {

TEST_CASE("product_embedding: examples and trace compatibility") {
  const auto e = product_embedding(ket_bra(2, 0, 0));
  CHECK(max_diff(e.action(ket_bra(2, 0, 0)), ket_bra(4, 0, 0)) == 0.0);
  CHECK(e.is_trace_compatible());
  CHECK(e.positive_on_basis_states());

  Sampler s(41);
  const CMatrix rho_B = s.density(3);
  const auto e3 = product_embedding(rho_B, 3);
  CHECK(e3.d_A() == 3);
  CHECK(e3.d_B() == 3);
  CHECK(e3.is_trace_compatible());
  const CMatrix x = s.ginibre(3, 3);
  CHECK(max_diff(e3.action(x), tensor(x, rho_B)) < 1e-14);

  CHECK_THROWS_AS(product_embedding(identity(2)), InvalidArgument);
}

TEST_CASE("product_embedding: induced maps are CP under any joint unitary") {
  Sampler s(42);
  for (int trial = 0; trial < 50; ++trial) {
    const int d_A = 2 + trial % 2;
    const int d_B = 2 + (trial / 2) % 2;
    const auto e = product_embedding(s.density(d_B), d_A);
    const CMatrix u = s.unitary(d_A * d_B);
    const auto c = choi(induced_map(e, u));
    const auto verdict = is_cp(c);
    CHECK(verdict.completely_positive);
    CHECK(verdict.min_eigenvalue >= -1e-10);
    CHECK(oracle::jacobi_eigenvalues(c.matrix).front() >= -1e-10);
  }
}

TEST_CASE("correlated_embedding: zero corr_op reduces to the product embedding") {
  Sampler s(43);
  const CMatrix rho_B = s.density(2);
  const auto a = correlated_embedding(CMatrix::Zero(6, 6), rho_B);
  const auto b = product_embedding(rho_B, 3);
  CHECK(max_image_diff(a.as_map(), b.as_map()) == 0.0);
}

TEST_CASE("correlated_embedding: the classical alpha = beta state is in the image") {
  const auto e = correlated_embedding(zz_quarter(), 0.5 * identity(2));
  CHECK(e.is_trace_compatible());
  const CMatrix image = e.action(0.5 * identity(2));
  const auto expected = initial_state(InitialKind::Classical, AmplitudePair(kInvSqrt2, kInvSqrt2));
  CHECK(max_diff(image, expected.matrix()) < 1e-15);
  const auto dec = decompose(expected);
  CHECK(max_diff(e.action(dec.rho_A), tensor(dec.rho_A, dec.rho_B) + dec.corr_op) < 1e-15);
}

TEST_CASE("correlated_embedding: basis states can leave the physical domain") {
  const auto e = correlated_embedding(zz_quarter(), 0.5 * identity(2));
  CHECK_FALSE(e.positive_on_basis_states());
  // brute force: diag(0, 0, 1/2, 1/2) + diag(1, -1, -1, 1)/4
  const auto values = oracle::jacobi_eigenvalues(e.action(ket_bra(2, 1, 1)));
  REQUIRE(values.size() == 4);
  CHECK(values[0] == doctest::Approx(-0.25).epsilon(1e-12));
  CHECK(values[1] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(values[2] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(values[3] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(min_eigenvalue(e.action(ket_bra(2, 1, 1))) == doctest::Approx(-0.25).epsilon(1e-12));
}

TEST_CASE("correlated_embedding: error paths") {
  CHECK_THROWS_AS(correlated_embedding(tensor(pauli_z(), identity(2)), 0.5 * identity(2)), InvalidArgument);
  CHECK_THROWS_AS(correlated_embedding(zz_quarter(), identity(2)), InvalidArgument);
  CHECK_THROWS_AS(correlated_embedding(CMatrix::Zero(5, 5), 0.5 * identity(2)), DimensionError);
}

TEST_CASE("induced_map: local unitaries give the unitary channel") {
  Sampler s(44);
  for (int trial = 0; trial < 20; ++trial) {
    const int d_A = 2 + trial % 2;
    const int d_B = 2 + (trial / 2) % 2;
    const CMatrix u_A = s.unitary(d_A);
    const CMatrix u = tensor(u_A, s.unitary(d_B));
    const auto target = unitary_map(u_A);
    CHECK(max_image_diff(induced_map(product_embedding(s.density(d_B), d_A), u), target) < 1e-10);
    const CMatrix rho_B = s.density(d_B);
    const auto e = correlated_embedding(random_corr_op(s, d_A, d_B), rho_B);
    CHECK(max_image_diff(induced_map(e, u), target) < 1e-10);
  }
}

TEST_CASE("induced_map: C-NOT at pi/2 with the correlated embedding is not CP") {
  const auto e = correlated_embedding(zz_quarter(), 0.5 * identity(2));
  const CMatrix u = propagator(cnot_hamiltonian(), kPi / 2);
  const auto c = choi(induced_map(e, u));

  const auto ref = oracle::jacobi_eigenvalues(c.matrix);
  REQUIRE(ref.size() == 4);
  CHECK(ref[0] == doctest::Approx(kCnotChoiMin).epsilon(1e-12));
  CHECK(ref[1] == doctest::Approx(kCnotChoiMin).epsilon(1e-12));
  CHECK(ref[2] == doctest::Approx(kCnotChoiMax).epsilon(1e-12));
  CHECK(ref[3] == doctest::Approx(kCnotChoiMax).epsilon(1e-12));
  CHECK(kCnotChoiMin == doctest::Approx((1.0 - std::sqrt(2.0)) / 2.0).epsilon(1e-15));

  const auto verdict = is_cp(c);
  CHECK_FALSE(verdict.completely_positive);
  CHECK(verdict.min_eigenvalue == doctest::Approx(kCnotChoiMin).epsilon(1e-12));
  CHECK(verdict.min_eigenvalue < -1e-6);

  try {
    kraus_from_choi(c);
    FAIL("expected NotCompletelyPositive");
  } catch (const NotCompletelyPositive& err) {
    CHECK(err.eigenvalue() == doctest::Approx(kCnotChoiMin).epsilon(1e-12));
  }
}

TEST_CASE("induced_map: dimension mismatch") {
  const auto e = product_embedding(0.5 * identity(2));
  CHECK_THROWS_AS(induced_map(e, identity(6)), DimensionError);
}

TEST_CASE("choi: identity, transpose and unitary channels") {
  const auto id = choi(identity_map(2));
  CMatrix phi = CMatrix::Zero(4, 4);
  phi(0, 0) = phi(0, 3) = phi(3, 0) = phi(3, 3) = 1.0;  // 2 |Phi+><Phi+|
  CHECK(max_diff(id.matrix, phi) == 0.0);
  CHECK(std::abs(id.matrix.trace() - 2.0) == 0.0);

  const auto tr = choi(transpose_map(2));
  CMatrix swap = CMatrix::Zero(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  CHECK(max_diff(tr.matrix, swap) == 0.0);
  const auto swap_values = oracle::jacobi_eigenvalues(tr.matrix);
  CHECK(swap_values[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(swap_values[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(swap_values[3] == doctest::Approx(1.0).epsilon(1e-12));

  Sampler s(45);
  for (int dim : {2, 3, 4}) {
    const CMatrix u = s.unitary(dim);
    const auto k = kraus_from_choi(choi(unitary_map(u)));
    REQUIRE(k.size() == 1);
    CHECK(max_diff_up_to_phase(k.operators[0], u) < 1e-10);
  }
}

TEST_CASE("is_cp: verdicts and error") {
  for (int dim : {2, 3, 4}) {
    const auto id = is_cp(choi(identity_map(dim)));
    CHECK(id.completely_positive);
    CHECK(std::abs(id.min_eigenvalue) < 1e-12);
    const auto tr = is_cp(choi(transpose_map(dim)));
    CHECK_FALSE(tr.completely_positive);
    CHECK(tr.min_eigenvalue == doctest::Approx(-1.0).epsilon(1e-10));
  }
  ChoiMatrix bad{2, 2, CMatrix::Zero(4, 4)};
  bad.matrix(0, 1) = 1.0;
  CHECK_THROWS_AS(is_cp(bad), InvalidArgument);
}

TEST_CASE("kraus_from_choi: identity, theorem path and transpose") {
  const auto id = kraus_from_choi(choi(identity_map(3)));
  REQUIRE(id.size() == 1);
  CHECK(max_diff_up_to_phase(id.operators[0], identity(3)) < 1e-12);

  Sampler s(46);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix u_A = s.unitary(2);
    const CMatrix u = tensor(u_A, s.unitary(3));
    const auto e = correlated_embedding(random_corr_op(s, 2, 3), s.density(3));
    const auto c = choi(induced_map(e, u));
    const auto k = kraus_from_choi(c);
    REQUIRE(k.size() == 1);
    CHECK(max_diff_up_to_phase(k.operators[0], u_A) < 1e-10);
    CHECK(max_diff(k.completeness(), identity(2)) < 1e-10);
  }

  try {
    kraus_from_choi(choi(transpose_map(2)));
    FAIL("expected NotCompletelyPositive");
  } catch (const NotCompletelyPositive& err) {
    CHECK(err.eigenvalue() == doctest::Approx(-1.0).epsilon(1e-10));
  }
}

TEST_CASE("kraus_from_choi: round trip on random CP maps") {
  Sampler s(47);
  for (int trial = 0; trial < 50; ++trial) {
    const int d_in = 2 + trial % 3;
    const int d_out = 2 + (trial / 3) % 3;
    const int count = 1 + trial % 4;
    const auto source = map_from_kraus(random_kraus(s, d_in, d_out, count));
    const auto k = kraus_from_choi(choi(source));
    CHECK(k.size() == std::size_t(std::min(count, d_in * d_out)));
    for (std::size_t n = 1; n < k.size(); ++n) CHECK(k.operators[n - 1].norm() >= k.operators[n].norm() - 1e-12);
    const auto rebuilt = map_from_kraus(k);
    CHECK(max_image_diff(rebuilt, source) < 1e-10);
    for (int x = 0; x < 20; ++x) {
      const CMatrix in = s.ginibre(d_in, d_in);
      CHECK(max_diff(apply_map(rebuilt, in), apply_map(source, in)) < 1e-10);
    }
  }
}

TEST_CASE("KrausSet: completeness tracks trace preservation") {
  Sampler s(48);
  const CMatrix u = s.unitary(6);
  const auto tp = kraus_from_choi(choi(induced_map(product_embedding(s.density(3), 2), u)));
  CHECK(max_diff(tp.completeness(), identity(2)) < 1e-10);

  const auto scaled = kraus_from_choi(choi(map_from_kraus(KrausSet{2, 2, {0.5 * identity(2)}})));
  CHECK(max_diff(scaled.completeness(), 0.25 * identity(2)) < 1e-12);
}

TEST_CASE("apply_map: examples") {
  Sampler s(49);
  const CMatrix x = s.ginibre(3, 3);
  CHECK(max_diff(apply_map(identity_map(3), x), x) == 0.0);
  CHECK_THROWS_AS(apply_map(identity_map(3), identity(2)), DimensionError);

  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix rho_A = s.density(2);
    const CMatrix rho_B = s.density(3);
    const CMatrix u = s.unitary(6);
    const CMatrix via_map = apply_map(induced_map(product_embedding(rho_B, 2), u), rho_A);
    const CMatrix direct = oracle::trace_out_B(
        oracle::matmul(oracle::matmul(u, oracle::kron(rho_A, rho_B)), oracle::dagger(u)), 2, 3);
    CHECK(max_diff(via_map, direct) < 1e-12);
  }
}

TEST_CASE("induced maps preserve trace and Hermiticity") {
  Sampler s(50);
  for (int trial = 0; trial < 30; ++trial) {
    const int d_A = 2 + trial % 2;
    const int d_B = 2 + (trial / 2) % 2;
    const auto e = correlated_embedding(random_corr_op(s, d_A, d_B), s.density(d_B));
    const auto m = induced_map(e, s.unitary(d_A * d_B));
    const CMatrix x = s.ginibre(d_A, d_A);
    CHECK(std::abs(apply_map(m, x).trace() - x.trace()) < 1e-10);
    const CMatrix h = s.hermitian(d_A);
    CHECK(is_hermitian(apply_map(m, h), 1e-10));
    CHECK(is_hermitian(choi(m).matrix, 1e-10));
  }
}

TEST_CASE("convex combinations of CP maps are CP") {
  Sampler s(51);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 3;
    const auto a = choi(map_from_kraus(random_kraus(s, d, d, 1 + trial % 3)));
    const auto b = choi(induced_map(product_embedding(s.density(2), d), s.unitary(2 * d)));
    const double p = s.uniform();
    const ChoiMatrix mix{d, d, p * a.matrix + (1.0 - p) * b.matrix};
    CHECK(is_cp(mix).completely_positive);
  }
}

TEST_CASE("map-level theorem: factorizable joint unitaries keep any correlated embedding CP") {
  Sampler s(52);
  for (int trial = 0; trial < 100; ++trial) {
    const int d_A = 2 + trial % 2;
    const int d_B = 2 + (trial / 2) % 2;
    const CMatrix u_A = s.unitary(d_A);
    const CMatrix u = tensor(u_A, s.unitary(d_B));
    const auto e = correlated_embedding(random_corr_op(s, d_A, d_B), s.density(d_B));
    const auto m = induced_map(e, u);
    CHECK(max_image_diff(m, unitary_map(u_A)) < 1e-10);
    const auto c = choi(m);
    const auto verdict = is_cp(c);
    CHECK(verdict.completely_positive);
    CHECK(verdict.min_eigenvalue >= -1e-10);
    CHECK(kraus_from_choi(c).size() == 1);
  }
}

TEST_CASE("LinearMap: construction checks") {
  CHECK_THROWS_AS(LinearMap(2, 2, {identity(2)}), DimensionError);
  CHECK_THROWS_AS(LinearMap(1, 2, {identity(3)}), DimensionError);
  CHECK_THROWS_AS(LinearMap(0, 2, {}), DimensionError);
}

}  // TEST_SUITE
