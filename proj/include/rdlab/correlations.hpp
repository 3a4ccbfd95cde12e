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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rdlab/dynamics.hpp"
#include "rdlab/linalg.hpp"

namespace rdlab {

/// rho_AB = rho_A (x) rho_B + corr_op, with
/// corr_op = sum_ij gamma(i,j) sigma_i (x) tau_j over generator_basis(d_A)
/// and generator_basis(d_B). Both partial traces of corr_op vanish.
struct ProductDecomposition {
  int d_A = 0;
  int d_B = 0;
  CMatrix rho_A;
  CMatrix rho_B;
  RMatrix gamma;    // (d_A^2 - 1) x (d_B^2 - 1)
  CMatrix corr_op;  // primary representation
};

struct FactorizationReport {
  bool is_factorizable = false;
  std::vector<double> schmidt_singular_values;  // descending
  std::optional<CMatrix> u_A;
  std::optional<CMatrix> u_B;
};

struct TheoremTrialResult {
  double max_norm_factorized = 0.0;
  double delta_norm_reference = 0.0;
};

/// Default relative cutoff on the second operator-Schmidt singular value.
inline constexpr double kFactorizationTol = 1e-8;

ProductDecomposition decompose(const JointState& state);

/// sum_ij gamma(i,j) sigma_i (x) tau_j.
CMatrix correlation_operator(const RMatrix& gamma, int d_A, int d_B);

/// Tr_B[u corr_op u^dagger]: the part of the evolved reduced state that
/// comes from initial correlations. Traceless and Hermitian.
CMatrix delta_rho(const CMatrix& u, const ProductDecomposition& dec);

/// <a| delta_rho |b> evaluated as
///   sum_ij gamma(i,j) Tr[(u^dagger (|b><a| (x) I) u) (sigma_i (x) tau_j)],
/// i.e. from the coefficient form rather than from corr_op.
Complex matrix_element_form(const CMatrix& u, const ProductDecomposition& dec, int a, int b);

/// Operator-Schmidt test for u = u_A (x) u_B.
///
/// u is reshuffled into R[(i,j),(k,l)] = u[(i,k),(j,l)], a d_A^2 x d_B^2
/// matrix, and decomposed by SVD. u factorizes iff s_2 <= tol * s_1. The
/// recovered u_A is scaled to be unitary and its largest-magnitude entry
/// (first in row-major order on ties) is made real positive; u_B absorbs the
/// remaining phase so that tensor(u_A, u_B) reproduces u.
FactorizationReport factorize_unitary(const CMatrix& u, int d_A, int d_B,
                                      double tol = kFactorizationTol);

/// One seeded randomized check of the local-dynamics theorem: a random
/// correlated state, random local unitaries (result must vanish) and a
/// random entangling unitary exp(-i H) as the reference.
TheoremTrialResult theorem_trial(std::uint64_t seed, int d_A, int d_B);

}  // namespace rdlab
