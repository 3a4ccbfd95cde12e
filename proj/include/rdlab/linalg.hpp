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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace rdlab {

using Complex = std::complex<double>;

/// Dense square complex matrix. Carrier for states, Hamiltonians and
/// unitaries alike.
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Default absolute tolerance for Hermitian / unitary / PSD predicates.
inline constexpr double kDefaultTol = 1e-10;

/// Subsystem of a bipartite space H_A (x) H_B. A is always the first
/// tensor factor; kets are labelled |a b>.
enum class Subsystem { A, B };

// ---- elementary matrices ------------------------------------------------

CMatrix identity(int dim);
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

/// |a><b| in dimension dim. Throws InvalidArgument when an index is out of
/// range.
CMatrix matrix_unit(int dim, int a, int b);

// ---- tensor structure ---------------------------------------------------

/// Kronecker product a (x) b. Entry [(i*db + k), (j*db + l)] = a[i,j] b[k,l].
CMatrix tensor(const CMatrix& a, const CMatrix& b);

/// Traces out `traced` from an operator on H_A (x) H_B.
///
/// Tracing out B gives the d_A x d_A matrix with [i,j] = sum_k m[(i,k),(j,k)];
/// tracing out A is the mirror image. Throws DimensionError unless m is
/// square with m.rows() == d_A * d_B.
CMatrix partial_trace(const CMatrix& m, int d_A, int d_B, Subsystem traced);

// ---- predicates ---------------------------------------------------------

bool is_square(const CMatrix& m);
bool is_hermitian(const CMatrix& m, double tol = kDefaultTol);
bool is_unitary(const CMatrix& m, double tol = kDefaultTol);
/// Hermitian and smallest eigenvalue >= -tol.
bool is_psd(const CMatrix& m, double tol = kDefaultTol);
/// Hermitian, PSD and unit trace.
bool is_density_matrix(const CMatrix& m, double tol = kDefaultTol);

// ---- spectral routines --------------------------------------------------

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
struct HermitianSpectrum {
  RVector values;
  CMatrix vectors;  // columns are eigenvectors
};

/// Throws InvalidArgument when h is not Hermitian within tol.
HermitianSpectrum eigh(const CMatrix& h, double tol = kDefaultTol);

RVector eigenvalues_hermitian(const CMatrix& h, double tol = kDefaultTol);
double min_eigenvalue(const CMatrix& h, double tol = kDefaultTol);

/// exp(-i h t) through the spectral decomposition of h. The result is
/// unitary to roundoff. Throws InvalidArgument for non-Hermitian h.
CMatrix expm_hermitian(const CMatrix& h, double t);

/// 1/2 ||a - b||_1 for Hermitian a, b.
double trace_distance(const CMatrix& a, const CMatrix& b);

/// Largest |m[i,j]| over all entries.
double max_abs_entry(const CMatrix& m);

// ---- operator bases -----------------------------------------------------

/// Hermitian traceless generators of su(dim), Hilbert-Schmidt orthogonal
/// with trace(g_i g_j) = normalization * delta_ij.
struct OperatorBasis {
  int dim = 0;
  std::vector<CMatrix> generators;
  double normalization = 2.0;

  std::size_t size() const { return generators.size(); }
};

/// Generalized Gell-Mann matrices. Ordering: symmetric off-diagonal pairs
/// (j<k, lexicographic), antisymmetric pairs in the same order, then the
/// dim-1 diagonal generators. For dim = 2 this is exactly
/// (sigma_x, sigma_y, sigma_z). Throws InvalidArgument for dim < 2.
OperatorBasis generator_basis(int dim);

}  // namespace rdlab
