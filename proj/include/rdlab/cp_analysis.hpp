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

#include <vector>

#include "rdlab/linalg.hpp"

namespace rdlab {

/// Linear map from d_in x d_in to d_out x d_out matrices, stored as its
/// images of the matrix units: images[i * d_in + j] = L(|i><j|).
class LinearMap {
 public:
  LinearMap(int d_in, int d_out, std::vector<CMatrix> images);

  int d_in() const { return d_in_; }
  int d_out() const { return d_out_; }
  const CMatrix& image(int i, int j) const { return images_[std::size_t(i * d_in_ + j)]; }
  const std::vector<CMatrix>& images() const { return images_; }

  /// Linear extension over the matrix units. Throws DimensionError if x is
  /// not d_in x d_in.
  CMatrix apply(const CMatrix& x) const;

 private:
  int d_in_;
  int d_out_;
  std::vector<CMatrix> images_;
};

/// Linear assignment of system matrices X (d_A x d_A) to joint matrices on
/// H_A (x) H_B, defined by its matrix-unit table. Images need not be
/// positive; see positive_on_basis_states().
class Embedding {
 public:
  Embedding(int d_A, int d_B, std::vector<CMatrix> images);

  int d_A() const { return map_.d_in(); }
  int d_B() const { return d_B_; }
  const LinearMap& as_map() const { return map_; }
  CMatrix action(const CMatrix& x) const { return map_.apply(x); }

  /// trace(action(E_ij)) == delta_ij for every matrix unit.
  bool is_trace_compatible(double tol = kDefaultTol) const;
  /// Whether action(|a><a|) is PSD for every computational basis state.
  bool positive_on_basis_states(double tol = kDefaultTol) const;

 private:
  LinearMap map_;
  int d_B_;
};

struct ChoiMatrix {
  int d_in = 0;
  int d_out = 0;
  CMatrix matrix;  // sum_ij |i><j| (x) L(|i><j|), dim d_in * d_out
};

struct CpVerdict {
  bool completely_positive = false;
  double min_eigenvalue = 0.0;
};

struct KrausSet {
  int d_in = 0;
  int d_out = 0;
  std::vector<CMatrix> operators;  // each d_out x d_in

  std::size_t size() const { return operators.size(); }
  /// sum_k K_k^dagger K_k.
  CMatrix completeness() const;
};

/// X -> X (x) rho_B for d_A x d_A inputs. Throws InvalidArgument unless
/// rho_B is a density matrix.
Embedding product_embedding(const CMatrix& rho_B, int d_A = 2);

/// X -> X (x) rho_B + trace(X) corr_op. Throws InvalidArgument when
/// Tr_B corr_op != 0 or rho_B is not a density matrix, DimensionError when
/// corr_op does not live on d_A * d_B.
Embedding correlated_embedding(const CMatrix& corr_op, const CMatrix& rho_B);

/// X -> Tr_B[u action(X) u^dagger].
LinearMap induced_map(const Embedding& e, const CMatrix& u);

ChoiMatrix choi(const LinearMap& m);

/// Throws InvalidArgument for a non-Hermitian Choi matrix.
CpVerdict is_cp(const ChoiMatrix& c, double tol = kDefaultTol);

/// One Kraus operator per Choi eigenvalue above tol, built from the
/// eigenvector reshaped column-major (d_out rows, d_in columns) and scaled
/// by sqrt(lambda). Throws NotCompletelyPositive when an eigenvalue is
/// below -tol.
KrausSet kraus_from_choi(const ChoiMatrix& c, double tol = kDefaultTol);

LinearMap map_from_kraus(const KrausSet& k);

CMatrix apply_map(const LinearMap& m, const CMatrix& x);

LinearMap identity_map(int dim);
LinearMap transpose_map(int dim);
/// X -> u X u^dagger.
LinearMap unitary_map(const CMatrix& u);

}  // namespace rdlab
