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

#include "rdlab/linalg.hpp"

#include <cmath>
#include <string>

#include "rdlab/error.hpp"

namespace rdlab {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_square(const CMatrix& m, const char* what) {
  if (!is_square(m)) {
    throw DimensionError(std::string(what) + ": matrix is not square (" +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ")");
  }
}

}  // namespace

CMatrix identity(int dim) { return CMatrix::Identity(dim, dim); }

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0.0, -kI, kI, 0.0;
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

CMatrix matrix_unit(int dim, int a, int b) {
  if (dim < 1 || a < 0 || b < 0 || a >= dim || b >= dim) {
    throw InvalidArgument("matrix_unit: index (" + std::to_string(a) + "," +
                          std::to_string(b) + ") out of range for dim " +
                          std::to_string(dim));
  }
  CMatrix m = CMatrix::Zero(dim, dim);
  m(a, b) = 1.0;
  return m;
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  const Eigen::Index br = b.rows();
  const Eigen::Index bc = b.cols();
  CMatrix out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix partial_trace(const CMatrix& m, int d_A, int d_B, Subsystem traced) {
  require_square(m, "partial_trace");
  if (d_A < 1 || d_B < 1 || m.rows() != Eigen::Index(d_A) * d_B) {
    throw DimensionError("partial_trace: matrix dim " +
                         std::to_string(m.rows()) + " != " +
                         std::to_string(d_A) + "*" + std::to_string(d_B));
  }
  if (traced == Subsystem::B) {
    CMatrix out = CMatrix::Zero(d_A, d_A);
    for (int i = 0; i < d_A; ++i) {
      for (int j = 0; j < d_A; ++j) {
        out(i, j) = m.block(i * d_B, j * d_B, d_B, d_B).trace();
      }
    }
    return out;
  }
  CMatrix out = CMatrix::Zero(d_B, d_B);
  for (int a = 0; a < d_A; ++a) {
    out += m.block(a * d_B, a * d_B, d_B, d_B);
  }
  return out;
}

bool is_square(const CMatrix& m) { return m.rows() == m.cols() && m.rows() > 0; }

bool is_hermitian(const CMatrix& m, double tol) {
  if (!is_square(m)) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const CMatrix& m, double tol) {
  if (!is_square(m)) return false;
  const CMatrix gram = m * m.adjoint() - identity(int(m.rows()));
  return gram.cwiseAbs().maxCoeff() <= tol;
}

bool is_psd(const CMatrix& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  return min_eigenvalue(m, tol) >= -tol;
}

bool is_density_matrix(const CMatrix& m, double tol) {
  if (!is_psd(m, tol)) return false;
  return std::abs(m.trace() - 1.0) <= tol;
}

HermitianSpectrum eigh(const CMatrix& h, double tol) {
  require_square(h, "eigh");
  if (!is_hermitian(h, tol)) {
    throw InvalidArgument("eigh: matrix is not Hermitian");
  }
  // Symmetrize so roundoff-level anti-Hermitian parts never reach the solver.
  const CMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("eigh: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RVector eigenvalues_hermitian(const CMatrix& h, double tol) {
  require_square(h, "eigenvalues_hermitian");
  if (!is_hermitian(h, tol)) {
    throw InvalidArgument("eigenvalues_hermitian: matrix is not Hermitian");
  }
  const CMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("eigenvalues_hermitian: eigensolver did not converge");
  }
  return solver.eigenvalues();
}

double min_eigenvalue(const CMatrix& h, double tol) {
  return eigenvalues_hermitian(h, tol).minCoeff();
}

CMatrix expm_hermitian(const CMatrix& h, double t) {
  const auto spec = eigh(h);
  CVector phases(spec.values.size());
  for (Eigen::Index k = 0; k < spec.values.size(); ++k) {
    phases(k) = std::exp(-kI * (spec.values(k) * t));
  }
  return spec.vectors * phases.asDiagonal() * spec.vectors.adjoint();
}

double trace_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("trace_distance: shape mismatch");
  }
  return 0.5 * eigenvalues_hermitian(a - b).cwiseAbs().sum();
}

double max_abs_entry(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

OperatorBasis generator_basis(int dim) {
  if (dim < 2) {
    throw InvalidArgument("generator_basis: dim must be >= 2, got " +
                          std::to_string(dim));
  }
  OperatorBasis basis;
  basis.dim = dim;
  basis.normalization = 2.0;
  basis.generators.reserve(std::size_t(dim) * dim - 1);

  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      CMatrix g = CMatrix::Zero(dim, dim);
      g(j, k) = 1.0;
      g(k, j) = 1.0;
      basis.generators.push_back(std::move(g));
    }
  }
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      CMatrix g = CMatrix::Zero(dim, dim);
      g(j, k) = -kI;
      g(k, j) = kI;
      basis.generators.push_back(std::move(g));
    }
  }
  for (int l = 1; l < dim; ++l) {
    const double scale = std::sqrt(2.0 / (double(l) * (l + 1)));
    CMatrix g = CMatrix::Zero(dim, dim);
    for (int j = 0; j < l; ++j) g(j, j) = scale;
    g(l, l) = -scale * l;
    basis.generators.push_back(std::move(g));
  }
  return basis;
}

}  // namespace rdlab
