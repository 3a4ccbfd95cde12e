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

#include "rdlab/correlations.hpp"

#include <cmath>
#include <string>

#include "rdlab/error.hpp"
#include "rdlab/random.hpp"

namespace rdlab {

namespace {

void require_joint_dim(const CMatrix& u, const ProductDecomposition& dec, const char* what) {
  if (!is_square(u) || u.rows() != Eigen::Index(dec.d_A) * dec.d_B) {
    throw DimensionError(std::string(what) + ": unitary dim does not match decomposition");
  }
}

}  // namespace

ProductDecomposition decompose(const JointState& state) {
  ProductDecomposition dec;
  dec.d_A = state.d_A();
  dec.d_B = state.d_B();
  dec.rho_A = state.marginal_A();
  dec.rho_B = state.marginal_B();
  dec.corr_op = state.matrix() - tensor(dec.rho_A, dec.rho_B);

  const auto basis_A = generator_basis(dec.d_A);
  const auto basis_B = generator_basis(dec.d_B);
  const double norm = basis_A.normalization * basis_B.normalization;
  dec.gamma = RMatrix::Zero(Eigen::Index(basis_A.size()), Eigen::Index(basis_B.size()));
  for (std::size_t i = 0; i < basis_A.size(); ++i) {
    const Complex mean_A = (basis_A.generators[i] * dec.rho_A).trace();
    for (std::size_t j = 0; j < basis_B.size(); ++j) {
      const Complex joint =
          (tensor(basis_A.generators[i], basis_B.generators[j]) * state.matrix()).trace();
      const Complex mean_B = (basis_B.generators[j] * dec.rho_B).trace();
      dec.gamma(Eigen::Index(i), Eigen::Index(j)) = (joint - mean_A * mean_B).real() / norm;
    }
  }
  return dec;
}

CMatrix correlation_operator(const RMatrix& gamma, int d_A, int d_B) {
  const auto basis_A = generator_basis(d_A);
  const auto basis_B = generator_basis(d_B);
  if (gamma.rows() != Eigen::Index(basis_A.size()) ||
      gamma.cols() != Eigen::Index(basis_B.size())) {
    throw DimensionError("correlation_operator: gamma shape does not match dims");
  }
  CMatrix out = CMatrix::Zero(d_A * d_B, d_A * d_B);
  for (Eigen::Index i = 0; i < gamma.rows(); ++i) {
    for (Eigen::Index j = 0; j < gamma.cols(); ++j) {
      if (gamma(i, j) == 0.0) continue;
      out += gamma(i, j) * tensor(basis_A.generators[std::size_t(i)],
                                  basis_B.generators[std::size_t(j)]);
    }
  }
  return out;
}

CMatrix delta_rho(const CMatrix& u, const ProductDecomposition& dec) {
  require_joint_dim(u, dec, "delta_rho");
  const CMatrix evolved = u * dec.corr_op * u.adjoint();
  return partial_trace(evolved, dec.d_A, dec.d_B, Subsystem::B);
}

Complex matrix_element_form(const CMatrix& u, const ProductDecomposition& dec, int a, int b) {
  require_joint_dim(u, dec, "matrix_element_form");
  if (a < 0 || b < 0 || a >= dec.d_A || b >= dec.d_A) {
    throw InvalidArgument("matrix_element_form: index out of range");
  }
  const auto basis_A = generator_basis(dec.d_A);
  const auto basis_B = generator_basis(dec.d_B);
  // Heisenberg-picture observable U^dagger (P_ba (x) I) U.
  const CMatrix observable =
      u.adjoint() * tensor(matrix_unit(dec.d_A, b, a), identity(dec.d_B)) * u;
  Complex sum = 0.0;
  for (std::size_t i = 0; i < basis_A.size(); ++i) {
    for (std::size_t j = 0; j < basis_B.size(); ++j) {
      const double g = dec.gamma(Eigen::Index(i), Eigen::Index(j));
      if (g == 0.0) continue;
      sum += g * (observable * tensor(basis_A.generators[i], basis_B.generators[j])).trace();
    }
  }
  return sum;
}

FactorizationReport factorize_unitary(const CMatrix& u, int d_A, int d_B, double tol) {
  if (d_A < 1 || d_B < 1 || !is_square(u) || u.rows() != Eigen::Index(d_A) * d_B) {
    throw DimensionError("factorize_unitary: dim does not match d_A*d_B");
  }
  if (!is_unitary(u)) {
    throw InvalidArgument("factorize_unitary: operator is not unitary");
  }

  CMatrix reshuffled(d_A * d_A, d_B * d_B);
  for (int i = 0; i < d_A; ++i) {
    for (int j = 0; j < d_A; ++j) {
      for (int k = 0; k < d_B; ++k) {
        for (int l = 0; l < d_B; ++l) {
          reshuffled(i * d_A + j, k * d_B + l) = u(i * d_B + k, j * d_B + l);
        }
      }
    }
  }

  Eigen::JacobiSVD<CMatrix> svd(reshuffled, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RVector& s = svd.singularValues();

  FactorizationReport report;
  report.schmidt_singular_values.assign(s.data(), s.data() + s.size());
  const double second = s.size() > 1 ? s(1) : 0.0;
  report.is_factorizable = second <= tol * s(0);
  if (!report.is_factorizable) return report;

  // R ~ s1 a b^T with vec(u_A) = a (row-major), vec(u_B) = b.
  CMatrix u_A(d_A, d_A);
  CMatrix u_B(d_B, d_B);
  const CVector left = svd.matrixU().col(0);
  const CVector right = svd.matrixV().col(0).conjugate();
  for (int i = 0; i < d_A; ++i) {
    for (int j = 0; j < d_A; ++j) u_A(i, j) = left(i * d_A + j);
  }
  for (int k = 0; k < d_B; ++k) {
    for (int l = 0; l < d_B; ++l) u_B(k, l) = right(k * d_B + l);
  }
  const double scale_A = std::sqrt(double(d_A));
  u_A *= scale_A;
  u_B *= s(0) / scale_A;

  // Entries of a unitary often tie in magnitude (|u00| = |u11| for d = 2), so
  // take the first entry in row-major order within rounding of the maximum.
  const double peak = u_A.cwiseAbs().maxCoeff();
  Complex pivot = 0.0;
  for (int i = 0; i < d_A && pivot == Complex(0.0); ++i) {
    for (int j = 0; j < d_A; ++j) {
      if (std::abs(u_A(i, j)) >= peak * (1.0 - 1e-9)) {
        pivot = u_A(i, j);
        break;
      }
    }
  }
  const Complex phase = pivot / std::abs(pivot);
  u_A *= std::conj(phase);
  u_B *= phase;

  report.u_A = std::move(u_A);
  report.u_B = std::move(u_B);
  return report;
}

TheoremTrialResult theorem_trial(std::uint64_t seed, int d_A, int d_B) {
  if (d_A < 2 || d_B < 2) {
    throw InvalidArgument("theorem_trial: dims must be >= 2");
  }
  Sampler sampler(seed);
  const JointState state(sampler.correlated_state(d_A, d_B), d_A, d_B);
  const auto dec = decompose(state);

  const CMatrix u_A = sampler.unitary(d_A);
  const CMatrix u_B = sampler.unitary(d_B);
  const CMatrix reference = expm_hermitian(sampler.hermitian(d_A * d_B), 1.0);

  TheoremTrialResult result;
  result.max_norm_factorized = delta_rho(tensor(u_A, u_B), dec).norm();
  result.delta_norm_reference = delta_rho(reference, dec).norm();
  return result;
}

}  // namespace rdlab
