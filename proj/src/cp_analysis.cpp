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

#include "rdlab/cp_analysis.hpp"

#include <cmath>
#include <string>

#include "rdlab/error.hpp"

namespace rdlab {

namespace {

template <typename Fn>
std::vector<CMatrix> tabulate(int d_in, Fn&& fn) {
  std::vector<CMatrix> images;
  images.reserve(std::size_t(d_in) * d_in);
  for (int i = 0; i < d_in; ++i) {
    for (int j = 0; j < d_in; ++j) images.push_back(fn(matrix_unit(d_in, i, j)));
  }
  return images;
}

}  // namespace

LinearMap::LinearMap(int d_in, int d_out, std::vector<CMatrix> images)
    : d_in_(d_in), d_out_(d_out), images_(std::move(images)) {
  if (d_in < 1 || d_out < 1) throw DimensionError("LinearMap: dims must be positive");
  if (images_.size() != std::size_t(d_in) * d_in) {
    throw DimensionError("LinearMap: expected d_in^2 images");
  }
  for (const auto& img : images_) {
    if (img.rows() != d_out || img.cols() != d_out) {
      throw DimensionError("LinearMap: image is not d_out x d_out");
    }
  }
}

CMatrix LinearMap::apply(const CMatrix& x) const {
  if (x.rows() != d_in_ || x.cols() != d_in_) {
    throw DimensionError("LinearMap::apply: input is not d_in x d_in");
  }
  CMatrix out = CMatrix::Zero(d_out_, d_out_);
  for (int i = 0; i < d_in_; ++i) {
    for (int j = 0; j < d_in_; ++j) {
      if (x(i, j) != Complex(0.0)) out += x(i, j) * image(i, j);
    }
  }
  return out;
}

Embedding::Embedding(int d_A, int d_B, std::vector<CMatrix> images)
    : map_(d_A, d_A * d_B, std::move(images)), d_B_(d_B) {}

bool Embedding::is_trace_compatible(double tol) const {
  for (int i = 0; i < d_A(); ++i) {
    for (int j = 0; j < d_A(); ++j) {
      const Complex expected = i == j ? 1.0 : 0.0;
      if (std::abs(map_.image(i, j).trace() - expected) > tol) return false;
    }
  }
  return true;
}

bool Embedding::positive_on_basis_states(double tol) const {
  for (int a = 0; a < d_A(); ++a) {
    if (!is_psd(map_.image(a, a), tol)) return false;
  }
  return true;
}

CMatrix KrausSet::completeness() const {
  CMatrix sum = CMatrix::Zero(d_in, d_in);
  for (const auto& k : operators) sum += k.adjoint() * k;
  return sum;
}

Embedding product_embedding(const CMatrix& rho_B, int d_A) {
  if (!is_density_matrix(rho_B)) {
    throw InvalidArgument("product_embedding: rho_B is not a density matrix");
  }
  if (d_A < 1) throw DimensionError("product_embedding: d_A must be positive");
  return Embedding(d_A, int(rho_B.rows()),
                   tabulate(d_A, [&](const CMatrix& e) { return tensor(e, rho_B); }));
}

Embedding correlated_embedding(const CMatrix& corr_op, const CMatrix& rho_B) {
  if (!is_density_matrix(rho_B)) {
    throw InvalidArgument("correlated_embedding: rho_B is not a density matrix");
  }
  const int d_B = int(rho_B.rows());
  if (!is_square(corr_op) || corr_op.rows() % d_B != 0) {
    throw DimensionError("correlated_embedding: corr_op dim is not a multiple of d_B");
  }
  const int d_A = int(corr_op.rows()) / d_B;
  const CMatrix marginal = partial_trace(corr_op, d_A, d_B, Subsystem::B);
  if (max_abs_entry(marginal) > kDefaultTol) {
    throw InvalidArgument("correlated_embedding: corr_op has nonzero B-partial-trace");
  }
  return Embedding(d_A, d_B, tabulate(d_A, [&](const CMatrix& e) -> CMatrix {
                     return tensor(e, rho_B) + e.trace() * corr_op;
                   }));
}

LinearMap induced_map(const Embedding& e, const CMatrix& u) {
  const int joint = e.d_A() * e.d_B();
  if (!is_square(u) || u.rows() != joint) {
    throw DimensionError("induced_map: unitary dim does not match embedding");
  }
  std::vector<CMatrix> images;
  images.reserve(e.as_map().images().size());
  for (const auto& img : e.as_map().images()) {
    images.push_back(partial_trace(u * img * u.adjoint(), e.d_A(), e.d_B(), Subsystem::B));
  }
  return LinearMap(e.d_A(), e.d_A(), std::move(images));
}

ChoiMatrix choi(const LinearMap& m) {
  ChoiMatrix c;
  c.d_in = m.d_in();
  c.d_out = m.d_out();
  c.matrix = CMatrix::Zero(c.d_in * c.d_out, c.d_in * c.d_out);
  for (int i = 0; i < c.d_in; ++i) {
    for (int j = 0; j < c.d_in; ++j) {
      c.matrix.block(i * c.d_out, j * c.d_out, c.d_out, c.d_out) = m.image(i, j);
    }
  }
  return c;
}

CpVerdict is_cp(const ChoiMatrix& c, double tol) {
  if (!is_hermitian(c.matrix, tol)) {
    throw InvalidArgument("is_cp: Choi matrix is not Hermitian");
  }
  const double lo = min_eigenvalue(c.matrix, tol);
  return {lo >= -tol, lo};
}

KrausSet kraus_from_choi(const ChoiMatrix& c, double tol) {
  const auto spec = eigh(c.matrix, tol);
  if (spec.values(0) < -tol) throw NotCompletelyPositive(spec.values(0));

  KrausSet set;
  set.d_in = c.d_in;
  set.d_out = c.d_out;
  // Largest weights first.
  for (Eigen::Index k = spec.values.size() - 1; k >= 0; --k) {
    const double lambda = spec.values(k);
    if (lambda <= tol) break;
    const CVector v = spec.vectors.col(k) * std::sqrt(lambda);
    set.operators.emplace_back(Eigen::Map<const CMatrix>(v.data(), c.d_out, c.d_in));
  }
  return set;
}

LinearMap map_from_kraus(const KrausSet& k) {
  return LinearMap(k.d_in, k.d_out, tabulate(k.d_in, [&](const CMatrix& e) {
                     CMatrix out = CMatrix::Zero(k.d_out, k.d_out);
                     for (const auto& op : k.operators) out += op * e * op.adjoint();
                     return out;
                   }));
}

CMatrix apply_map(const LinearMap& m, const CMatrix& x) { return m.apply(x); }

LinearMap identity_map(int dim) {
  return LinearMap(dim, dim, tabulate(dim, [](const CMatrix& e) { return e; }));
}

LinearMap transpose_map(int dim) {
  return LinearMap(dim, dim, tabulate(dim, [](const CMatrix& e) -> CMatrix { return e.transpose(); }));
}

LinearMap unitary_map(const CMatrix& u) {
  if (!is_square(u)) throw DimensionError("unitary_map: operator is not square");
  return LinearMap(int(u.rows()), int(u.rows()), tabulate(int(u.rows()), [&](const CMatrix& e) -> CMatrix {
                     return u * e * u.adjoint();
                   }));
}

}  // namespace rdlab
