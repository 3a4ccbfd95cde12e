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

#include "rdlab/random.hpp"

#include <cmath>

namespace rdlab {

double Sampler::normal() { return normal_(engine_); }

double Sampler::uniform() { return uniform_(engine_); }

Complex Sampler::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re / std::sqrt(2.0), im / std::sqrt(2.0)};
}

CMatrix Sampler::ginibre(int rows, int cols) {
  CMatrix g(rows, cols);
  // Column-major fill order is part of the reproducibility contract.
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) g(i, j) = complex_normal();
  }
  return g;
}

CMatrix Sampler::unitary(int dim) {
  const CMatrix g = ginibre(dim, dim);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

CMatrix Sampler::hermitian(int dim) {
  const CMatrix g = ginibre(dim, dim);
  return 0.5 * (g + g.adjoint());
}

CVector Sampler::pure_state(int dim) {
  CVector v = ginibre(dim, 1).col(0);
  return v / v.norm();
}

CMatrix Sampler::density(int dim) {
  const CMatrix g = ginibre(dim, dim);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.95 * rho + 0.05 * identity(dim) / double(dim);
  return 0.5 * (rho + rho.adjoint());
}

CMatrix Sampler::correlated_state(int d_A, int d_B, double mix) {
  const int d = d_A * d_B;
  const CVector psi = pure_state(d * d);
  const CMatrix big = psi * psi.adjoint();
  CMatrix rho = partial_trace(big, d, d, Subsystem::B);
  rho = (1.0 - mix) * rho + mix * identity(d) / double(d);
  return 0.5 * (rho + rho.adjoint());
}

}  // namespace rdlab
