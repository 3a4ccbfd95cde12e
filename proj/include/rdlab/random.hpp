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
#include <random>

#include "rdlab/linalg.hpp"

namespace rdlab {

/// Seeded sampler for random states and unitaries. Every draw is a pure
/// function of the seed and the call sequence.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double normal();
  double uniform();
  Complex complex_normal();

  /// Ginibre matrix with iid standard complex normal entries.
  CMatrix ginibre(int rows, int cols);
  /// Haar-distributed unitary (QR of a Ginibre matrix, phases fixed).
  CMatrix unitary(int dim);
  /// GUE-like Hermitian matrix (G + G^dagger) / 2.
  CMatrix hermitian(int dim);
  /// Normalized pure state vector.
  CVector pure_state(int dim);
  /// Full-rank density matrix: Hilbert-Schmidt draw mixed with I/dim.
  CMatrix density(int dim);
  /// Correlated density matrix on H_A (x) H_B: marginal of a random pure
  /// state on (H_A (x) H_B) (x) H_C with dim C = d_A d_B, mixed with
  /// weight `mix` of I/(d_A d_B) so that the result is full rank.
  CMatrix correlated_state(int d_A, int d_B, double mix = 0.05);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace rdlab
