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

#include <optional>
#include <span>
#include <vector>

#include "rdlab/linalg.hpp"

namespace rdlab {

/// Joint Hamiltonian on H_A (x) H_B. Units: hbar = 1, time dimensionless.
class Hamiltonian {
 public:
  struct LocalTerms {
    CMatrix h_A;
    CMatrix h_B;
  };

  /// Arbitrary Hermitian joint Hamiltonian.
  static Hamiltonian general(CMatrix joint, int d_A, int d_B);
  /// h_A (x) I + I (x) h_B.
  static Hamiltonian factorized(CMatrix h_A, CMatrix h_B);

  const CMatrix& joint() const { return joint_; }
  int d_A() const { return d_A_; }
  int d_B() const { return d_B_; }
  int dim() const { return d_A_ * d_B_; }
  bool is_factorized() const { return local_.has_value(); }
  const std::optional<LocalTerms>& local_terms() const { return local_; }

 private:
  Hamiltonian(CMatrix joint, int d_A, int d_B, std::optional<LocalTerms> local)
      : joint_(std::move(joint)), d_A_(d_A), d_B_(d_B), local_(std::move(local)) {}

  CMatrix joint_;
  int d_A_;
  int d_B_;
  std::optional<LocalTerms> local_;
};

/// (alpha, beta) with |alpha|^2 + |beta|^2 = 1.
class AmplitudePair {
 public:
  /// Throws InvalidArgument when the norm deviates from 1 by more than tol.
  AmplitudePair(Complex alpha, Complex beta, double tol = 1e-9);

  /// alpha = a, beta = sqrt(1 - a^2) for real a in [0, 1].
  static AmplitudePair from_real_alpha(double a);

  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }
  double p0() const { return std::norm(alpha_); }
  double p1() const { return std::norm(beta_); }

 private:
  Complex alpha_;
  Complex beta_;
};

/// Density matrix on H_A (x) H_B with recorded subsystem dimensions.
/// Construction checks Hermiticity, positivity and unit trace.
class JointState {
 public:
  JointState(CMatrix matrix, int d_A, int d_B, double tol = kDefaultTol);

  const CMatrix& matrix() const { return matrix_; }
  int d_A() const { return d_A_; }
  int d_B() const { return d_B_; }
  int dim() const { return d_A_ * d_B_; }

  CMatrix marginal_A() const { return partial_trace(matrix_, d_A_, d_B_, Subsystem::B); }
  CMatrix marginal_B() const { return partial_trace(matrix_, d_A_, d_B_, Subsystem::A); }

 private:
  CMatrix matrix_;
  int d_A_;
  int d_B_;
};

enum class InitialKind {
  Classical,  // |a|^2 |00><00| + |b|^2 |11><11|
  Entangled,  // (a|00> + b|11>)(a* <00| + b* <11|)
};

/// Reduced-state trajectory; reduced_states[k] = Tr_B joint_states[k].
struct Trajectory {
  std::vector<double> times;
  std::vector<JointState> joint_states;
  std::vector<CMatrix> reduced_states;

  std::size_t size() const { return times.size(); }
};

/// Per-time comparison of the classical and entangled initial conditions.
struct CaseComparison {
  double t = 0.0;
  double trace_distance_reduced = 0.0;
  double max_joint_diagonal_gap = 0.0;
  double max_joint_coherence_gap = 0.0;
};

/// sigma_x (x) |1><1| + I (x) |0><0|: flips qubit A when qubit B is 1.
Hamiltonian cnot_hamiltonian();

JointState initial_state(InitialKind kind, const AmplitudePair& amps);

/// exp(-i H t).
CMatrix propagator(const Hamiltonian& h, double t);

/// u rho u^dagger. Throws DimensionError on size mismatch and
/// InvalidArgument when u is not unitary within tol.
JointState evolve(const JointState& state, const CMatrix& u, double tol = kDefaultTol);

/// Exact evolution of state0 sampled at `times`. Throws InvalidArgument for
/// an empty grid or non-finite times.
Trajectory reduced_trajectory(const Hamiltonian& h, const JointState& state0,
                              std::span<const double> times);

std::vector<CaseComparison> compare_cases(const Hamiltonian& h,
                                          const AmplitudePair& amps,
                                          std::span<const double> times);

/// steps + 1 evenly spaced points covering [t_start, t_end].
std::vector<double> linspace(double t_start, double t_end, int steps);

}  // namespace rdlab
