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

#include "rdlab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rdlab/error.hpp"

namespace rdlab {

Hamiltonian Hamiltonian::general(CMatrix joint, int d_A, int d_B) {
  if (d_A < 1 || d_B < 1 || !is_square(joint) ||
      joint.rows() != Eigen::Index(d_A) * d_B) {
    throw DimensionError("Hamiltonian: joint matrix does not match d_A*d_B");
  }
  if (!is_hermitian(joint)) {
    throw InvalidArgument("Hamiltonian: joint matrix is not Hermitian");
  }
  return Hamiltonian(std::move(joint), d_A, d_B, std::nullopt);
}

Hamiltonian Hamiltonian::factorized(CMatrix h_A, CMatrix h_B) {
  if (!is_hermitian(h_A) || !is_hermitian(h_B)) {
    throw InvalidArgument("Hamiltonian: local terms must be Hermitian");
  }
  const int d_A = int(h_A.rows());
  const int d_B = int(h_B.rows());
  CMatrix joint = tensor(h_A, identity(d_B)) + tensor(identity(d_A), h_B);
  return Hamiltonian(std::move(joint), d_A, d_B,
                     LocalTerms{std::move(h_A), std::move(h_B)});
}

AmplitudePair::AmplitudePair(Complex alpha, Complex beta, double tol)
    : alpha_(alpha), beta_(beta) {
  const double norm = std::norm(alpha) + std::norm(beta);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > tol) {
    throw InvalidArgument("AmplitudePair: |alpha|^2 + |beta|^2 = " +
                          std::to_string(norm) + ", expected 1");
  }
}

AmplitudePair AmplitudePair::from_real_alpha(double a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw InvalidArgument("AmplitudePair: real alpha must lie in [0, 1]");
  }
  return AmplitudePair(a, std::sqrt(std::max(0.0, 1.0 - a * a)));
}

JointState::JointState(CMatrix matrix, int d_A, int d_B, double tol)
    : matrix_(std::move(matrix)), d_A_(d_A), d_B_(d_B) {
  if (d_A < 1 || d_B < 1 || !is_square(matrix_) ||
      matrix_.rows() != Eigen::Index(d_A) * d_B) {
    throw DimensionError("JointState: matrix dim does not match d_A*d_B");
  }
  if (!is_density_matrix(matrix_, tol)) {
    throw InvalidArgument("JointState: not a density matrix (Hermitian, PSD, unit trace)");
  }
}

Hamiltonian cnot_hamiltonian() {
  const CMatrix proj0 = 0.5 * (identity(2) + pauli_z());
  const CMatrix proj1 = 0.5 * (identity(2) - pauli_z());
  return Hamiltonian::general(tensor(pauli_x(), proj1) + tensor(identity(2), proj0), 2, 2);
}

JointState initial_state(InitialKind kind, const AmplitudePair& amps) {
  CMatrix rho = CMatrix::Zero(4, 4);
  // |00> is index 0, |11> is index 3.
  if (kind == InitialKind::Classical) {
    rho(0, 0) = amps.p0();
    rho(3, 3) = amps.p1();
  } else {
    CVector psi = CVector::Zero(4);
    psi(0) = amps.alpha();
    psi(3) = amps.beta();
    rho = psi * psi.adjoint();
  }
  return JointState(std::move(rho), 2, 2);
}

CMatrix propagator(const Hamiltonian& h, double t) { return expm_hermitian(h.joint(), t); }

JointState evolve(const JointState& state, const CMatrix& u, double tol) {
  if (!is_square(u) || u.rows() != state.dim()) {
    throw DimensionError("evolve: unitary dim does not match state");
  }
  if (!is_unitary(u, tol)) {
    throw InvalidArgument("evolve: operator is not unitary");
  }
  CMatrix rho = u * state.matrix() * u.adjoint();
  rho = 0.5 * (rho + rho.adjoint());
  return JointState(std::move(rho), state.d_A(), state.d_B());
}

Trajectory reduced_trajectory(const Hamiltonian& h, const JointState& state0,
                              std::span<const double> times) {
  if (times.empty()) {
    throw InvalidArgument("reduced_trajectory: empty time grid");
  }
  if (h.dim() != state0.dim()) {
    throw DimensionError("reduced_trajectory: Hamiltonian and state dims differ");
  }
  Trajectory traj;
  traj.times.reserve(times.size());
  traj.joint_states.reserve(times.size());
  traj.reduced_states.reserve(times.size());
  for (double t : times) {
    if (!std::isfinite(t)) {
      throw InvalidArgument("reduced_trajectory: non-finite time");
    }
    JointState joint = evolve(state0, propagator(h, t));
    traj.times.push_back(t);
    traj.reduced_states.push_back(joint.marginal_A());
    traj.joint_states.push_back(std::move(joint));
  }
  return traj;
}

std::vector<CaseComparison> compare_cases(const Hamiltonian& h,
                                          const AmplitudePair& amps,
                                          std::span<const double> times) {
  const auto classical = reduced_trajectory(h, initial_state(InitialKind::Classical, amps), times);
  const auto entangled = reduced_trajectory(h, initial_state(InitialKind::Entangled, amps), times);

  std::vector<CaseComparison> rows;
  rows.reserve(times.size());
  for (std::size_t k = 0; k < classical.size(); ++k) {
    const CMatrix diff =
        classical.joint_states[k].matrix() - entangled.joint_states[k].matrix();
    CaseComparison row;
    row.t = classical.times[k];
    row.trace_distance_reduced =
        trace_distance(classical.reduced_states[k], entangled.reduced_states[k]);
    row.max_joint_diagonal_gap = diff.diagonal().cwiseAbs().maxCoeff();
    CMatrix off = diff;
    off.diagonal().setZero();
    row.max_joint_coherence_gap = max_abs_entry(off);
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> linspace(double t_start, double t_end, int steps) {
  if (steps < 1) throw InvalidArgument("linspace: steps must be >= 1");
  std::vector<double> grid(std::size_t(steps) + 1);
  const double width = t_end - t_start;
  for (int k = 0; k <= steps; ++k) {
    grid[std::size_t(k)] = t_start + width * (double(k) / steps);
  }
  grid.back() = t_end;
  return grid;
}

}  // namespace rdlab
