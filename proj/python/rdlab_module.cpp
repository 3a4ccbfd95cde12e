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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rdlab/correlations.hpp"
#include "rdlab/cp_analysis.hpp"
#include "rdlab/dynamics.hpp"
#include "rdlab/error.hpp"
#include "rdlab/linalg.hpp"

namespace py = pybind11;
using namespace rdlab;

namespace {

Subsystem subsystem_from(const std::string& side) {
  if (side == "A") return Subsystem::A;
  if (side == "B") return Subsystem::B;
  throw InvalidArgument("side must be 'A' or 'B'");
}

InitialKind kind_from(const std::string& kind) {
  if (kind == "classical") return InitialKind::Classical;
  if (kind == "entangled") return InitialKind::Entangled;
  throw InvalidArgument("kind must be 'classical' or 'entangled'");
}

void bind_linalg(py::module_& m) {
  m.def("tensor", &tensor, py::arg("a"), py::arg("b"));
  m.def(
      "partial_trace",
      [](const CMatrix& mat, int d_A, int d_B, const std::string& side) {
        return partial_trace(mat, d_A, d_B, subsystem_from(side));
      },
      py::arg("m"), py::arg("d_A"), py::arg("d_B"), py::arg("side") = "B",
      "Trace out subsystem `side` ('A' or 'B').");
  m.def("expm_hermitian", &expm_hermitian, py::arg("h"), py::arg("t"), "exp(-i h t)");
  m.def("matrix_unit", &matrix_unit, py::arg("dim"), py::arg("a"), py::arg("b"));
  m.def("trace_distance", &trace_distance);
  m.def("is_hermitian", &is_hermitian, py::arg("m"), py::arg("tol") = kDefaultTol);
  m.def("is_unitary", &is_unitary, py::arg("m"), py::arg("tol") = kDefaultTol);
  m.def("is_psd", &is_psd, py::arg("m"), py::arg("tol") = kDefaultTol);
  m.def("pauli_x", &pauli_x);
  m.def("pauli_y", &pauli_y);
  m.def("pauli_z", &pauli_z);

  py::class_<OperatorBasis>(m, "OperatorBasis")
      .def_readonly("dim", &OperatorBasis::dim)
      .def_readonly("generators", &OperatorBasis::generators)
      .def_readonly("normalization", &OperatorBasis::normalization)
      .def("__len__", &OperatorBasis::size);
  m.def("generator_basis", &generator_basis, py::arg("dim"));
}

void bind_dynamics(py::module_& m) {
  py::class_<Hamiltonian>(m, "Hamiltonian")
      .def_static("general", &Hamiltonian::general, py::arg("joint"), py::arg("d_A"), py::arg("d_B"))
      .def_static("factorized", &Hamiltonian::factorized, py::arg("h_A"), py::arg("h_B"))
      .def_property_readonly("joint", &Hamiltonian::joint)
      .def_property_readonly("d_A", &Hamiltonian::d_A)
      .def_property_readonly("d_B", &Hamiltonian::d_B)
      .def_property_readonly("is_factorized", &Hamiltonian::is_factorized);

  py::class_<AmplitudePair>(m, "AmplitudePair")
      .def(py::init<Complex, Complex, double>(), py::arg("alpha"), py::arg("beta"),
           py::arg("tol") = 1e-9)
      .def_property_readonly("alpha", &AmplitudePair::alpha)
      .def_property_readonly("beta", &AmplitudePair::beta);

  py::class_<JointState>(m, "JointState")
      .def(py::init<CMatrix, int, int, double>(), py::arg("matrix"), py::arg("d_A"),
           py::arg("d_B"), py::arg("tol") = kDefaultTol)
      .def_property_readonly("matrix", &JointState::matrix)
      .def_property_readonly("d_A", &JointState::d_A)
      .def_property_readonly("d_B", &JointState::d_B)
      .def("marginal_A", &JointState::marginal_A)
      .def("marginal_B", &JointState::marginal_B);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("times", &Trajectory::times)
      .def_readonly("joint_states", &Trajectory::joint_states)
      .def_readonly("reduced_states", &Trajectory::reduced_states)
      .def("__len__", &Trajectory::size);

  py::class_<CaseComparison>(m, "CaseComparison")
      .def_readonly("t", &CaseComparison::t)
      .def_readonly("trace_distance_reduced", &CaseComparison::trace_distance_reduced)
      .def_readonly("max_joint_diagonal_gap", &CaseComparison::max_joint_diagonal_gap)
      .def_readonly("max_joint_coherence_gap", &CaseComparison::max_joint_coherence_gap);

  m.def("cnot_hamiltonian", &cnot_hamiltonian);
  m.def(
      "initial_state",
      [](const std::string& kind, const AmplitudePair& amps) {
        return initial_state(kind_from(kind), amps);
      },
      py::arg("kind"), py::arg("amps"), "kind: 'classical' or 'entangled'");
  m.def("propagator", &propagator, py::arg("h"), py::arg("t"));
  m.def("evolve", &evolve, py::arg("state"), py::arg("u"), py::arg("tol") = kDefaultTol);
  m.def(
      "reduced_trajectory",
      [](const Hamiltonian& h, const JointState& s, const std::vector<double>& times) {
        return reduced_trajectory(h, s, times);
      },
      py::arg("h"), py::arg("state0"), py::arg("times"));
  m.def(
      "compare_cases",
      [](const Hamiltonian& h, const AmplitudePair& amps, const std::vector<double>& times) {
        return compare_cases(h, amps, times);
      },
      py::arg("h"), py::arg("amps"), py::arg("times"));
}

void bind_correlations(py::module_& m) {
  py::class_<ProductDecomposition>(m, "ProductDecomposition")
      .def_readonly("d_A", &ProductDecomposition::d_A)
      .def_readonly("d_B", &ProductDecomposition::d_B)
      .def_readonly("rho_A", &ProductDecomposition::rho_A)
      .def_readonly("rho_B", &ProductDecomposition::rho_B)
      .def_readonly("gamma", &ProductDecomposition::gamma)
      .def_readonly("corr_op", &ProductDecomposition::corr_op);

  py::class_<FactorizationReport>(m, "FactorizationReport")
      .def_readonly("is_factorizable", &FactorizationReport::is_factorizable)
      .def_readonly("schmidt_singular_values", &FactorizationReport::schmidt_singular_values)
      .def_readonly("u_A", &FactorizationReport::u_A)
      .def_readonly("u_B", &FactorizationReport::u_B);

  py::class_<TheoremTrialResult>(m, "TheoremTrialResult")
      .def_readonly("max_norm_factorized", &TheoremTrialResult::max_norm_factorized)
      .def_readonly("delta_norm_reference", &TheoremTrialResult::delta_norm_reference);

  m.def("decompose", &decompose, py::arg("state"));
  m.def("delta_rho", &delta_rho, py::arg("u"), py::arg("dec"));
  m.def("matrix_element_form", &matrix_element_form, py::arg("u"), py::arg("dec"), py::arg("a"),
        py::arg("b"));
  m.def("factorize_unitary", &factorize_unitary, py::arg("u"), py::arg("d_A"), py::arg("d_B"),
        py::arg("tol") = kFactorizationTol);
  m.def("theorem_trial", &theorem_trial, py::arg("seed"), py::arg("d_A"), py::arg("d_B"));
}

void bind_cp(py::module_& m) {
  py::class_<LinearMap>(m, "LinearMap")
      .def_property_readonly("d_in", &LinearMap::d_in)
      .def_property_readonly("d_out", &LinearMap::d_out)
      .def_property_readonly("images", &LinearMap::images)
      .def("apply", &LinearMap::apply);

  py::class_<Embedding>(m, "Embedding")
      .def_property_readonly("d_A", &Embedding::d_A)
      .def_property_readonly("d_B", &Embedding::d_B)
      .def("action", &Embedding::action)
      .def("is_trace_compatible", &Embedding::is_trace_compatible, py::arg("tol") = kDefaultTol)
      .def("positive_on_basis_states", &Embedding::positive_on_basis_states,
           py::arg("tol") = kDefaultTol);

  py::class_<ChoiMatrix>(m, "ChoiMatrix")
      .def_readonly("d_in", &ChoiMatrix::d_in)
      .def_readonly("d_out", &ChoiMatrix::d_out)
      .def_readonly("matrix", &ChoiMatrix::matrix);

  py::class_<CpVerdict>(m, "CpVerdict")
      .def_readonly("completely_positive", &CpVerdict::completely_positive)
      .def_readonly("min_eigenvalue", &CpVerdict::min_eigenvalue);

  py::class_<KrausSet>(m, "KrausSet")
      .def_readonly("operators", &KrausSet::operators)
      .def("completeness", &KrausSet::completeness)
      .def("__len__", &KrausSet::size);

  m.def("product_embedding", &product_embedding, py::arg("rho_B"), py::arg("d_A") = 2);
  m.def("correlated_embedding", &correlated_embedding, py::arg("corr_op"), py::arg("rho_B"));
  m.def("induced_map", &induced_map, py::arg("e"), py::arg("u"));
  m.def("choi", &choi, py::arg("m"));
  m.def("is_cp", &is_cp, py::arg("c"), py::arg("tol") = kDefaultTol);
  m.def("kraus_from_choi", &kraus_from_choi, py::arg("c"), py::arg("tol") = kDefaultTol);
  m.def("map_from_kraus", &map_from_kraus);
  m.def("apply_map", &apply_map, py::arg("m"), py::arg("x"));
  m.def("identity_map", &identity_map);
  m.def("transpose_map", &transpose_map);
  m.def("unitary_map", &unitary_map);
}

}  // namespace

PYBIND11_MODULE(_rdlab, m) {
  m.doc() = "Exact reduced dynamics of bipartite quantum systems";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> not_cp;
  not_cp.call_once_and_store_result([&]() -> py::object {
    return py::exception<NotCompletelyPositive>(m, "NotCompletelyPositive", base.ptr());
  });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NotCompletelyPositive& e) {
      const py::object& cls = not_cp.get_stored();
      py::object err = cls(e.what());
      err.attr("eigenvalue") = e.eigenvalue();
      PyErr_SetObject(cls.ptr(), err.ptr());
    }
  });

  bind_linalg(m);
  bind_dynamics(m);
  bind_correlations(m);
  bind_cp(m);
}
