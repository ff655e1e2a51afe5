// Copyright 2026 The qschmidt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qschmidt/cli.h"
#include "qschmidt/ketparse.h"
#include "qschmidt/schmidt.h"
#include "qschmidt/teleport.h"
#include "qschmidt/witness.h"

namespace py = pybind11;
using namespace qschmidt;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

// 1-D arrays become column vectors.
ComplexMatrix to_matrix(const ComplexArray &a) {
    if (a.ndim() == 1) {
        std::vector<Complex> v(a.data(), a.data() + a.shape(0));
        return ComplexMatrix(v.size(), 1, std::move(v));
    }
    if (a.ndim() != 2) {
        throw py::value_error("expected a 1-D or 2-D array");
    }
    std::vector<Complex> v(a.data(), a.data() + a.size());
    return ComplexMatrix(static_cast<size_t>(a.shape(0)), static_cast<size_t>(a.shape(1)), std::move(v));
}

ComplexArray to_numpy(const ComplexMatrix &m) {
    ComplexArray out({m.rows(), m.cols()});
    std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
    return out;
}

ComplexArray to_numpy(std::span<const Complex> v) {
    ComplexArray out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

StateVector to_state(const ComplexArray &a) {
    std::vector<Complex> v(a.data(), a.data() + a.size());
    return StateVector::from_column(ComplexMatrix::column(v));
}

Subsystem subsystem(const std::string &s) {
    if (s == "A") {
        return Subsystem::A;
    }
    if (s == "B") {
        return Subsystem::B;
    }
    throw py::value_error("traced must be 'A' or 'B'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Schmidt decomposition, teleportation and entanglement witnesses for small qubit systems";

    auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", input_error.ptr());
    py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);

    py::class_<StateVector>(m, "StateVector")
        .def(py::init([](const ComplexArray &amps) { return to_state(amps); }), py::arg("amplitudes"),
             "Normalizes the given amplitudes (length 2^n).")
        .def_property_readonly("qubits", &StateVector::qubits)
        .def_property_readonly("amplitudes", [](const StateVector &s) { return to_numpy(s.amplitudes()); })
        .def("density", [](const StateVector &s) { return to_numpy(s.density()); })
        .def("__len__", &StateVector::dim)
        .def("__repr__", [](const StateVector &s) { return "StateVector(" + format_state(s) + ")"; });

    py::class_<Evaluation>(m, "Evaluation")
        .def_readonly("state", &Evaluation::state)
        .def_readonly("raw_norm", &Evaluation::raw_norm)
        .def_readonly("renormalized", &Evaluation::renormalized);

    m.def("parse_state", [](const std::string &text) { return parse_state(text); }, py::arg("text"));
    m.def("parse_ast", [](const std::string &text) { return to_string(parse(text)); }, py::arg("text"),
          "Prefix rendering of the syntax tree.");
    m.def("format_state", &format_state, py::arg("state"), py::arg("tolerance") = 1e-10);
    m.def("fidelity", &fidelity);

    // linalg
    m.def("tensor", [](const ComplexArray &a, const ComplexArray &b) { return to_numpy(tensor(to_matrix(a), to_matrix(b))); });
    m.def("partial_trace",
          [](const ComplexArray &rho, size_t dim_a, size_t dim_b, const std::string &traced) {
              return to_numpy(partial_trace(to_matrix(rho), dim_a, dim_b, subsystem(traced)));
          },
          py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"), py::arg("traced"));
    m.def("eig_hermitian", [](const ComplexArray &a) {
        EigenResult r = eig_hermitian(to_matrix(a));
        return py::make_tuple(r.eigenvalues, to_numpy(r.eigenvectors));
    });
    m.def("svd", [](const ComplexArray &a) {
        SvdResult r = svd(to_matrix(a));
        return py::make_tuple(to_numpy(r.u), r.singular_values, to_numpy(r.v));
    });

    // schmidt
    py::enum_<Verdict>(m, "Verdict").value("Separable", Verdict::Separable).value("Entangled", Verdict::Entangled);
    py::enum_<SchmidtMethod>(m, "SchmidtMethod").value("Svd", SchmidtMethod::Svd).value("PartialTrace", SchmidtMethod::PartialTrace);

    py::class_<SchmidtResult>(m, "SchmidtResult")
        .def_readonly("coefficients", &SchmidtResult::coefficients)
        .def_readonly("raw_coefficients", &SchmidtResult::raw_coefficients)
        .def_property_readonly("basis_a", [](const SchmidtResult &r) { return to_numpy(r.basis_a); })
        .def_property_readonly("basis_b", [](const SchmidtResult &r) { return to_numpy(r.basis_b); })
        .def_readonly("schmidt_number", &SchmidtResult::schmidt_number)
        .def_readonly("verdict", &SchmidtResult::verdict)
        .def_readonly("method", &SchmidtResult::method)
        .def_readonly("threshold", &SchmidtResult::threshold)
        .def_property_readonly("rho_a",
                               [](const SchmidtResult &r) -> py::object {
                                   return r.reduced ? py::object(to_numpy(r.reduced->rho_a)) : py::none();
                               })
        .def_property_readonly("rho_b",
                               [](const SchmidtResult &r) -> py::object {
                                   return r.reduced ? py::object(to_numpy(r.reduced->rho_b)) : py::none();
                               })
        .def_property_readonly("eigenvalues_b", [](const SchmidtResult &r) -> py::object {
            return r.reduced ? py::cast(r.reduced->eigenvalues_b) : py::none();
        })
        .def("reconstruct", [](const SchmidtResult &r) { return to_numpy(reconstruct(r)); });

    py::class_<Analysis>(m, "Analysis")
        .def_readonly("svd", &Analysis::svd)
        .def_readonly("ptrace", &Analysis::ptrace)
        .def_readonly("max_deviation", &Analysis::max_deviation)
        .def_readonly("residual_svd", &Analysis::residual_svd)
        .def_readonly("residual_ptrace", &Analysis::residual_ptrace);

    m.def("correlation_matrix", [](const StateVector &s, size_t k) {
        return to_numpy(correlation_matrix(s, Partition(k, s.qubits())));
    });
    m.def("decompose_svd",
          [](const StateVector &s, size_t k, double t) { return decompose_svd(s, Partition(k, s.qubits()), t); },
          py::arg("state"), py::arg("k"), py::arg("threshold") = kDefaultSchmidtThreshold);
    m.def("decompose_ptrace",
          [](const StateVector &s, size_t k, double t) { return decompose_ptrace(s, Partition(k, s.qubits()), t); },
          py::arg("state"), py::arg("k"), py::arg("threshold") = kDefaultSchmidtThreshold);
    m.def("analyze", [](const StateVector &s, size_t k, double t) { return analyze(s, Partition(k, s.qubits()), t); },
          py::arg("state"), py::arg("k"), py::arg("threshold") = kDefaultSchmidtThreshold);

    // teleport
    py::class_<TeleportTranscript>(m, "TeleportTranscript")
        .def_readonly("input_state", &TeleportTranscript::input_state)
        .def_readonly("joint_state", &TeleportTranscript::joint_state)
        .def_property_readonly("outcome", [](const TeleportTranscript &t) { return std::string(to_string(t.outcome)); })
        .def_property_readonly("bits", [](const TeleportTranscript &t) { return classical_bits(t.outcome); })
        .def_readonly("outcome_probabilities", &TeleportTranscript::outcome_probabilities)
        .def_property_readonly("correction", [](const TeleportTranscript &t) { return std::string(to_string(t.correction)); })
        .def_readonly("received_state", &TeleportTranscript::received_state)
        .def_readonly("output_state", &TeleportTranscript::output_state)
        .def_readonly("fidelity", &TeleportTranscript::fidelity);

    m.def("bell_basis", [] {
        auto b = bell_basis();
        return std::vector<StateVector>(b.begin(), b.end());
    });
    m.def("compose_joint", &compose_joint);
    m.def("teleport", [](const StateVector &psi, uint64_t seed) { return run(psi, seed); }, py::arg("psi"), py::arg("seed") = 0);

    // witness
    m.def("realign", [](const ComplexArray &x, size_t da, size_t db) { return to_numpy(realign(to_matrix(x), da, db)); });
    m.def("operator_schmidt",
          [](const ComplexArray &x, size_t da, size_t db, double t) {
              OperatorSchmidt d = operator_schmidt(to_matrix(x), da, db, t);
              py::list a;
              py::list b;
              for (size_t k = 0; k < d.coefficients.size(); k++) {
                  a.append(to_numpy(d.ops_a[k]));
                  b.append(to_numpy(d.ops_b[k]));
              }
              return py::make_tuple(d.coefficients, a, b);
          },
          py::arg("x"), py::arg("dim_a"), py::arg("dim_b"), py::arg("threshold") = kDefaultSchmidtThreshold);

    py::class_<Witness>(m, "Witness")
        .def_property_readonly("matrix", [](const Witness &w) { return to_numpy(w.matrix); })
        .def_readonly("mu1", &Witness::mu1)
        .def_property_readonly("coefficients", [](const Witness &w) { return w.decomposition.coefficients; });
    m.def("build_witness", [](const ComplexArray &x, size_t da, size_t db) { return build_witness(to_matrix(x), da, db); });

    py::class_<WitnessReport>(m, "WitnessReport")
        .def_readonly("mu1", &WitnessReport::mu1)
        .def_readonly("expectation", &WitnessReport::expectation)
        .def_readonly("coefficients", &WitnessReport::coefficients)
        .def_property_readonly("detected", [](const WitnessReport &r) { return r.verdict == WitnessVerdict::Detected; })
        .def_property_readonly("verdict", [](const WitnessReport &r) { return std::string(to_string(r.verdict)); });
    m.def("evaluate_witness", [](const Witness &w, const ComplexArray &rho) { return evaluate_witness(w, to_matrix(rho)); });

    m.def("run_cli",
          [](const std::vector<std::string> &args) {
              std::ostringstream out;
              std::ostringstream err;
              int code = run_cli(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
