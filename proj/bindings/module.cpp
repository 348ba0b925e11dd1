#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sixstate/photon_bounds.hpp"
#include "sixstate/rates.hpp"
#include "sixstate/verify.hpp"

namespace py = pybind11;
using namespace sixstate;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Six-state QKD security analysis with threshold detectors";

    py::register_exception<Error>(m, "SixStateError");

    py::enum_<BasisAxis>(m, "BasisAxis")
        .value("X", BasisAxis::X)
        .value("Y", BasisAxis::Y)
        .value("Z", BasisAxis::Z);
    py::enum_<BitValue>(m, "BitValue")
        .value("MINUS", BitValue::Minus)
        .value("PLUS", BitValue::Plus);
    py::enum_<Protocol>(m, "Protocol")
        .value("SIXSTATE_THRESHOLD", Protocol::SixStateThreshold)
        .value("SIXSTATE_QUBIT", Protocol::SixStateQubit)
        .value("BB84", Protocol::Bb84);

    // operator core
    m.def("kron", py::overload_cast<const ComplexMatrix&, const ComplexMatrix&>(&kron));
    m.def("hermitian_eigenvalues",
          [](const ComplexMatrix& h) { return hermitian_eigensystem(h).values; });
    m.def("project_psd", &project_psd);
    m.def("bisect_root", &bisect_root, py::arg("f"), py::arg("lo"), py::arg("hi"),
          py::arg("tol") = kTolRoot);

    // states and measurements
    m.def("pauli", &pauli);
    m.def("basis_ket", &basis_ket);
    m.def("singlet", &singlet);
    py::class_<SymmetricSplit>(m, "SymmetricSplit")
        .def_readonly("n", &SymmetricSplit::n)
        .def_readonly("pi_h", &SymmetricSplit::pi_h)
        .def_readonly("pi_hperp", &SymmetricSplit::pi_hperp);
    m.def("symmetric_split", &symmetric_split);
    m.def("threshold_povm", &threshold_povm);
    m.def("error_povm", &error_povm);
    m.def("avg_error_povm", &avg_error_povm);
    py::class_<SquashResult>(m, "SquashResult")
        .def_readonly("y_op", &SquashResult::y_op)
        .def_readonly("choi", &SquashResult::choi)
        .def_readonly("choi_min_eig", &SquashResult::choi_min_eig)
        .def_readonly("constraint_residual", &SquashResult::constraint_residual)
        .def_readonly("lambda_ansatz", &SquashResult::lambda_ansatz);
    m.def("construct_squash_y", &construct_squash_y);
    m.def("ytilde_error_povm", &ytilde_error_povm);
    py::class_<ClickStats>(m, "ClickStats")
        .def_readonly("trials", &ClickStats::trials)
        .def_readonly("plus", &ClickStats::plus)
        .def_readonly("minus", &ClickStats::minus)
        .def_readonly("freq_plus", &ClickStats::freq_plus)
        .def_readonly("prob_plus", &ClickStats::prob_plus);
    m.def("simulate_clicks", &simulate_clicks, py::arg("state"), py::arg("axis"), py::arg("n"),
          py::arg("trials"), py::arg("seed"));

    // symmetry twirl
    m.def("group_elements", [] {
        std::vector<ComplexMatrix> out;
        for (const GroupElement& g : enumerate_group()) out.push_back(g.u);
        return out;
    });
    py::class_<ProjectorSet>(m, "ProjectorSet")
        .def_readonly("p0", &ProjectorSet::p0)
        .def_readonly("p1", &ProjectorSet::p1)
        .def_readonly("p2", &ProjectorSet::p2)
        .def_readonly("q", &ProjectorSet::q);
    m.def("build_projectors", &build_projectors);
    m.def("twirl", &twirl);
    py::class_<RCoefficients>(m, "RCoefficients")
        .def(py::init<double, double, double, double>(), py::arg("r0"), py::arg("r1"),
             py::arg("r2"), py::arg("r3") = 0.0)
        .def_readwrite("r0", &RCoefficients::r0)
        .def_readwrite("r1", &RCoefficients::r1)
        .def_readwrite("r2", &RCoefficients::r2)
        .def_readwrite("r3", &RCoefficients::r3);
    m.def("decompose", &decompose);
    py::class_<ErrorPoint>(m, "ErrorPoint")
        .def_readonly("e_b", &ErrorPoint::e_b)
        .def_readonly("e_y", &ErrorPoint::e_y);
    m.def("error_rates", &error_rates);

    // rate analysis
    m.def("binary_entropy", &binary_entropy);
    m.def("h12", &h12);
    m.def("h3", &h3);
    m.def("region_bounds", &region_bounds);
    m.def("max_h3_at", &max_h3_at);
    py::class_<RegionParams>(m, "RegionParams")
        .def(py::init<double, double, double>(), py::arg("u"), py::arg("t"), py::arg("s"))
        .def_readwrite("u", &RegionParams::u)
        .def_readwrite("t", &RegionParams::t)
        .def_readwrite("s", &RegionParams::s);
    m.def("region_map", &region_map);
    py::class_<Envelope>(m, "Envelope")
        .def_readonly("e_d", &Envelope::e_d)
        .def_readonly("slope", &Envelope::slope)
        .def_readonly("intercept", &Envelope::intercept)
        .def_readonly("v3", &Envelope::v3);
    m.def("tangent_envelope", &tangent_envelope);
    py::class_<TangentB>(m, "TangentB")
        .def_readonly("e_b", &TangentB::e_b)
        .def_readonly("slope", &TangentB::slope)
        .def_readonly("intercept", &TangentB::intercept)
        .def_readonly("e_c", &TangentB::e_c);
    m.def("tangent_at_b", &tangent_at_b);
    m.def("hzx_upper", &hzx_upper);
    m.def("threshold", &threshold);
    py::class_<KeyRateRow>(m, "KeyRateRow")
        .def_readonly("e_b", &KeyRateRow::e_b)
        .def_readonly("hzx_upper", &KeyRateRow::hzx_upper)
        .def_readonly("rate", &KeyRateRow::rate)
        .def_readonly("n_sif", &KeyRateRow::n_sif);
    m.def("keyrate", &keyrate, py::arg("e_b"), py::arg("env"), py::arg("n_sif") = 1.0);
    m.def("envelope_oracle", &envelope_oracle);

    // photon bounds
    py::class_<MinErrorRow>(m, "MinErrorRow")
        .def_readonly("n", &MinErrorRow::n)
        .def_readonly("min_e_b", &MinErrorRow::min_e_b)
        .def_readonly("reduced_check", &MinErrorRow::reduced_check);
    m.def("min_bit_error", &min_bit_error);
    m.def("min_error_table", &min_error_table);

    // verification
    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("pass_", &CheckResult::pass)
        .def_readonly("residual", &CheckResult::residual)
        .def_readonly("tolerance", &CheckResult::tolerance);
    m.def(
        "run_verify",
        [](bool fast, std::uint64_t seed) {
            VerifyOptions opts;
            opts.fast = fast;
            opts.seed = seed;
            return run_verify(opts);
        },
        py::arg("fast") = true, py::arg("seed") = 20240601);
}
