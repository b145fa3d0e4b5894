#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fourex/experiments.hpp"
#include "fourex/operator_cache.hpp"
#include "fourex/special_functions.hpp"

namespace py = pybind11;
using namespace fourex;

namespace {

std::vector<cdouble> to_vector(const py::array_t<cdouble, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 1) throw std::invalid_argument("expected a 1-d array");
    return std::vector<cdouble>(a.data(), a.data() + a.shape(0));
}

std::vector<double> to_real_vector(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 1) throw std::invalid_argument("expected a 1-d array");
    return std::vector<double>(a.data(), a.data() + a.shape(0));
}

py::array_t<cdouble> to_array(const std::vector<cdouble>& v) {
    py::array_t<cdouble> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

py::array_t<double> to_array(const std::vector<double>& v) {
    py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

int half_count_of(std::size_t n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("sample count must be odd, 2M+1 >= 3");
    return static_cast<int>(n / 2);
}

} // namespace

PYBIND11_MODULE(_fourex, m) {
    m.doc() = "Boundary-interval fast Fourier extension";

    py::class_<ExtensionConfig>(m, "ExtensionConfig")
        .def(py::init([](double Tdelta, int mdelta, double gamma, double tau) {
                 return make_config(Tdelta, mdelta, gamma, tau);
             }),
             py::arg("Tdelta") = 6.0, py::arg("mdelta") = 25, py::arg("gamma") = 1.0,
             py::arg("tau") = 1e-14)
        .def_readonly("Tdelta", &ExtensionConfig::extension_ratio)
        .def_readonly("mdelta", &ExtensionConfig::boundary_nodes)
        .def_readonly("gamma", &ExtensionConfig::oversampling)
        .def_readonly("ndelta", &ExtensionConfig::basis_order)
        .def_readonly("tau", &ExtensionConfig::truncation)
        .def("__repr__", [](const ExtensionConfig& c) {
            return "ExtensionConfig(Tdelta=" + std::to_string(c.extension_ratio) +
                   ", mdelta=" + std::to_string(c.boundary_nodes) +
                   ", gamma=" + std::to_string(c.oversampling) +
                   ", ndelta=" + std::to_string(c.basis_order) + ")";
        });

    m.def("default_config", &default_config);
    m.def("alternate_config", &alternate_config);

    py::class_<ExtensionOperator, std::shared_ptr<ExtensionOperator>>(m, "ExtensionOperator")
        .def_property_readonly("config", [](const ExtensionOperator& op) { return op.config; })
        .def_property_readonly("L_delta",
                               [](const ExtensionOperator& op) { return op.geometry.node_count; })
        .def_property_readonly("singular_values", [](const ExtensionOperator& op) {
            return to_array(op.factorization.singular_values);
        });

    m.def(
        "precompute_operator",
        [](const ExtensionConfig& cfg) {
            return std::make_shared<ExtensionOperator>(precompute_operator(cfg));
        },
        py::arg("config"));

    py::class_<FourierApproximant>(m, "FourierApproximant")
        .def_property_readonly("period", &FourierApproximant::period)
        .def_property_readonly("max_mode", &FourierApproximant::max_mode)
        .def("coefficients",
             [](const FourierApproximant& a) {
                 return to_array(std::vector<cdouble>(a.coefficients().begin(),
                                                      a.coefficients().end()));
             })
        .def("evaluate",
             [](const FourierApproximant& a,
                const py::array_t<double, py::array::c_style | py::array::forcecast>& pts) {
                 return to_array(a.evaluate(to_real_vector(pts)));
             })
        .def("__call__", [](const FourierApproximant& a, double t) { return a.evaluate(t); });

    m.def(
        "grid", [](int M) { return to_array(uniform_abscissae(M)); }, py::arg("M"),
        "Uniform abscissae t = l/M, l = -M..M");

    m.def(
        "test_function",
        [](const std::string& name,
           const py::array_t<double, py::array::c_style | py::array::forcecast>& t,
           double omega) { return to_array(test_function(name, to_real_vector(t), omega)); },
        py::arg("name"), py::arg("t"), py::arg("omega") = 0.0);

    m.def("catalog_names", &catalog_names);
    m.def("erf", [](double x) { return fourex::erf(x); }, py::arg("x"));
    m.def("airy_ai", &airy_ai, py::arg("x"));

    m.def(
        "approximate",
        [](const std::shared_ptr<ExtensionOperator>& op,
           const py::array_t<cdouble, py::array::c_style | py::array::forcecast>& samples) {
            const std::vector<cdouble> values = to_vector(samples);
            const int m = half_count_of(values.size());
            return coefficients_from_period(extend_periodically(*op, values, m));
        },
        py::arg("op"), py::arg("samples"),
        "Boundary-interval extension of samples on the uniform grid over [-1,1]");

    m.def(
        "approximate_catalog",
        [](const std::string& name, int M, const ExtensionConfig& cfg, int R, double omega) {
            const ApproxRun run = approximate_catalog(name, omega, M, cfg, R);
            return py::make_tuple(run.approximant, run.max_error);
        },
        py::arg("name"), py::arg("M"), py::arg("config") = default_config(), py::arg("R") = 1,
        py::arg("omega") = 0.0,
        "Approximate a catalog function; returns (approximant, max_error)");

    m.def(
        "fulldata_fe",
        [](const py::array_t<cdouble, py::array::c_style | py::array::forcecast>& samples,
           double T, double gamma, double tau) {
            return fulldata_fe(to_vector(samples), FullDataConfig{T, gamma, tau});
        },
        py::arg("samples"), py::arg("T") = 2.0, py::arg("gamma") = 2.0, py::arg("tau") = 1e-14,
        "Full-data truncated-SVD Fourier extension (desk-scale baseline)");

    m.def(
        "max_error_catalog",
        [](const FourierApproximant& a, const std::string& name, int M, double omega,
           int density) {
            return max_error(
                a, [&](double t) { return test_function_value(name, t, omega); }, M, density);
        },
        py::arg("approximant"), py::arg("name"), py::arg("M"), py::arg("omega") = 0.0,
        py::arg("density") = 10);

    m.def("save_operator", &save_operator, py::arg("path"), py::arg("op"), py::arg("refine") = 1);
    m.def(
        "load_operator",
        [](const std::string& path) {
            return std::make_shared<ExtensionOperator>(load_operator(path, nullptr));
        },
        py::arg("path"));

    py::register_exception<numerical_error>(m, "NumericalError", PyExc_ArithmeticError);
}
