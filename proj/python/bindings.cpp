#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "theta/errors.hpp"
#include "theta/nilcomp.hpp"
#include "theta/report.hpp"
#include "theta/restricted.hpp"
#include "theta/verify.hpp"
#include "theta/weylinv.hpp"

namespace py = pybind11;
using namespace theta;

namespace {

InvolutionClassEntry entry(const std::string& series, int rank, const std::string& label) {
    return Catalog::builtin().lookup(parse_series(series), rank, label);
}

py::dict dims_dict(const KPDimensions& d) {
    py::dict out;
    out["g"] = d.g;
    out["k"] = d.k;
    out["p"] = d.p;
    out["a"] = d.a;
    out["m"] = d.m;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Involutions of simple groups: restricted roots, little Weyl groups, nilpotent cones";

    static py::exception<Error> base(m, "ThetaError");
    py::register_exception<UnknownLabelError>(m, "UnknownLabelError", base.ptr());
    py::register_exception<InvalidTypeError>(m, "InvalidTypeError", base.ptr());
    py::register_exception<BadPrimeError>(m, "BadPrimeError", base.ptr());
    py::register_exception<CapExceededError>(m, "CapExceededError", base.ptr());

    m.attr("DEFAULT_CAP") = kDefaultCap;

    m.def("labels", [](const std::string& series, int rank) {
        std::vector<std::string> out;
        for (const auto& e : Catalog::builtin().list(parse_series(series), rank)) out.push_back(e.label);
        return out;
    }, py::arg("series"), py::arg("rank"), "Labels of the catalog classes of a simple type.");

    m.def("report_json", [](const std::string& series, int rank, const std::string& label, std::uint64_t cap) {
        return report_to_json(build_report(entry(series, rank, label), cap), -1);
    }, py::arg("series"), py::arg("rank"), py::arg("label"), py::arg("cap") = kDefaultCap,
       py::call_guard<py::gil_scoped_release>());

    m.def("report_text", [](const std::string& series, int rank, const std::string& label, std::uint64_t cap) {
        return report_to_text(build_report(entry(series, rank, label), cap));
    }, py::arg("series"), py::arg("rank"), py::arg("label"), py::arg("cap") = kDefaultCap,
       py::call_guard<py::gil_scoped_release>());

    m.def("kp_dimensions", [](const std::string& series, int rank, const std::string& label) {
        return dims_dict(kp_dimensions(*entry(series, rank, label).satake));
    }, py::arg("series"), py::arg("rank"), py::arg("label"));

    m.def("component_count", [](const std::string& series, int rank, const std::string& label) {
        auto e = entry(series, rank, label);
        return component_count(*e.satake, restrict(e.satake)).count;
    }, py::arg("series"), py::arg("rank"), py::arg("label"));

    m.def("restricted_type", [](const std::string& series, int rank, const std::string& label) {
        return restrict(entry(series, rank, label).satake).type();
    }, py::arg("series"), py::arg("rank"), py::arg("label"));

    m.def("weyl_poincare", [](const std::string& series, int rank, std::uint64_t cap) {
        IntPolynomial p = poincare_polynomial(RootSystem::build(parse_series(series), rank), cap);
        std::vector<std::string> out;
        for (const auto& c : p.coeffs()) out.push_back(c.str());
        return out;
    }, py::arg("series"), py::arg("rank"), py::arg("cap") = kDefaultCap,
       "Ascending coefficients of the length generating function, as decimal strings.");

    m.def("suite_names", &suite_names);

    m.def("verify_json", [](const std::string& suite, std::uint64_t seed, std::vector<int> primes, std::uint64_t cap) {
        VerifyOptions opts;
        opts.seed = seed;
        opts.cap = cap;
        if (!primes.empty()) opts.primes = std::move(primes);
        return suite_to_json(run_suite(suite, opts), -1);
    }, py::arg("suite"), py::arg("seed") = 42, py::arg("primes") = std::vector<int>{}, py::arg("cap") = kDefaultCap,
       py::call_guard<py::gil_scoped_release>());
}
