#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eulersum/combinatorics.hpp"
#include "eulersum/constants.hpp"
#include "eulersum/identities.hpp"
#include "eulersum/oracle.hpp"
#include "eulersum/report.hpp"
#include "eulersum/sumspec.hpp"
#include "eulersum/version.hpp"

namespace py = pybind11;
using namespace eulersum;

namespace {

oracle::EvalConfig make_config(long N) {
    oracle::EvalConfig cfg;
    if (N > 0) cfg.base_N = N;
    return cfg;
}

oracle::Oracle& shared_oracle() {
    static oracle::Oracle orc;
    return orc;
}

identities::Params dict_to_params(const py::dict& d) {
    identities::Params out;
    for (auto item : d) {
        const std::string key = py::cast<std::string>(item.first);
        if (py::isinstance<py::int_>(item.second))
            out[key] = Rational(py::cast<long>(item.second));
        else
            out[key] = parse_rational(py::cast<std::string>(item.second));
    }
    return out;
}

py::dict result_to_dict(const identities::VerificationResult& r) {
    py::dict d;
    d["id"] = r.id;
    d["params"] = identities::params_to_string(r.params);
    d["lhs"] = py::make_tuple(r.lhs.value, r.lhs.err);
    d["rhs"] = py::make_tuple(r.rhs.value, r.rhs.err);
    d["residual"] = r.residual;
    d["pass"] = r.pass;
    d["status"] = r.status;
    d["message"] = r.message;
    return d;
}

}  // namespace

PYBIND11_MODULE(_eulersum, m) {
    m.doc() = "Harmonic-sum combinatorics, Euler-sum evaluation and identity verification";
    m.attr("__version__") = kToolVersion;

    m.def("zeta", [](int s) { return constants::zeta(s).value; }, py::arg("s"));
    m.def("alt_zeta", [](int s) { return constants::alt_zeta(s).value; }, py::arg("s"));
    m.def(
        "polylog",
        [](int p, long num, long den) { return constants::polylog(p, make_rational(num, den)).value; }, py::arg("p"),
        py::arg("num"), py::arg("den") = 1);
    m.def("euler_gamma", [] { return constants::euler_gamma().value; });

    m.def(
        "harmonic", [](long n, int mm) { return to_string(combinatorics::harmonic(n, mm)); }, py::arg("n"),
        py::arg("m") = 1, "Exact generalized harmonic number as a rational string");
    m.def(
        "alt_harmonic", [](long n, int mm) { return to_string(combinatorics::alt_harmonic(n, mm)); }, py::arg("n"),
        py::arg("m") = 1);
    m.def(
        "bell_Y", [](int k, long n) { return to_string(combinatorics::bell_Y(k, n)); }, py::arg("k"), py::arg("n"));
    m.def(
        "stirling_first", [](long n, long k) { return to_string(combinatorics::stirling_first(n, k)); }, py::arg("n"),
        py::arg("k"));

    m.def(
        "eval_sum",
        [](const std::string& spec, long N) {
            const auto parsed = sumspec::parse(spec);
            const auto cfg = make_config(N);
            const RealWithError v = to_double(parsed.prefactor) * shared_oracle().evaluate(parsed.descriptor, cfg);
            return py::make_tuple(v.value, v.err);
        },
        py::arg("spec"), py::arg("N") = 0, "Evaluate an S[...]/Sbar[...]/K[...]/ST[...] sum; returns (value, err)");

    m.def(
        "list_identities",
        [] {
            py::list out;
            for (const auto& r : identities::registry()) {
                py::dict d;
                d["id"] = r.id;
                d["equation"] = r.equation;
                d["description"] = r.description;
                d["params"] = r.param_names;
                d["default_tol"] = r.default_tol;
                out.append(std::move(d));
            }
            return out;
        });

    m.def(
        "verify",
        [](const std::string& id, const py::dict& params, long N) {
            return result_to_dict(identities::verify(id, dict_to_params(params), make_config(N), shared_oracle()));
        },
        py::arg("id"), py::arg("params") = py::dict(), py::arg("N") = 0);

    m.def(
        "verify_all",
        [](const std::string& filter, long N, int jobs) {
            const auto results = identities::verify_all(make_config(N), shared_oracle(), filter, jobs);
            py::list out;
            for (const auto& r : results) out.append(result_to_dict(r));
            return out;
        },
        py::arg("filter") = "", py::arg("N") = 0, py::arg("jobs") = 1);
}
