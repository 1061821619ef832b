#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>

#include "gaussint/divisor_theory.hpp"
#include "gaussint/factorization.hpp"
#include "gaussint/gaussian_int.hpp"
#include "gaussint/search.hpp"

namespace py = pybind11;

namespace {

using gaussint::GaussianInt;

// Arbitrary-precision values cross the boundary as decimal strings.
py::object to_pyint(const mpz_class& z) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

mpz_class to_mpz(const py::object& o) {
    return mpz_class(std::string(py::str(o)), 10);
}

py::dict report_to_dict(const gaussint::PerfectionReport& r) {
    py::dict d;
    d["subject"] = r.subject;
    d["parity"] = gaussint::to_string(r.parity);
    d["sigma"] = r.sigma;
    d["norm_sigma"] = to_pyint(r.norm_sigma);
    d["two_norm"] = to_pyint(r.two_norm);
    d["norm_perfect"] = r.norm_perfect;
    if (r.perfect_unit.has_value()) {
        d["perfect_unit"] = r.perfect_unit->value();
    } else {
        d["perfect_unit"] = py::none();
    }
    return d;
}

py::dict decomposition_to_dict(const gaussint::OddFormDecomposition& d) {
    py::dict out;
    out["pi"] = d.pi;
    out["k"] = d.k;
    out["gamma"] = d.gamma;
    out["unit"] = d.unit.value();
    return out;
}

py::dict record_to_dict(const gaussint::SearchRecord& r) {
    py::dict d;
    d["subject"] = r.subject;
    d["norm"] = to_pyint(r.norm);
    d["kind"] = gaussint::to_string(r.kind);
    d["report"] = report_to_dict(r.report);
    if (r.decomposition.has_value()) {
        d["decomposition"] = decomposition_to_dict(*r.decomposition);
    } else {
        d["decomposition"] = py::none();
    }
    return d;
}

gaussint::SearchConfig make_config(std::uint64_t bound, const std::string& parity,
                                   const std::string& kind, unsigned shards,
                                   std::optional<unsigned> shard) {
    gaussint::SearchConfig config;
    config.norm_bound = bound;
    if (parity == "odd") {
        config.parity = gaussint::ParityFilter::odd;
    } else if (parity == "even") {
        config.parity = gaussint::ParityFilter::even;
    } else if (parity == "all") {
        config.parity = gaussint::ParityFilter::all;
    } else {
        throw std::invalid_argument("parity must be all, odd, or even");
    }
    if (kind != "norm-perfect" && kind != "perfect" && kind != "both") {
        throw std::invalid_argument("kind must be norm-perfect, perfect, or both");
    }
    config.want_norm_perfect = (kind != "perfect");
    config.want_perfect = (kind != "norm-perfect");
    config.shard_count = shards;
    config.shard_index = shard.value_or(0);
    config.validate();
    return config;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Gaussian integer arithmetic, factorization, and sigma scans";

    py::class_<GaussianInt>(m, "GaussianInt")
        .def(py::init([](const py::object& re, const py::object& im) {
                 return GaussianInt(to_mpz(re), to_mpz(im));
             }),
             py::arg("re"), py::arg("im") = py::int_(0))
        .def_property_readonly("re",
                               [](const GaussianInt& g) { return to_pyint(g.re); })
        .def_property_readonly("im",
                               [](const GaussianInt& g) { return to_pyint(g.im); })
        .def("norm", [](const GaussianInt& g) { return to_pyint(g.norm()); })
        .def("conj", &GaussianInt::conj)
        .def("is_zero", &GaussianInt::is_zero)
        .def("is_unit", &GaussianInt::is_unit)
        .def("is_even", &GaussianInt::is_even)
        .def("is_odd", &GaussianInt::is_odd)
        .def("is_canonical", &GaussianInt::is_canonical)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__lt__", &gaussint::norm_lex_less)
        .def("__pow__",
             [](const GaussianInt& g, unsigned long e) {
                 return gaussint::pow(g, e);
             })
        .def("__hash__",
             [](const GaussianInt& g) {
                 return py::hash(py::make_tuple(to_pyint(g.re), to_pyint(g.im)));
             })
        .def("__str__", [](const GaussianInt& g) { return gaussint::to_string(g); })
        .def("__repr__", [](const GaussianInt& g) {
            return "GaussianInt('" + gaussint::to_string(g) + "')";
        });

    py::class_<gaussint::NormOrderedEnumerator>(m, "NormOrderedEnumerator")
        .def(py::init<std::uint64_t>(), py::arg("norm_bound"))
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("lo"), py::arg("hi"))
        .def("__iter__", [](py::object self) { return self; })
        .def("__next__", [](gaussint::NormOrderedEnumerator& e) {
            auto v = e.next();
            if (!v.has_value()) {
                throw py::stop_iteration();
            }
            return *v;
        });

    m.def("parse", &gaussint::parse_gaussian, py::arg("text"),
          "Parse a literal like 2+i, -1-2i, 3, or -i");

    m.def(
        "canonicalize",
        [](const GaussianInt& g) {
            auto c = gaussint::canonicalize(g);
            return py::make_tuple(c.unit.value(), c.value);
        },
        py::arg("value"), "Return (unit, canonical) with value == unit * canonical");

    m.def(
        "associates",
        [](const GaussianInt& g) {
            auto a = gaussint::associates(g);
            return std::vector<GaussianInt>(a.begin(), a.end());
        },
        py::arg("value"));

    m.def("gcd", &gaussint::gcd, py::arg("a"), py::arg("b"));

    m.def(
        "factor",
        [](const GaussianInt& g) {
            auto f = gaussint::factor(g);
            py::list factors;
            for (const auto& pp : f.factors) {
                factors.append(py::make_tuple(pp.prime, pp.exponent));
            }
            py::dict d;
            d["unit"] = f.unit.value();
            d["factors"] = factors;
            d["rendered"] = f.to_string();
            return d;
        },
        py::arg("value"));

    m.def("is_gaussian_prime", &gaussint::is_gaussian_prime, py::arg("value"));

    m.def(
        "sigma",
        [](const GaussianInt& g) { return gaussint::sigma(g); },
        py::arg("value"));

    m.def(
        "sigma_oracle",
        [](const GaussianInt& g) { return gaussint::sigma_oracle(g); },
        py::arg("value"));

    m.def("sigma_prime_power_is_even", &gaussint::sigma_prime_power_is_even,
          py::arg("pi"), py::arg("m"));

    m.def(
        "classify",
        [](const GaussianInt& g) { return report_to_dict(gaussint::classify(g)); },
        py::arg("value"));

    m.def(
        "odd_form_decompose",
        [](const GaussianInt& g) {
            return decomposition_to_dict(gaussint::odd_form_decompose(g));
        },
        py::arg("value"));

    m.def("norm_perfect_prime_solutions", [] {
        auto solved = gaussint::norm_perfect_prime_solutions();
        py::dict d;
        d["solutions"] = solved.solutions;
        d["primes"] = solved.primes;
        return d;
    });

    m.def("canonical_primes_up_to", &gaussint::canonical_primes_up_to,
          py::arg("norm_bound"));

    m.def("scan_norm_perfect_primes", &gaussint::scan_norm_perfect_primes,
          py::arg("norm_bound"));

    m.def(
        "scan",
        [](std::uint64_t bound, const std::string& parity, const std::string& kind,
           unsigned shards, std::optional<unsigned> shard) {
            auto config = make_config(bound, parity, kind, shards, shard);
            py::list records;
            py::list errors;
            gaussint::ScanSink sink{
                [&records](const gaussint::SearchRecord& r) {
                    records.append(record_to_dict(r));
                },
                [&errors](const gaussint::ScanError& e) {
                    py::dict d;
                    d["subject"] = e.subject;
                    d["error"] = e.message;
                    errors.append(d);
                },
            };
            auto summary = shard.has_value() ? gaussint::scan(config, sink)
                                             : gaussint::scan_sharded(config, sink);
            py::dict s;
            s["examined"] = summary.examined;
            s["matched"] = summary.matched;
            s["errors"] = summary.errors;
            py::dict out;
            out["records"] = records;
            out["errors"] = errors;
            out["summary"] = s;
            return out;
        },
        py::arg("norm_bound"), py::arg("parity") = "all",
        py::arg("kind") = "norm-perfect", py::arg("shards") = 1U,
        py::arg("shard") = py::none());

    m.def(
        "verify_theorem",
        [](std::uint64_t bound) {
            auto v = gaussint::verify_theorem(bound);
            py::dict d;
            d["checked"] = v.checked;
            d["passed"] = v.passed;
            d["failed"] = v.failed;
            d["k_mod4_one"] = v.k_mod4_one;
            d["k_mod4_three"] = v.k_mod4_three;
            d["failures"] = v.failures;
            return d;
        },
        py::arg("norm_bound"));
}
