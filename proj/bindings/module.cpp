#include "otkit/pipelines.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>

namespace py = pybind11;
using namespace otkit;

namespace {

Poly poly_from_strings(const std::vector<std::string>& coeffs) {
    return Poly::from_coeff_strings(coeffs);
}

struct PyField {
    FieldPtr f;

    explicit PyField(const std::vector<std::string>& coeffs, long bits)
        : f(NumberField::build(poly_from_strings(coeffs), PrecisionPolicy::with_bits(bits))) {}

    int degree() const { return f->degree(); }
    int s() const { return f->real_embeddings(); }
    int t() const { return f->complex_pairs(); }
    bool ot_eligible() const { return f->ot_eligible(); }
    std::string defining() const { return f->defining().str(); }

    py::dict irreducibility() const {
        py::dict d;
        d["status"] = f->irreducibility().status == Proof::Proven ? "Proven" : "Unknown";
        d["method"] = f->irreducibility().method;
        return d;
    }

    std::vector<std::complex<double>> roots() const {
        std::vector<std::complex<double>> out;
        for (int i = 0; i < f->degree(); ++i)
            out.emplace_back(f->root(i).re.mid().to_double(), f->root(i).im.mid().to_double());
        return out;
    }

    std::vector<std::string> roots_decimal(int digits) const {
        std::vector<std::string> out;
        for (int i = 0; i < f->degree(); ++i) out.push_back(f->root(i).decimal(digits));
        return out;
    }

    AlgebraicNumber element(const std::vector<std::string>& coeffs) const {
        return f->element(poly_from_strings(coeffs));
    }

    std::string min_poly(const std::vector<std::string>& coeffs) const {
        return element(coeffs).min_poly().str();
    }
    std::string norm(const std::vector<std::string>& coeffs) const {
        return element(coeffs).norm().get_str();
    }
    std::string trace(const std::vector<std::string>& coeffs) const {
        return element(coeffs).trace().get_str();
    }
    bool is_unit_(const std::vector<std::string>& coeffs) const { return is_unit(element(coeffs)); }
    bool is_algebraic_integer(const std::vector<std::string>& coeffs) const {
        return element(coeffs).is_algebraic_integer();
    }
    std::complex<double> embed(const std::vector<std::string>& coeffs, int i) const {
        CInterval v = element(coeffs).embed(i);
        return {v.re.mid().to_double(), v.im.mid().to_double()};
    }

    std::vector<std::vector<std::string>> units(long bound, size_t max_results) const {
        std::vector<std::vector<std::string>> out;
        for (const AlgebraicNumber& u : unit_search(f, bound, max_results)) {
            auto cs = u.residue().coeff_strings();
            cs.resize(static_cast<size_t>(f->degree()), "0");
            out.push_back(cs);
        }
        return out;
    }

    std::vector<double> log_map_(const std::vector<std::string>& coeffs) const {
        std::vector<double> out;
        for (const Interval& x : log_map(element(coeffs))) out.push_back(x.mid().to_double());
        return out;
    }

    py::dict admissibility(const std::vector<std::vector<std::string>>& gens) const {
        std::vector<AlgebraicNumber> elems;
        for (const auto& g : gens) elems.push_back(element(g));
        AdmissibilityCertificate cert = admissibility_check(UnitSystem::build(f, elems));
        py::dict d;
        d["verdict"] = cert.verdict == Admissibility::Admissible
                           ? "Admissible"
                           : (cert.verdict == Admissibility::NotAdmissible ? "NotAdmissible"
                                                                           : "Inconclusive");
        d["det"] = cert.det.decimal(25);
        d["det_abs_lower"] = cert.det_abs_lower.to_double();
        if (!cert.reason.empty()) d["reason"] = cert.reason;
        return d;
    }
};

py::dict inoue_matrix(const std::vector<long long>& entries, long bits) {
    std::vector<Int> vals;
    for (long long v : entries) vals.emplace_back(static_cast<long>(v));
    InoueData d = inoue_from_matrix(IntMatrix3::from_row_major(vals),
                                    PrecisionPolicy::with_bits(bits));
    py::dict out;
    out["char_poly"] = d.char_polynomial.str();
    out["c"] = d.c.mid().to_double();
    out["alpha"] = std::complex<double>(d.alpha.re.mid().to_double(), d.alpha.im.mid().to_double());
    out["alpha2c_minus_1"] = d.alpha2c_minus_1().decimal(15);
    out["lattice_rank_ok"] =
        verify_lattice_rank(d, PrecisionPolicy::with_bits(bits).tolerance()) == Check::True;
    out["generators"] = d.generators_description();
    return out;
}

py::tuple run_py(const std::string& command, const std::string& spec_text, std::uint64_t seed,
                 long bits, int trials, long bound) {
    RunOptions opt;
    opt.seed = seed;
    opt.bits = bits;
    opt.trials = trials;
    opt.bound = bound;
    Certificate cert = run_command(command, spec_text, opt);
    return py::make_tuple(cert.exit_code(), cert.to_text());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Certified symbolic-numeric toolkit for Oeljeklaus-Toma manifold data";
    m.attr("__version__") = kToolVersion;

    py::register_exception<input_error>(m, "SpecError", PyExc_ValueError);
    py::register_exception<precision_error>(m, "PrecisionError", PyExc_ArithmeticError);

    py::class_<PyField>(m, "Field")
        .def(py::init<const std::vector<std::string>&, long>(), py::arg("defining"),
             py::arg("bits") = 128)
        .def_property_readonly("degree", &PyField::degree)
        .def_property_readonly("s", &PyField::s)
        .def_property_readonly("t", &PyField::t)
        .def_property_readonly("ot_eligible", &PyField::ot_eligible)
        .def_property_readonly("defining", &PyField::defining)
        .def("irreducibility", &PyField::irreducibility)
        .def("roots", &PyField::roots)
        .def("roots_decimal", &PyField::roots_decimal, py::arg("digits") = 25)
        .def("min_poly", &PyField::min_poly, py::arg("coeffs"))
        .def("norm", &PyField::norm, py::arg("coeffs"))
        .def("trace", &PyField::trace, py::arg("coeffs"))
        .def("is_unit", &PyField::is_unit_, py::arg("coeffs"))
        .def("is_algebraic_integer", &PyField::is_algebraic_integer, py::arg("coeffs"))
        .def("embed", &PyField::embed, py::arg("coeffs"), py::arg("i"))
        .def("units", &PyField::units, py::arg("bound") = 5, py::arg("max_results") = 16)
        .def("log_map", &PyField::log_map_, py::arg("coeffs"))
        .def("admissibility", &PyField::admissibility, py::arg("generators"));

    m.def(
        "resultant",
        [](const std::vector<std::string>& p, const std::vector<std::string>& q) {
            return resultant(poly_from_strings(p), poly_from_strings(q)).get_str();
        },
        py::arg("p"), py::arg("q"),
        "Exact resultant Res(p, q) = lc(p)^deg q * prod q(roots of p), as a string");
    m.def(
        "sturm_count",
        [](const std::vector<std::string>& p, const std::string& lo, const std::string& hi) {
            return sturm_count(poly_from_strings(p), rat_from_string(lo), rat_from_string(hi));
        },
        py::arg("p"), py::arg("lo"), py::arg("hi"),
        "Exact number of real roots of p in (lo, hi)");
    m.def(
        "check_irreducible",
        [](const std::vector<std::string>& p) {
            IrreducibilityStatus st = check_irreducible(poly_from_strings(p));
            py::dict d;
            d["status"] = st.status == Proof::Proven ? "Proven" : "Unknown";
            d["method"] = st.method;
            return d;
        },
        py::arg("p"));
    m.def("inoue_from_matrix", &inoue_matrix, py::arg("entries"), py::arg("bits") = 128,
          "Inoue S^0 data from 9 row-major integers; raises SpecError on rejection");
    m.def("run", &run_py, py::arg("command"), py::arg("spec_text"), py::arg("seed") = 0,
          py::arg("bits") = 128, py::arg("trials") = 1000, py::arg("bound") = 5,
          "Run a CLI command on spec text; returns (exit_code, certificate_text)");
    m.def("commands", [] { return command_names(); });
}
