// Python bindings. Coefficients cross the boundary as the same string
// literals the text formats use, so no GMP or polynomial conversion layer
// is needed; exactness is preserved.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dirconv/io.hpp"
#include "dirconv/selftest.hpp"
#include "dirconv/series_eval.hpp"

namespace py = pybind11;
using namespace dirconv;

namespace {

TotallyMultiplicativeFn make_tm(const Ring& ring,
                                const std::map<std::uint64_t, std::string>& prime_values) {
    std::map<std::uint64_t, Value> pv;
    for (const auto& [p, lit] : prime_values) pv.emplace(p, ring.parse(lit));
    return TotallyMultiplicativeFn(ring, std::move(pv));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dirichlet convolution rings over finite-type multiplicative monoids";

    py::register_exception<Error>(m, "DirconvError");

    py::class_<Ring>(m, "Ring")
        .def(py::init([](const std::string& name) { return Ring::parse_name(name); }),
             py::arg("name"))
        .def("name", &Ring::name)
        .def("parse", [](const Ring& r, const std::string& lit) { return r.format(r.parse(lit)); })
        .def("__eq__", [](const Ring& a, const Ring& b) { return a == b; })
        .def("__repr__", [](const Ring& r) { return "Ring('" + r.name() + "')"; });

    py::class_<MonoidSpec>(m, "Monoid")
        .def(py::init([](const std::string& text) { return MonoidSpec::parse(text); }),
             py::arg("syntax"))
        .def("syntax", &MonoidSpec::syntax)
        .def("contains", &MonoidSpec::contains)
        .def("elements_up_to", &MonoidSpec::elements_up_to)
        .def("__eq__", [](const MonoidSpec& a, const MonoidSpec& b) { return a == b; })
        .def("__repr__", [](const MonoidSpec& s) { return "Monoid('" + s.syntax() + "')"; });

    py::class_<ArithFunction>(m, "Fn")
        .def(py::init<MonoidSpec, Ring, std::uint64_t>(), py::arg("monoid"), py::arg("ring"),
             py::arg("bound"))
        .def("set",
             [](ArithFunction& f, std::uint64_t n, const std::string& lit) {
                 f.set(n, f.ring().parse(lit));
             })
        .def("at",
             [](const ArithFunction& f, std::uint64_t n) { return f.ring().format(f.at(n)); })
        .def("support",
             [](const ArithFunction& f) {
                 std::vector<std::pair<std::uint64_t, std::string>> out;
                 for (const auto& [n, v] : f.support()) out.emplace_back(n, f.ring().format(v));
                 return out;
             })
        .def("bound", &ArithFunction::bound)
        .def("ring", &ArithFunction::ring)
        .def("monoid", &ArithFunction::spec)
        .def("__eq__",
             [](const ArithFunction& a, const ArithFunction& b) { return a == b; })
        .def("__repr__", [](const ArithFunction& f) {
            return "Fn(" + f.spec().syntax() + ", " + f.ring().name() + ", bound=" +
                   std::to_string(f.bound()) + ", " + std::to_string(f.support().size()) +
                   " nonzero)";
        });

    m.def("unit", &fn_unit, py::arg("monoid"), py::arg("ring"), py::arg("bound"));
    m.def("one", &fn_constant_one, py::arg("monoid"), py::arg("ring"), py::arg("bound"));
    m.def("mobius", &fn_mobius, py::arg("monoid"), py::arg("ring"), py::arg("bound"));
    m.def("add", &fn_add);
    m.def("sub", &fn_sub);
    m.def("neg", &fn_neg);
    m.def("convolve", &fn_convolve);
    m.def("invert", &fn_invert);
    m.def("norm", &fn_norm, "Least n with a nonzero value, or None on the window");
    m.def("twist",
          [](const std::map<std::uint64_t, std::string>& prime_values, const ArithFunction& a) {
              return fn_twist(make_tm(a.ring(), prime_values), a);
          },
          py::arg("prime_values"), py::arg("fn"));
    m.def("extend", &fn_extend_submonoid, py::arg("fn"), py::arg("target"));
    m.def("restrict", &fn_restrict, py::arg("fn"), py::arg("submonoid"));

    m.def("lift_derivation",
          [](const std::map<std::uint64_t, std::string>& prime_values, const ArithFunction& a) {
              std::map<std::uint64_t, Value> pv;
              for (const auto& [p, lit] : prime_values) pv.emplace(p, a.ring().parse(lit));
              DerivationSpec d{BaseDerivation::Zero,
                               AdditiveCharacter::from_scalar(a.ring(), pv)};
              return lift_derivation_scalar(d, a);
          },
          py::arg("prime_values"), py::arg("fn"),
          "Derivation with zero base and the given additive prime weights");
    m.def("p_derivation",
          [](std::uint64_t p, const ArithFunction& a) {
              return p_derivation(p, BaseDerivation::Zero, a);
          },
          py::arg("p"), py::arg("fn"));
    m.def("log_derivation", &log_derivation);
    m.def("holo_derivation", &holo_derivation);

    py::class_<ExtFunction>(m, "ExtFn")
        .def(py::init([](std::uint64_t denominator, const ArithFunction& core) {
                 return ext_make(denominator, core);
             }),
             py::arg("denominator"), py::arg("core"))
        .def("denominator", &ExtFunction::denominator)
        .def("core", &ExtFunction::core)
        .def("bound", &ExtFunction::bound)
        .def("canonical_certain", &ExtFunction::canonical_certain)
        .def("at",
             [](const ExtFunction& f, std::uint64_t num, std::uint64_t den) {
                 return f.ring().format(f.at(Fraction{num, den}));
             },
             py::arg("num"), py::arg("den"))
        .def("__eq__", [](const ExtFunction& a, const ExtFunction& b) { return a == b; })
        .def("__repr__", [](const ExtFunction& f) {
            return "ExtFn(denominator=" + std::to_string(f.denominator()) + ", bound=" +
                   std::to_string(f.bound()) + ")";
        });

    m.def("ext_embed", &ext_embed);
    m.def("ext_add", &ext_add);
    m.def("ext_convolve", &ext_convolve);

    py::class_<TruncatedSeries>(m, "Series")
        .def(py::init<Ring, std::vector<int>>(), py::arg("ring"), py::arg("caps"))
        .def("set_coeff",
             [](TruncatedSeries& s, const std::vector<int>& expo, const std::string& lit) {
                 s.set_coeff(expo, s.ring().parse(lit));
             })
        .def("coeff",
             [](const TruncatedSeries& s, const std::vector<int>& expo) {
                 return s.ring().format(s.coeff(expo));
             })
        .def("coefficients",
             [](const TruncatedSeries& s) {
                 std::vector<std::pair<std::vector<int>, std::string>> out;
                 for (const auto& [e, v] : s.coefficients())
                     out.emplace_back(e, s.ring().format(v));
                 return out;
             })
        .def("caps", &TruncatedSeries::degree_caps)
        .def("__eq__",
             [](const TruncatedSeries& a, const TruncatedSeries& b) { return a == b; })
        .def("__mul__", &series_mul)
        .def("__add__", &series_add);

    m.def("encode",
          [](const ArithFunction& a, const std::vector<int>& caps) {
              EncodedSeries e = iso_encode(a, caps);
              return py::make_tuple(e.series, e.exact_bound);
          },
          py::arg("fn"), py::arg("caps"),
          "Series image over the first len(caps) primes; returns (series, exact_bound)");
    m.def("decode", &iso_decode, py::arg("series"));

    m.def("eval_point",
          [](const ArithFunction& a, std::complex<double> z) {
              DirichletSeriesValue v = eval_F(a, z);
              return py::make_tuple(v.value, v.truncation);
          },
          py::arg("fn"), py::arg("z"),
          "Windowed Dirichlet series value at z; returns (value, truncation bound n)");

    m.def("load_fn", &load_fn);
    m.def("format_fn", &format_fn);
    m.def("save_fn",
          [](const std::string& path, const ArithFunction& f) { save_text(path, format_fn(f)); });

    m.def("selftest",
          [](const std::string& monoid, const std::string& ring, std::uint64_t bound) {
              std::vector<std::pair<std::string, bool>> out;
              for (const auto& item :
                   run_selftest(MonoidSpec::parse(monoid), Ring::parse_name(ring), bound))
                  out.emplace_back(item.name, item.pass);
              return out;
          },
          py::arg("monoid") = "nstar", py::arg("ring") = "Q", py::arg("bound") = 512);
}
