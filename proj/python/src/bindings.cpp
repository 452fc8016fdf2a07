#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monoci/cli.hpp"
#include "monoci/decomposition.hpp"
#include "monoci/dsl.hpp"
#include "monoci/homology.hpp"
#include "monoci/invariants.hpp"
#include "monoci/serialize.hpp"
#include "monoci/verify.hpp"

namespace py = pybind11;
using namespace monoci;

namespace {

Monomial to_monomial(const RingContext& ring, const std::vector<Exponent>& e) {
    Monomial m(e);
    ring.check(m);
    return m;
}

std::vector<Exponent> to_list(const Monomial& m) { return {m.exponents().begin(), m.exponents().end()}; }

InvariantOptions options(unsigned jobs) {
    InvariantOptions o;
    o.betti.jobs = jobs;
    return o;
}

}  // namespace

PYBIND11_MODULE(_monoci, m) {
    m.doc() = "Invariants of monomial ideals";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    static py::handle parse_error = py::register_exception<ParseError>(m, "ParseError", base.ptr()).ptr();
    py::register_exception<ContextMismatch>(m, "ContextMismatch", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
    py::register_exception<InternalError>(m, "InternalError", base.ptr());
    // Re-registered so the Python exception carries the position.
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::object cls = py::reinterpret_borrow<py::object>(parse_error);
            py::object err = cls(e.what());
            err.attr("line") = e.line();
            err.attr("column") = e.column();
            err.attr("message") = e.message();
            PyErr_SetObject(cls.ptr(), err.ptr());
        }
    });

    py::class_<RingContext>(m, "Ring")
        .def(py::init([](std::vector<std::string> variables, const std::string& field) {
                 return RingContext(std::move(variables), FieldSpec::parse(field));
             }),
             py::arg("variables"), py::arg("field") = "rational")
        .def_static("standard", [](std::size_t n, const std::string& field) {
            return RingContext::standard(n, FieldSpec::parse(field));
        }, py::arg("n"), py::arg("field") = "rational")
        .def_property_readonly("variables", &RingContext::variables)
        .def_property_readonly("field", [](const RingContext& r) { return r.field().to_string(); })
        .def_property_readonly("num_variables", &RingContext::num_variables)
        .def("__eq__", &RingContext::operator==)
        .def("__repr__", [](const RingContext& r) {
            std::string s = "Ring([";
            for (std::size_t i = 0; i < r.num_variables(); ++i) s += (i ? ", '" : "'") + r.variables()[i] + "'";
            return s + "], '" + r.field().to_string() + "')";
        });

    py::class_<MonomialIdeal>(m, "Ideal")
        .def(py::init([](const RingContext& ring, const std::vector<std::vector<Exponent>>& gens) {
                 std::vector<Monomial> ms;
                 for (const auto& g : gens) ms.push_back(to_monomial(ring, g));
                 return MonomialIdeal(ring, std::move(ms));
             }),
             py::arg("ring"), py::arg("generators"))
        .def_static("parse", [](const std::string& text, const std::string& field) {
            return evaluate(parse(text, FieldSpec::parse(field)));
        }, py::arg("text"), py::arg("field") = "rational", "Evaluate a program such as 'ring x, y; (x, y)^2'.")
        .def_static("variables", &MonomialIdeal::variables, py::arg("ring"), py::arg("indices"))
        .def_static("maximal", &MonomialIdeal::maximal, py::arg("ring"))
        .def_property_readonly("ring", &MonomialIdeal::ring)
        .def_property_readonly("generators", [](const MonomialIdeal& a) {
            std::vector<std::vector<Exponent>> out;
            for (const auto& g : a.generators()) out.push_back(to_list(g));
            return out;
        })
        .def_property_readonly("generator_strings", [](const MonomialIdeal& a) {
            std::vector<std::string> out;
            for (const auto& g : a.generators()) out.push_back(a.ring().format(g));
            return out;
        })
        .def_property_readonly("mu", &MonomialIdeal::mu)
        .def_property_readonly("is_zero", &MonomialIdeal::is_zero)
        .def_property_readonly("is_unit", &MonomialIdeal::is_unit)
        .def_property_readonly("is_squarefree", &MonomialIdeal::is_squarefree)
        .def("contains", [](const MonomialIdeal& a, const std::vector<Exponent>& e) {
            return contains(a, to_monomial(a.ring(), e));
        })
        .def("contains_ideal", &contains_ideal)
        .def("__add__", &sum)
        .def("__mul__", &product)
        .def("__and__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return intersection(a, b); })
        .def("__pow__", &power)
        .def("__eq__", &MonomialIdeal::operator==)
        .def("__hash__", [](const MonomialIdeal& a) { return py::hash(py::str(a.to_string())); })
        .def("__str__", &MonomialIdeal::to_string)
        .def("__repr__", [](const MonomialIdeal& a) { return "Ideal" + a.to_string(); })
        .def("bracket_power", &bracket_power, py::arg("q"))
        .def("symbolic_power", &symbolic_power, py::arg("t"))
        .def("radical", &radical)
        .def("colon", py::overload_cast<const MonomialIdeal&, const MonomialIdeal&>(&colon))
        .def("saturate", &saturate);

    m.def("canonical", [](const std::string& text) { return print(parse(text)); }, py::arg("text"),
          "Canonical form of a program.");
    m.def("irreducible_decomposition", [](const MonomialIdeal& a) {
        std::vector<MonomialIdeal> out;
        for (const auto& c : irreducible_decomposition(a)) out.push_back(c.ideal());
        return out;
    });
    m.def("minimal_primes", &minimal_primes);
    m.def("height", &height);
    m.def("dim_quotient", &dim_quotient);

    m.def("betti_numbers", [](const MonomialIdeal& a, unsigned jobs) {
        BettiOptions o;
        o.jobs = jobs;
        return betti_numbers(a, a.ring().field(), o);
    }, py::arg("a"), py::arg("jobs") = 1, "Total Betti numbers of R/a by homological degree.");
    m.def("local_cohomology_nonvanishing", [](const MonomialIdeal& a) {
        return local_cohomology_nonvanishing(a, a.ring().field());
    });

    const auto jobs = py::arg("jobs") = 1u;
    m.def("depth", [](const MonomialIdeal& a, unsigned j) { return depth(a, options(j)); }, py::arg("a"), jobs);
    m.def("proj_dim", [](const MonomialIdeal& a, unsigned j) { return proj_dim(a, options(j)); }, py::arg("a"), jobs);
    m.def("cohomological_dimension",
          [](const MonomialIdeal& a, unsigned j) { return cohomological_dimension(a, options(j)); }, py::arg("a"), jobs);
    m.def("formal_grade", [](const MonomialIdeal& a, unsigned j) { return formal_grade(a, options(j)); }, py::arg("a"),
          jobs);
    m.def("analytic_spread", [](const MonomialIdeal& a) { return analytic_spread(a); });
    m.def("ara_bounds", [](const MonomialIdeal& a) {
        auto b = schmitt_vogel_upper(a);
        py::dict d;
        d["lower"] = b.lower;
        d["upper"] = b.upper;
        d["certified"] = b.certified;
        return d;
    });
    m.def("min_depth_powers", [](const MonomialIdeal& a, unsigned horizon, unsigned j) {
        return min_depth_powers(a, horizon, options(j)).value;
    }, py::arg("a"), py::arg("horizon") = 3, jobs);
    m.def("dg", [](const MonomialIdeal& a, unsigned horizon, unsigned j) { return dg(a, horizon, options(j)).value; },
          py::arg("a"), py::arg("horizon") = 3, jobs);

    m.def("report_json", [](const MonomialIdeal& a, unsigned horizon, bool partial, unsigned j) {
        ReportOptions o;
        o.horizon = horizon;
        o.allow_partial = partial;
        o.invariants = options(j);
        return report_to_json(report(a, o), -1);
    }, py::arg("a"), py::arg("horizon") = 3, py::arg("partial") = false, jobs);
    m.def("verify_paper_json", [](unsigned horizon, unsigned j) {
        VerifyOptions o;
        o.horizon = horizon;
        o.jobs = j;
        return checks_to_json(run_paper_examples(o), -1);
    }, py::arg("horizon") = 3, jobs);
    m.def("fuzz_json", [](std::uint64_t seed, std::size_t count, std::size_t n, bool squarefree, unsigned max_exponent,
                          std::size_t max_generators, unsigned horizon, unsigned j) {
        VerifyOptions o;
        o.horizon = horizon;
        o.jobs = j;
        RandomIdealSpec spec{.n = n, .squarefree = squarefree, .max_exponent = max_exponent,
                             .max_generators = max_generators, .seed = seed};
        py::gil_scoped_release release;
        return checks_to_json(fuzz(spec, count, o), -1);
    }, py::arg("seed") = 1, py::arg("count") = 100, py::arg("n") = 4, py::arg("squarefree") = true,
       py::arg("max_exponent") = 3, py::arg("max_generators") = 5, py::arg("horizon") = 3, jobs);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
            py::gil_scoped_release release;
            code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run the command line with the given arguments; returns (status, stdout, stderr).");
}
