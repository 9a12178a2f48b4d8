#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "otype/checks.hpp"
#include "otype/error.hpp"
#include "otype/finite_poset.hpp"
#include "otype/ordinal.hpp"
#include "otype/witness.hpp"
#include "otype/wpo_term.hpp"

namespace py = pybind11;
using namespace otype;

namespace {

py::int_ to_py(const Natural& n) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(n.str().c_str(), nullptr, 10));
}

Natural from_py(const py::int_& n) {
    return Natural(py::str(static_cast<py::handle>(n)).cast<std::string>());
}

Ordinal ordinal_from(const py::object& o) {
    if (py::isinstance<Ordinal>(o)) {
        return o.cast<Ordinal>();
    }
    if (py::isinstance<py::int_>(o)) {
        return Ordinal(from_py(o.cast<py::int_>()));
    }
    if (py::isinstance<py::str>(o)) {
        return Ordinal::parse(o.cast<std::string>());
    }
    throw py::type_error("expected Ordinal, int or str");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Maximal order types of well partial orders";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<Ordinal>(m, "Ordinal")
        .def(py::init<>())
        .def(py::init([](const py::object& o) { return ordinal_from(o); }))
        .def_static("parse", &Ordinal::parse)
        .def_static("omega", &Ordinal::omega)
        .def_static(
            "omega_power",
            [](const py::object& e, const py::int_& c) {
                return Ordinal::omega_power(ordinal_from(e), from_py(c));
            },
            py::arg("exponent"), py::arg("coefficient") = py::int_(1))
        .def("__str__", &Ordinal::str)
        .def("__repr__", [](const Ordinal& a) { return "Ordinal('" + a.str() + "')"; })
        .def("__hash__", [](const Ordinal& a) { return std::hash<std::string>{}(a.str()); })
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__add__", [](const Ordinal& a, const py::object& b) { return add(a, ordinal_from(b)); })
        .def("__radd__", [](const Ordinal& a, const py::object& b) { return add(ordinal_from(b), a); })
        .def("__mul__", [](const Ordinal& a, const py::object& b) { return mul(a, ordinal_from(b)); })
        .def("__rmul__", [](const Ordinal& a, const py::object& b) { return mul(ordinal_from(b), a); })
        .def_property_readonly("is_zero", &Ordinal::is_zero)
        .def_property_readonly("is_finite", &Ordinal::is_finite)
        .def_property_readonly("is_limit", &Ordinal::is_limit)
        .def_property_readonly("is_successor", &Ordinal::is_successor)
        .def_property_readonly("terms", [](const Ordinal& a) {
            py::list out;
            for (const auto& t : a.terms()) {
                out.append(py::make_tuple(t.exponent, to_py(t.coefficient)));
            }
            return out;
        });

    m.def("nat_sum", [](const py::object& a, const py::object& b) {
        return nat_sum(ordinal_from(a), ordinal_from(b));
    });
    m.def("nat_prod", [](const py::object& a, const py::object& b) {
        return nat_prod(ordinal_from(a), ordinal_from(b));
    });
    m.def("split_delta_m", [](const py::object& a) {
        auto s = split_delta_m(ordinal_from(a));
        return py::make_tuple(s.delta, to_py(s.m));
    });

    py::class_<FinitePoset>(m, "FinitePoset")
        .def(py::init([](std::size_t n, const std::vector<Edge>& edges) {
                 return FinitePoset::from_edges(n, edges);
             }),
             py::arg("n"), py::arg("edges") = std::vector<Edge>{})
        .def_static("chain", &FinitePoset::chain)
        .def_static("antichain", &FinitePoset::antichain)
        .def("__len__", &FinitePoset::size)
        .def("less", &FinitePoset::less)
        .def("relations", &FinitePoset::relations)
        .def("__str__", &FinitePoset::str)
        .def("__repr__", &FinitePoset::str)
        .def(py::self == py::self);

    m.def("maximal_elements", &maximal_elements);
    m.def("linear_extensions", &linear_extensions, py::arg("poset"),
          py::arg("cap") = kDefaultEnumerationCap);
    m.def("count_linear_extensions", &count_linear_extensions);
    m.def("is_cut", [](const FinitePoset& p, std::vector<Element> lower,
                       std::vector<Element> upper) {
        return is_cut(p, Cut{std::move(lower), std::move(upper)});
    });
    m.def("lex_product", py::overload_cast<const FinitePoset&, const FinitePoset&>(&lex_product));

    py::class_<WpoTerm>(m, "WpoTerm")
        .def_static("parse", &WpoTerm::parse)
        .def_static("fin", &WpoTerm::fin)
        .def_static("ord", [](const py::object& a) { return WpoTerm::ord(ordinal_from(a)); })
        .def_static("disjoint_union", &WpoTerm::disjoint_union)
        .def_static("lex_sum", &WpoTerm::lex_sum)
        .def_static("lex_product", &WpoTerm::lex_product)
        .def("__str__", &WpoTerm::str)
        .def("__repr__", [](const WpoTerm& t) { return "WpoTerm('" + t.str() + "')"; });

    py::class_<DeltaMK>(m, "DeltaMK")
        .def(py::init([](const py::object& delta, const py::int_& mm, const py::int_& k) {
            return DeltaMK{ordinal_from(delta), from_py(mm), from_py(k)};
        }))
        .def_readonly("delta", &DeltaMK::delta)
        .def_property_readonly("m", [](const DeltaMK& d) { return to_py(d.m); })
        .def_property_readonly("k", [](const DeltaMK& d) { return to_py(d.k); })
        .def("valid", &DeltaMK::valid)
        .def("__repr__", [](const DeltaMK& d) {
            return "DeltaMK(delta=" + d.delta.str() + ", m=" + d.m.str() + ", k=" + d.k.str() +
                   ")";
        });

    m.def("o_of", &o_of);
    m.def("max_count", [](const WpoTerm& t) { return to_py(max_count(t)); });
    m.def("delta_mk", &delta_mk);
    m.def("vialard", [](const py::object& base, const DeltaMK& d) {
        return vialard(ordinal_from(base), d);
    });
    m.def("vialard_expanded", [](const py::object& base, const DeltaMK& d) {
        return vialard_expanded(ordinal_from(base), d);
    });
    m.def("proof_trace_o", [](const py::object& base, const FinitePoset& q) {
        return proof_trace_o(ordinal_from(base), q);
    });
    m.def("proof_trace", [](const py::object& base, const FinitePoset& q) {
        return proof_trace(ordinal_from(base), q).render();
    });

    m.def(
        "witness_product_antichain",
        [](const py::object& alpha, std::size_t k) {
            const Witness w = witness_product_antichain(ordinal_from(alpha), k);
            py::list segs;
            for (const auto& s : w.segments) {
                segs.append(py::make_tuple(s.source, s.block));
            }
            return py::make_tuple(segs, w.claimed_type);
        },
        "(segments, claimed_type) for alpha . antichain(k)");
    m.def(
        "validate_witness",
        [](const std::vector<std::pair<std::string, Ordinal>>& segments, const WpoTerm& t,
           std::size_t rank_cap) {
            std::vector<Segment> segs;
            for (const auto& [src, block] : segments) {
                segs.push_back({src, block});
            }
            const auto r = validate_witness(Witness::from_segments(std::move(segs)), t, rank_cap);
            py::dict d;
            d["passed"] = r.passed;
            d["claimed_type"] = r.claimed_type;
            d["elements"] = r.elements;
            d["pairs_checked"] = r.pairs_checked;
            d["failure"] = r.failure;
            return d;
        },
        py::arg("segments"), py::arg("term"), py::arg("rank_cap") = kDefaultRankCap);

    m.def(
        "run_suite",
        [](const std::string& name, std::uint64_t seed, std::optional<std::size_t> cases) {
            const auto r = checks::run_suite(name, {seed, cases, std::nullopt});
            py::dict d;
            d["name"] = r.name;
            d["passed"] = r.passed;
            d["cases"] = r.cases;
            d["failures"] = r.failures;
            d["counterexample"] = r.counterexample;
            d["seconds"] = r.seconds;
            return d;
        },
        py::arg("name"), py::arg("seed") = 0, py::arg("cases") = py::none());
}
