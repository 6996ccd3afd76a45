#include <cmath>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lochom/asymptotics.hpp"
#include "lochom/errors.hpp"
#include "lochom/serialize.hpp"
#include "lochom/takayama.hpp"

namespace py = pybind11;
using namespace lochom;

namespace {

py::object to_python(const nlohmann::json& j) {
    switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
        py::list out;
        for (const auto& e : j) out.append(to_python(e));
        return out;
    }
    case nlohmann::json::value_t::object: {
        py::dict out;
        for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
        return out;
    }
    default: throw py::type_error("unsupported JSON value");
    }
}

py::object extended(const ExtendedDegree& e) {
    switch (e.kind()) {
    case ExtendedDegree::Kind::PlusInfinity: return py::float_(INFINITY);
    case ExtendedDegree::Kind::MinusInfinity: return py::float_(-INFINITY);
    case ExtendedDegree::Kind::Finite: break;
    }
    return py::int_(e.value());
}

std::vector<std::vector<int>> facet_lists(const SimplicialComplex& k) {
    std::vector<std::vector<int>> out;
    for (VertexSet f : k.facets()) {
        std::vector<int> face;
        for (int v : f.elements()) face.push_back(v + 1);
        out.push_back(face);
    }
    return out;
}

SimplicialComplex complex_from_lists(int d, const std::vector<std::vector<int>>& facets) {
    std::vector<VertexSet> faces;
    for (const auto& f : facets) {
        VertexSet s;
        for (int v : f) {
            if (v < 1 || v > d) throw DomainError("vertex " + std::to_string(v) + " outside [1," + std::to_string(d) + "]");
            s.insert(v - 1);
        }
        faces.push_back(s);
    }
    return SimplicialComplex::from_facets(d, faces);
}

SequenceOptions sequence_options(int n_min, bool saturated, std::uint64_t cap) {
    SequenceOptions o;
    o.n_min = n_min;
    o.saturated = saturated;
    o.table.pattern_cap = cap;
    return o;
}

TableOptions table_options(std::uint64_t cap) {
    TableOptions o;
    o.pattern_cap = cap;
    return o;
}

constexpr std::uint64_t kDefaultCap = 10'000'000;

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Multigraded local cohomology of monomial quotients";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ResourceCapError>(m, "ResourceCapError", base.ptr());
    py::register_exception<InternalConsistencyError>(m, "InternalConsistencyError", base.ptr());

    py::class_<MonomialIdeal>(m, "Ideal")
        .def(py::init([](const std::string& text, int d) { return parse_ideal(text, d); }), py::arg("text"),
             py::arg("d"))
        .def_static("maximal", &MonomialIdeal::maximal, py::arg("d"))
        .def_property_readonly("d", &MonomialIdeal::dim)
        .def_property_readonly("gens",
                               [](const MonomialIdeal& I) {
                                   std::vector<std::vector<int>> out;
                                   for (const auto& g : I.gens()) out.emplace_back(g.exponents().begin(), g.exponents().end());
                                   return out;
                               })
        .def("is_zero", &MonomialIdeal::is_zero)
        .def("is_unit", &MonomialIdeal::is_unit)
        .def("is_squarefree", &MonomialIdeal::is_squarefree)
        .def("power", [](const MonomialIdeal& I, int n) { return power(I, n); }, py::arg("n"))
        .def("saturate", &saturate_irrelevant)
        .def("radical", &radical)
        .def("krull_dimension", &krull_dimension)
        .def("rho", [](const MonomialIdeal& I) { return var_degree_bounds(I).rho; })
        .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
        .def("__str__", &MonomialIdeal::to_string)
        .def("__repr__", [](const MonomialIdeal& I) {
            return "Ideal(\"" + I.to_string() + "\", d=" + std::to_string(I.dim()) + ")";
        });

    m.def("stanley_reisner_complex", [](const MonomialIdeal& I) { return facet_lists(stanley_reisner_complex(I)); },
          py::arg("ideal"), "Facets of the complex of sqrt(I), 1-based; [] is void, [[]] irrelevant.");
    m.def("stanley_reisner_ideal",
          [](int d, const std::vector<std::vector<int>>& facets) {
              return stanley_reisner_ideal(complex_from_lists(d, facets));
          },
          py::arg("d"), py::arg("facets"));
    m.def("reduced_homology",
          [](int d, const std::vector<std::vector<int>>& facets, int characteristic) {
              return reduced_homology_dims(complex_from_lists(d, facets), Field::of(characteristic)).dims;
          },
          py::arg("d"), py::arg("facets"), py::arg("char") = 0);

    m.def("degree_complex",
          [](const MonomialIdeal& I, const std::vector<int>& a) { return facet_lists(degree_complex(I, a)); },
          py::arg("ideal"), py::arg("degree"));
    m.def("cohomology_dim",
          [](const MonomialIdeal& I, int i, const std::vector<int>& a, int characteristic) {
              return cohomology_dim_at(I, i, a, Field::of(characteristic));
          },
          py::arg("ideal"), py::arg("i"), py::arg("degree"), py::arg("char") = 0);
    m.def("cohomology_table",
          [](const MonomialIdeal& I, int i, int characteristic, std::uint64_t cap) {
              return to_python(table_to_json(cohomology_table(I, i, Field::of(characteristic), table_options(cap))));
          },
          py::arg("ideal"), py::arg("i"), py::arg("char") = 0, py::arg("pattern_cap") = kDefaultCap);
    m.def("indeg",
          [](const MonomialIdeal& I, int i, int characteristic, std::uint64_t cap) {
              return extended(indeg(I, i, Field::of(characteristic), table_options(cap)));
          },
          py::arg("ideal"), py::arg("i"), py::arg("char") = 0, py::arg("pattern_cap") = kDefaultCap);
    m.def("topdeg",
          [](const MonomialIdeal& I, int i, int characteristic, std::uint64_t cap) {
              return extended(topdeg(I, i, Field::of(characteristic), table_options(cap)));
          },
          py::arg("ideal"), py::arg("i"), py::arg("char") = 0, py::arg("pattern_cap") = kDefaultCap);
    m.def("regularity",
          [](const MonomialIdeal& I, int characteristic, std::uint64_t cap) {
              return regularity(I, Field::of(characteristic), table_options(cap));
          },
          py::arg("ideal"), py::arg("char") = 0, py::arg("pattern_cap") = kDefaultCap);

    m.def("power_sequence",
          [](const MonomialIdeal& I, int i, int n_min, int n_max, bool saturated, int characteristic, std::uint64_t cap) {
              return to_python(report_to_json(
                  power_sequence(I, i, n_max, Field::of(characteristic), sequence_options(n_min, saturated, cap))));
          },
          py::arg("ideal"), py::arg("i"), py::arg("n_min"), py::arg("n_max"), py::arg("saturated") = false,
          py::arg("char") = 0, py::arg("pattern_cap") = kDefaultCap);
    m.def("dichotomy",
          [](const MonomialIdeal& I, int i, int n_min, int n_max, bool saturated, int characteristic, std::uint64_t cap) {
              const auto r = dichotomy_report(I, i, n_max, Field::of(characteristic),
                                              sequence_options(n_min, saturated, cap));
              py::dict out;
              out["verdict"] = to_python(verdict_to_json(r.verdict));
              out["sequence"] = to_python(report_to_json(r.sequence));
              return out;
          },
          py::arg("ideal"), py::arg("i"), py::arg("n_min"), py::arg("n_max"), py::arg("saturated") = false,
          py::arg("char") = 0, py::arg("pattern_cap") = kDefaultCap);
    m.def("regularity_fit",
          [](const MonomialIdeal& I, int n_max, int characteristic, std::uint64_t cap) {
              return to_python(fit_to_json(
                  regularity_linear_fit(I, n_max, Field::of(characteristic), sequence_options(1, false, cap))));
          },
          py::arg("ideal"), py::arg("n_max"), py::arg("char") = 0, py::arg("pattern_cap") = kDefaultCap);
}
