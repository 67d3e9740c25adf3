#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bv/ellk3.hpp"
#include "bv/errors.hpp"
#include "bv/fibration.hpp"
#include "bv/hodge.hpp"
#include "bv/invariants.hpp"
#include "bv/lefschetz.hpp"
#include "bv/tables.hpp"
#include "bv/toricbase.hpp"
#include "bv/weierstrass.hpp"

namespace py = pybind11;
using namespace bv;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact invariants of Borcea-Voisin Calabi-Yau 3-folds";

  static py::exception<Error> bv_error(m, "BvError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = bv_error;
      py::object instance = err(e.what());
      instance.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(err.ptr(), instance.ptr());
    }
  });

  py::class_<HodgeDiamond>(m, "HodgeDiamond")
      .def(py::init([](int h11, int h21) { return HodgeDiamond{h11, h21}; }), py::arg("h11"), py::arg("h21"))
      .def_readonly("h11", &HodgeDiamond::h11)
      .def_readonly("h21", &HodgeDiamond::h21)
      .def("euler", &HodgeDiamond::euler)
      .def("__eq__", [](const HodgeDiamond& a, const HodgeDiamond& b) { return a == b; })
      .def("__iter__", [](const HodgeDiamond& d) { return py::iter(py::make_tuple(d.h11, d.h21)); })
      .def("__repr__", [](const HodgeDiamond& d) {
        return "HodgeDiamond(h11=" + std::to_string(d.h11) + ", h21=" + std::to_string(d.h21) + ")";
      });

  py::class_<EigenspaceDims>(m, "EigenspaceDims")
      .def(py::init([](int order, int r, int m_, int d2, int d3) {
             return EigenspaceDims::make(Order::of(order), r, m_, d2, d3);
           }),
           py::arg("order"), py::arg("r"), py::arg("m"), py::arg("d2") = 0, py::arg("d3") = 0)
      .def_property_readonly("order", [](const EigenspaceDims& d) { return d.order.value(); })
      .def_readonly("r", &EigenspaceDims::r)
      .def_readonly("m", &EigenspaceDims::m)
      .def_readonly("d2", &EigenspaceDims::d2)
      .def_readonly("d3", &EigenspaceDims::d3)
      .def("weighted_sum", &EigenspaceDims::weighted_sum)
      .def("__eq__", [](const EigenspaceDims& a, const EigenspaceDims& b) { return a == b; })
      .def("__repr__", [](const EigenspaceDims& d) {
        return "EigenspaceDims(order=" + std::to_string(d.order.value()) + ", r=" + std::to_string(d.r) +
               ", m=" + std::to_string(d.m) + ", d2=" + std::to_string(d.d2) + ", d3=" + std::to_string(d.d3) + ")";
      });

  py::class_<FamilyFlags>(m, "FamilyFlags")
      .def_readonly("bv_maximal", &FamilyFlags::bv_maximal)
      .def_readonly("no_mum", &FamilyFlags::no_mum)
      .def_readonly("alpha_X_order", &FamilyFlags::alpha_X_order);

  py::class_<FixedLocusN2>(m, "FixedLocusN2")
      .def_readonly("empty_fixed_locus", &FixedLocusN2::empty_fixed_locus)
      .def_readonly("N", &FixedLocusN2::N)
      .def_readonly("Nprime", &FixedLocusN2::Nprime);
  py::class_<FixedLocusN3>(m, "FixedLocusN3")
      .def_readonly("n_points", &FixedLocusN3::n_points)
      .def_readonly("k_curves", &FixedLocusN3::k_curves)
      .def_readonly("gC", &FixedLocusN3::gC);
  py::class_<FixedLocusN4>(m, "FixedLocusN4")
      .def_property_readonly("case", [](const FixedLocusN4& s) { return std::string(to_string(s.fixed_case)); })
      .def_readonly("k", &FixedLocusN4::k)
      .def_readonly("b", &FixedLocusN4::b)
      .def_readonly("a", &FixedLocusN4::a)
      .def_readonly("n1", &FixedLocusN4::n1)
      .def_readonly("n2", &FixedLocusN4::n2)
      .def_readonly("gD", &FixedLocusN4::gD)
      .def_readonly("N", &FixedLocusN4::N);
  py::class_<FixedLocusN6>(m, "FixedLocusN6")
      .def_readonly("l", &FixedLocusN6::l)
      .def_readonly("N", &FixedLocusN6::N)
      .def_readonly("k", &FixedLocusN6::k)
      .def_readonly("nprime", &FixedLocusN6::nprime)
      .def_readonly("p25", &FixedLocusN6::p25)
      .def_readonly("p34", &FixedLocusN6::p34)
      .def_readonly("gB", &FixedLocusN6::gB)
      .def_readonly("gF1", &FixedLocusN6::gF1)
      .def_property_readonly("n", &FixedLocusN6::n);

  m.def("n2_from_lattice", &n2_from_lattice, py::arg("r"), py::arg("a"));
  m.def("n3_from_lattice", &n3_from_lattice, py::arg("r"), py::arg("a"));
  m.def(
      "n4_complete",
      [](const std::string& c, int k, int a, int gD, int n2) {
        auto done = n4_complete(parse_n4_case(c), k, a, gD, n2);
        return py::make_tuple(done.locus, done.dims);
      },
      py::arg("case"), py::arg("k"), py::arg("a"), py::arg("gD"), py::arg("n2") = 0);
  m.def("euler_fix", &euler_fix, py::arg("g"), py::arg("k"), py::arg("n"));

  m.def(
      "trace_coeffs", [](int order, int power) { return trace_coeffs(Order::of(order), power); }, py::arg("order"),
      py::arg("power"));
  m.def(
      "solve",
      [](int order, const std::map<int, int>& chi) {
        std::vector<ChiConstraint> cs;
        for (auto [j, c] : chi) cs.push_back({j, c});
        return solve(Order::of(order), cs);
      },
      py::arg("order"), py::arg("chi"), "chi maps power j to chi(Fix(alpha^j))");

  m.def("hodge_x2", &hodge_x2);
  m.def("hodge_x3", &hodge_x3);
  m.def("hodge_x4", &hodge_x4);
  m.def("hodge_x6", &hodge_x6);
  m.def(
      "hodge_x2_lattice",
      [](int r, int a) {
        if (r == 10 && a == 10) return hodge_x2(FixedLocusN2::empty(), EigenspaceDims::from_r(Order::two(), 10));
        return hodge_x2(n2_from_lattice(r, a), EigenspaceDims::from_r(Order::two(), r));
      },
      py::arg("r"), py::arg("a"));
  m.def(
      "hodge_x3_lattice",
      [](int r, int a) { return hodge_x3(n3_from_lattice(r, a), EigenspaceDims::from_r(Order::three(), r)); },
      py::arg("r"), py::arg("a"));
  m.def(
      "family_flags",
      [](int order, const HodgeDiamond& d, const EigenspaceDims& dims) {
        return family_flags(Order::of(order), d, dims);
      },
      py::arg("order"), py::arg("diamond"), py::arg("dims"));
  m.def("mirror_pairs", &mirror_pairs, py::arg("rows"));

  m.def(
      "intersect",
      [](const std::string& surface, const std::string& c1, const std::string& c2) {
        const auto S = parse_base(surface);
        return intersect(parse_class(c1, S), parse_class(c2, S), S);
      },
      py::arg("surface"), py::arg("c1"), py::arg("c2"));
  m.def(
      "adjunction_genus",
      [](const std::string& surface, const std::string& c) {
        const auto S = parse_base(surface);
        return adjunction_genus(parse_class(c, S), S);
      },
      py::arg("surface"), py::arg("cls"));
  m.def(
      "canonical", [](const std::string& surface) { return to_string(canonical(parse_base(surface))); },
      py::arg("surface"));

  m.def("preset_names", &preset_names);
  m.def(
      "singular_fibers",
      [](const std::string& preset) {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto& [name, t] : singular_fibers(build_preset(preset))) out.emplace_back(name, to_string(t));
        return out;
      },
      py::arg("preset"));
  m.def(
      "class_check", [](const std::string& preset) { return class_check(build_preset(preset)); }, py::arg("preset"));

  m.def(
      "classify_fiber",
      [](int order, const std::string& point_class) {
        const auto f = classify_fiber(BasePointClass::make(Order::of(order), parse_point_tag(point_class)));
        py::dict out;
        out["variant"] = std::string(to_string(f.variant));
        if (f.kodaira) out["kodaira"] = to_string(*f.kodaira);
        std::vector<std::string> comps;
        for (const auto& c : f.components) comps.push_back(to_string(c));
        out["components"] = comps;
        out["adjacency"] = f.adjacency;
        out["contains_divisors"] = f.contains_divisors;
        return out;
      },
      py::arg("order"), py::arg("point_class"));

  m.def(
      "hodge_from_profile",
      [](const std::string& profile) {
        auto h = hodge_from_profile(MultiplicityProfile::parse(profile));
        return py::make_tuple(h.diamond, h.dims);
      },
      py::arg("profile"));
  m.def(
      "invariants_from_profile",
      [](const std::string& profile) {
        auto inv = invariants_from_profile(MultiplicityProfile::parse(profile));
        return py::make_tuple(inv.locus, inv.chi);
      },
      py::arg("profile"));

  m.def(
      "emit_table",
      [](const std::string& table, const std::string& format) {
        return emit_table(parse_table_id(table), parse_table_format(format));
      },
      py::arg("table"), py::arg("format") = "csv");
  m.def(
      "table_diamonds", [](const std::string& table) { return table_diamonds(parse_table_id(table)); },
      py::arg("table"));
  m.def("compare_known", &compare_known, py::arg("rows"), py::arg("known_pairs_file"));
}
