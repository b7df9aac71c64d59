#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dsmt/belief_matrix.hpp"
#include "dsmt/combination.hpp"
#include "dsmt/error.hpp"
#include "dsmt/lattice.hpp"
#include "dsmt/ordering.hpp"

namespace py = pybind11;
using namespace dsmt;

namespace {

using LatticePtr = std::shared_ptr<Lattice>;

LatticePtr own(Lattice l) { return std::make_shared<Lattice>(std::move(l)); }

GeneratorSet to_generator_set(const std::vector<int>& generators) {
  GeneratorSet set = 0;
  for (int k : generators) {
    if (k < 1 || k > 31) throw InvalidArgument("generator index out of range: " + std::to_string(k));
    set |= GeneratorSet{1} << (k - 1);
  }
  return set;
}

MassVector masses_on(const LatticePtr& lattice, const std::vector<double>& values) {
  if (values.size() != lattice->size()) {
    throw InvalidArgument("expected " + std::to_string(lattice->size()) + " masses, got " +
                          std::to_string(values.size()));
  }
  return MassVector{lattice, values};
}

ElementMask element_arg(const Lattice& lattice, const py::object& item) {
  if (py::isinstance<py::str>(item)) return parse_expression(item.cast<std::string>(), lattice);
  return lattice.element(item.cast<std::size_t>());
}

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hyper-powerset generation, belief matrices and combination rules";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<FullContradiction>(m, "FullContradiction", base.ptr());
  py::register_exception<NotTriangular>(m, "NotTriangular", base.ptr());

  py::class_<FrameModel>(m, "FrameModel")
      .def_static("free", &FrameModel::free, py::arg("n"))
      .def_static("shafer", &FrameModel::shafer, py::arg("n"))
      .def_static(
          "hybrid",
          [](int n, const std::vector<std::vector<int>>& empty) {
            std::vector<GeneratorSet> sets;
            for (const auto& g : empty) sets.push_back(to_generator_set(g));
            return FrameModel::hybrid(n, sets);
          },
          py::arg("n"), py::arg("empty_intersections"),
          "Model with the given intersections forced empty, e.g. [[1, 3], [2, 3]].")
      .def_property_readonly("n", &FrameModel::n)
      .def_property_readonly("kind", [](const FrameModel& f) { return to_string(f.kind()); })
      .def("__eq__", [](const FrameModel& a, const FrameModel& b) { return a == b; })
      .def("__repr__", [](const FrameModel& f) {
        return "FrameModel(n=" + std::to_string(f.n()) + ", kind=" + to_string(f.kind()) + ")";
      });

  py::class_<Lattice, LatticePtr>(m, "Lattice")
      .def_property_readonly("n", &Lattice::n)
      .def_property_readonly("width", &Lattice::width)
      .def_property_readonly("model", &Lattice::model)
      .def_property_readonly("masks",
                             [](const Lattice& l) { return std::vector<std::uint64_t>(l.masks().begin(), l.masks().end()); })
      .def_property_readonly("parts", [](const Lattice& l) {
        std::vector<std::string> codes;
        for (const auto& p : l.basis().parts()) codes.push_back(p.code());
        return codes;
      })
      .def("__len__", &Lattice::size)
      .def("label", &Lattice::label, py::arg("index"))
      .def("expression", &Lattice::pretty_label, py::arg("index"))
      .def(
          "index",
          [](const Lattice& l, const py::object& item) {
            if (py::isinstance<py::str>(item)) return l.require_index(parse_expression(item.cast<std::string>(), l));
            return l.require_index({item.cast<std::uint64_t>(), static_cast<std::uint8_t>(l.width())});
          },
          py::arg("element"), "Index of an expression such as '(1|2)&3' or of a raw part mask.")
      .def("cardinality", [](const Lattice& l, const py::object& e) { return dsm_cardinality(element_arg(l, e)); })
      .def("strength", [](const Lattice& l, const py::object& e) { return fraction(strength(element_arg(l, e), l.basis())); })
      .def("order", [](const Lattice& l, const std::string& kind) { return total_order(l, parse_order_kind(kind)); },
           py::arg("kind"))
      .def("__eq__", [](const Lattice& a, const Lattice& b) { return a == b; })
      .def("__repr__", [](const Lattice& l) {
        return "Lattice(n=" + std::to_string(l.n()) + ", kind=" + to_string(l.model().kind()) +
               ", size=" + std::to_string(l.size()) + ")";
      });

  m.def("generate_isotone", [](int n, bool allow_large) { return own(generate_isotone(n, allow_large)); },
        py::arg("n"), py::arg("allow_large") = false);
  m.def("generate_powerset", [](int n) { return own(generate_powerset_bibe(n)); }, py::arg("n"));
  m.def("generate_lattice", [](const FrameModel& model, bool allow_large) {
        return own(generate_lattice(model, allow_large));
      },
        py::arg("model"), py::arg("allow_large") = false);
  m.def("generate_closure_oracle", [](const FrameModel& model) { return own(generate_closure_oracle(model)); },
        py::arg("model"));

  py::class_<BeliefMatrix>(m, "BeliefMatrix")
      .def(py::init([](const LatticePtr& lattice, const std::string& order, bool allow_large) {
             return build_bm(lattice, parse_order_kind(order), allow_large);
           }),
           py::arg("lattice"), py::arg("order") = "strength", py::arg("allow_large") = false)
      .def_property_readonly("order", &BeliefMatrix::order)
      .def_property_readonly("entries", [](const BeliefMatrix& bm) { return bm.entries(); })
      .def_property_readonly("inverse", [](const BeliefMatrix& bm) { return bm.inverse(); })
      .def("is_unit_lower_triangular", &BeliefMatrix::is_unit_lower_triangular)
      .def(
          "bel_from_m",
          [](const BeliefMatrix& bm, const std::vector<double>& masses) {
            return bel_from_m(bm, MassVector{bm.lattice_ptr(), masses}).values;
          },
          py::arg("masses"))
      .def(
          "m_from_bel",
          [](const BeliefMatrix& bm, const std::vector<double>& beliefs) {
            return m_from_bel(bm, BeliefVector{bm.lattice_ptr(), beliefs}).values;
          },
          py::arg("beliefs"));

  m.def("bm_recursive_dst", &bm_recursive_dst, py::arg("n"));

  m.def(
      "belief",
      [](const LatticePtr& l, const std::vector<double>& masses) { return belief_by_summation(masses_on(l, masses)).values; },
      py::arg("lattice"), py::arg("masses"));
  m.def(
      "plausibility",
      [](const LatticePtr& l, const std::vector<double>& masses, const py::object& element) {
        return plausibility(masses_on(l, masses), element_arg(*l, element));
      },
      py::arg("lattice"), py::arg("masses"), py::arg("element"));

  m.def(
      "combine",
      [](const std::string& rule, const LatticePtr& l, const std::vector<std::vector<double>>& sources,
         std::optional<std::vector<double>> weights) {
        std::vector<MassVector> ms;
        for (const auto& s : sources) {
          ms.push_back(masses_on(l, s));
          ms.back().validate();
        }
        std::optional<WeightScheme> scheme;
        if (weights) scheme = WeightScheme{*weights};
        FusionResult r = combine_sources(parse_rule(rule), ms, scheme);
        return py::make_tuple(r.masses.values, r.conflicts);
      },
      py::arg("rule"), py::arg("lattice"), py::arg("sources"), py::arg("weights") = py::none(),
      "Fuse mass vectors left to right; returns (masses, per-step conflicts).");
}
