// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems
//
// Python bindings for the main operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "airframe/acceptance.hpp"
#include "airframe/airplane.hpp"
#include "airframe/circularize.hpp"
#include "airframe/components.hpp"
#include "airframe/json_io.hpp"
#include "airframe/systems.hpp"
#include "airframe/tree_embedding.hpp"
#include "airframe/word.hpp"

namespace py = pybind11;
using namespace airframe;

namespace {

  GraphPairDiagram eval_in(std::string const& word, std::string const& system) {
    auto const& b = builtin(system);
    return evaluate_word(b.table, parse_group_word(word, b.table));
  }

  std::string map_path(std::string const& word, std::string const& path) {
    auto const& a   = airplane();
    auto        f   = evaluate_word(a.table, parse_group_word(word, a.table));
    auto const& sys = *a.system;
    return format_path(component_path(sys, map_component(f, path_to_component(sys, parse_path(path)))));
  }

  std::optional<std::string> orbit(std::string const& src,
                                   std::string const& tgt,
                                   std::size_t        max_len,
                                   std::string const& system) {
    auto const& b = builtin(system);
    auto        w = orbit_search(b.table,
                          path_to_component(*b.system, parse_path(src)),
                          path_to_component(*b.system, parse_path(tgt)),
                          max_len);
    if (!w) {
      return std::nullopt;
    }
    return format_word(*w);
  }

  std::optional<std::string> to_central(std::string const& path, std::string const& system) {
    auto const& b = builtin(system);
    auto        w = reduce_to_central(b.table, path_to_component(*b.system, parse_path(path)));
    if (!w) {
      return std::nullopt;
    }
    return format_word(*w);
  }

  py::tuple aligned_paths(std::vector<std::string> const& paths) {
    std::vector<ComponentPath> cs;
    for (auto const& p : paths) {
      cs.push_back(parse_path(p));
    }
    auto                     r = aligned(cs);
    std::vector<std::string> ordered;
    for (auto const& p : r.ordered) {
      ordered.push_back(format_path(p));
    }
    return py::make_tuple(r.aligned, ordered);
  }

}  // namespace

PYBIND11_MODULE(_airframe, m) {
  m.doc() = "Rearrangement groups of edge-replacement systems";

  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<GraphPairDiagram>(m, "Diagram")
      .def_static(
          "from_json",
          [](std::string const& text) { return diagram_from_json(nlohmann::json::parse(text)); },
          py::arg("text"))
      .def("to_json", [](GraphPairDiagram const& d) { return diagram_to_json(d).dump(); })
      .def_property_readonly("system", [](GraphPairDiagram const& d) { return d.system->name; })
      .def("__len__", &GraphPairDiagram::size)
      .def("reduce", [](GraphPairDiagram const& d) { return reduce(d); })
      .def("is_reduced", [](GraphPairDiagram const& d) { return is_reduced(d); })
      .def("is_identity", [](GraphPairDiagram const& d) { return is_identity(d); })
      .def("inverse", [](GraphPairDiagram const& d) { return invert(d); })
      .def("__pow__", [](GraphPairDiagram const& d, std::int64_t k) { return power(d, k); })
      .def("__mul__", [](GraphPairDiagram const& f, GraphPairDiagram const& g) { return compose(f, g); },
           "f * g applies g first")
      .def("__eq__", [](GraphPairDiagram const& f, GraphPairDiagram const& g) { return equals(f, g); })
      .def("__repr__", [](GraphPairDiagram const& d) {
        return "<Diagram " + d.system->name + " with " + std::to_string(d.size()) + " cells>";
      });

  m.def("systems", &builtin_names, "Names of the built-in systems");
  m.def("system_json", [](std::string const& name) { return system_to_json(*resolve_system(name)).dump(); },
        py::arg("name"));
  m.def("generators", [](std::string const& system) { return builtin(system).table.names(); },
        py::arg("system") = "airplane");

  m.def("normalize_word", [](std::string const& src) { return to_string(parse_word(src)); },
        py::arg("word"), "Parse and pretty-print a word");
  m.def("flatten_word",
        [](std::string const& src) { return flatten(parse_word(src)); },
        py::arg("word"), "Expand a word into (generator, exponent) letters");
  m.def("evaluate", &eval_in, py::arg("word"), py::arg("system") = "airplane",
        "Reduced diagram of a word");

  m.def("derivative", [](std::string const& word) { return global_derivative(eval_in(word, "airplane")).exponent; },
        py::arg("word"), "log2 of the global derivative");
  m.def("in_commutator", [](std::string const& word) { return is_in_commutator(eval_in(word, "airplane")); },
        py::arg("word"));
  m.def("in_E", [](std::string const& word) { return is_in_E(eval_in(word, "airplane")); }, py::arg("word"));
  m.def(
      "semidirect_split",
      [](std::string const& word) {
        auto s = semidirect_split(eval_in(word, "airplane"));
        return py::make_tuple(s.c, s.k);
      },
      py::arg("word"), "(c, k) with word = c e^k and D(c) = 1");
  m.def("boundary_map", [](std::string const& word) { return induced_boundary_map(eval_in(word, "airplane")).str(); },
        py::arg("word"));
  m.def("horizon_map", [](std::string const& word) { return induced_hor_map(eval_in(word, "airplane")).str(); },
        py::arg("word"));

  m.def("map_component", &map_path, py::arg("word"), py::arg("path"),
        "Image of a component path under a word");
  m.def("orbit_search", &orbit, py::arg("src"), py::arg("tgt"), py::arg("max_len") = 8,
        py::arg("system") = "airplane");
  m.def("reduce_to_central", &to_central, py::arg("path"), py::arg("system") = "airplane");
  m.def("aligned", &aligned_paths, py::arg("paths"), "(aligned, ordered paths)");

  m.def("circularize", [](std::string const& word) { return circularize(eval_in(word, "airplane")); },
        py::arg("word"));
  m.def(
      "intertwine_check",
      [](std::size_t depth, int bound, bool shuffled) {
        auto r = intertwine_check(depth, bound, shuffled ? shuffled_pairing() : canonical_pairing());
        return py::make_tuple(r.ok(), r.checks, r.mismatches);
      },
      py::arg("depth") = 2, py::arg("bound") = 8, py::arg("shuffled") = false,
      "(ok, checks, mismatches)");

  m.def(
      "run_criterion",
      [](int id, std::uint64_t seed) {
        auto r = run_criterion(id, seed);
        return py::make_tuple(r.passed, r.title, r.detail);
      },
      py::arg("id"), py::arg("seed") = default_seed);
  m.attr("default_seed") = default_seed;
}
