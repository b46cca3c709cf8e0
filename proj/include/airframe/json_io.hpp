// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems
//
// JSON serialization of replacement systems and graph pair diagrams.
//
// System:  {"name", "colors", "base": {"vertices", "edges": [[id, src, tgt, color]]},
//           "rules": [{"color", "vertices", "edges", "initial", "terminal", "reversible"}]}
// Diagram: {"system", "domain": [addr], "range": [addr],
//           "map": [[addr, addr]] with an optional third entry "rev"}

#ifndef AIRFRAME_JSON_IO_HPP_
#define AIRFRAME_JSON_IO_HPP_

#include <functional>
#include <string>
#include <vector>

#include "airframe/diagram.hpp"
#include "json.hpp"

namespace airframe {

  // Name of the environment variable holding a ':'-separated list of
  // directories searched for <name>.json system files.
  inline constexpr char const* system_path_variable = "AIRFRAME_SYSTEM_PATH";

  nlohmann::json    system_to_json(ReplacementSystem const& sys);
  // Throws InputError on malformed or invalid input.
  ReplacementSystem system_from_json(nlohmann::json const& j);

  // Built-in systems first, then the search path.
  SystemRef resolve_system(std::string const& name);
  using SystemResolver = std::function<SystemRef(std::string const&)>;

  nlohmann::json   diagram_to_json(GraphPairDiagram const& d);
  // Throws InputError if the document is malformed or does not describe a
  // valid diagram.
  GraphPairDiagram diagram_from_json(nlohmann::json const& j,
                                     SystemResolver const& resolve = resolve_system);

}  // namespace airframe

#endif  // AIRFRAME_JSON_IO_HPP_
