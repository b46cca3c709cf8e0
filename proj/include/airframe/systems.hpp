// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems
//
// Built-in replacement systems and their generator tables.

#ifndef AIRFRAME_SYSTEMS_HPP_
#define AIRFRAME_SYSTEMS_HPP_

#include <string>
#include <tuple>
#include <vector>

#include "airframe/diagram.hpp"
#include "airframe/pl_map.hpp"

namespace airframe {

  struct BuiltinSystem {
    SystemRef      system;
    GeneratorTable table;
  };

  // Airplane: colors red (0) and blue (1); base edges bL, bR, rT, rB;
  // generators alpha, beta, gamma, delta, epsilon (aliases a, b, g, d, e).
  BuiltinSystem const& airplane();
  // The Airplane system with the commutator generating set alpha, beta,
  // gamma, delta, c1 = [d,e], c2 = [e^-1, e^-1 a].
  BuiltinSystem const& airplane_commutator();
  // Basilica: base edges t, b (the central circle) and loops lA, lB;
  // generators t1..t4.
  BuiltinSystem const& basilica();
  // Unit interval: one edge I; generators X0, X1.
  BuiltinSystem const& interval_system();
  // Unit circle: edges c0 = [0,1/2], c1 = [1/2,1]; generators Y0, Y1, Y2.
  BuiltinSystem const& circle_system();
  // The circular system for the Airplane: a 6-cycle g0..g5. No generators.
  BuiltinSystem const& circular_airplane();

  // Names accepted by `builtin`.
  std::vector<std::string> builtin_names();
  BuiltinSystem const&     builtin(std::string const& name);

  // Builds a diagram from (domain, range, reversed) address strings.
  using CellList = std::vector<std::tuple<std::string, std::string, bool>>;
  GraphPairDiagram diagram_from_cells(SystemRef const& sys, CellList const& cells);

  // The dyadic interval of a cell of the interval system, or the arc of a
  // cell of the circle system.
  std::pair<DyadicRational, DyadicRational> unit_cell(ReplacementSystem const& sys,
                                                      EdgeAddress const&       a);
  // The PL homeomorphism represented by a diagram over the interval or
  // circle system.
  PLMap diagram_pl_map(GraphPairDiagram const& d);

  // Literal breakpoint data for the Thompson generators.
  PLMap thompson_x0();
  PLMap thompson_x1();
  PLMap thompson_y0();
  PLMap thompson_y1();
  PLMap thompson_y2();

}  // namespace airframe

#endif  // AIRFRAME_SYSTEMS_HPP_
