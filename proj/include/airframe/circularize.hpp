// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems
//
// The passage from Airplane expansions to expansions of the circular
// system, and the induced embedding of the Airplane group.

#ifndef AIRFRAME_CIRCULARIZE_HPP_
#define AIRFRAME_CIRCULARIZE_HPP_

#include <map>
#include <vector>

#include "airframe/diagram.hpp"

namespace airframe {

  // A red Airplane edge corresponds to one circular edge; a blue Airplane
  // edge to the pair (forward, backward): the forward edge runs from the
  // blue edge's source to its target, the backward edge returns.
  using EdgeCorrespondence = std::map<EdgeAddress, std::vector<EdgeAddress>>;

  struct CircularExpansion {
    Expansion          expansion;
    EdgeCorrespondence correspondence;  // keyed by the Airplane leaves
  };

  // Circular edges corresponding to any Airplane address.
  std::vector<EdgeAddress> circular_edges(ReplacementSystem const& airplane_sys,
                                          EdgeAddress const&       a);

  CircularExpansion circularize(Expansion const& e);
  // The image of the base expansion.
  CircularExpansion circular_base();
  // Applies one simple expansion of the Airplane leaf `a` to both sides.
  CircularExpansion circular_expand(CircularExpansion const& c, EdgeAddress const& a);

  // The image of an Airplane element in the circular group; validated and
  // reduced. Throws InvariantError if the transported map is not a diagram.
  GraphPairDiagram circularize(GraphPairDiagram const& f);

}  // namespace airframe

#endif  // AIRFRAME_CIRCULARIZE_HPP_
