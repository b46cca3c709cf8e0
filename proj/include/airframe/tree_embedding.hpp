// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems
//
// The adjacency trees of a family of Airplane components and of the
// Basilica components, the two group actions on them, and a finite check
// that a fixed identification of the trees intertwines the actions.

#ifndef AIRFRAME_TREE_EMBEDDING_HPP_
#define AIRFRAME_TREE_EMBEDDING_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "airframe/components.hpp"

namespace airframe {

  // A vertex of either tree as a sequence of attachment angles read from the
  // root: the i-th angle locates the i-th vertex on the previous component.
  using TreeVertex = std::vector<DyadicRational>;

  std::string format_vertex(TreeVertex const& v);

  ////////////////////////////////////////////////////////////////////////
  // Airplane side
  ////////////////////////////////////////////////////////////////////////

  // Components whose path has the form ((θ1, 1 - 2^-k1), (θ2, 1 - 2^-k2), ...).
  struct FrakCStep {
    DyadicRational angle;
    int            k = 1;

    bool operator==(FrakCStep const&) const = default;
  };
  using FrakCVertex = std::vector<FrakCStep>;

  std::optional<FrakCVertex> frak_c_membership(ReplacementSystem const& sys, ComponentId const& c);
  ComponentId                frak_c_component(ReplacementSystem const& sys, FrakCVertex const& v);

  // Each step (θ, k) becomes θ followed by k - 1 copies of 1/2.
  TreeVertex  to_tree_vertex(FrakCVertex const& v);
  FrakCVertex from_tree_vertex(TreeVertex const& v);

  // Throws PreconditionError for letters outside alpha, beta, gamma, delta
  // and InvariantError if the image leaves the family.
  FrakCVertex airplane_tree_action(GroupWord const& w, FrakCVertex const& v);

  ////////////////////////////////////////////////////////////////////////
  // Basilica side
  ////////////////////////////////////////////////////////////////////////

  // A Basilica component: nothing for the central circle, otherwise the
  // loop edge that created it.
  struct BasilicaComponent {
    std::optional<EdgeAddress> loop;

    bool is_central() const noexcept { return !loop.has_value(); }
    auto operator<=>(BasilicaComponent const&) const = default;
    bool operator==(BasilicaComponent const&) const  = default;
  };

  BasilicaComponent basilica_component_of(ReplacementSystem const& sys, EdgeAddress const& a);
  // The component the loop is attached to; requires a non-central component.
  BasilicaComponent basilica_parent(ReplacementSystem const& sys, BasilicaComponent const& c);
  BasilicaComponent map_basilica_component(GraphPairDiagram const& f, BasilicaComponent const& c);

  TreeVertex        basilica_vertex(ReplacementSystem const& sys, BasilicaComponent const& c);
  BasilicaComponent basilica_component(ReplacementSystem const& sys, TreeVertex const& v);

  TreeVertex basilica_tree_action(GroupWord const& w, TreeVertex const& v);

  ////////////////////////////////////////////////////////////////////////
  // Intertwining
  ////////////////////////////////////////////////////////////////////////

  // Vertices with at most `depth` angles: the first a multiple of 1/bound in
  // [0,1), later ones multiples of 1/bound in (0,1). `bound` is a power of 2.
  std::vector<TreeVertex> truncated_tree(std::size_t depth, int bound);

  struct IntertwineReport {
    std::size_t              vertices = 0;
    std::size_t              checks   = 0;
    std::vector<std::string> mismatches;
    bool ok() const noexcept { return mismatches.empty(); }
  };

  // Airplane generator name -> Basilica generator name.
  using GeneratorPairing = std::vector<std::pair<std::string, std::string>>;
  GeneratorPairing canonical_pairing();
  GeneratorPairing shuffled_pairing();

  // For every truncated vertex v and paired generators (g, h), and for
  // their inverses, checks that g moves v to the vertex h moves it to.
  IntertwineReport intertwine_check(std::size_t             depth,
                                    int                     bound,
                                    GeneratorPairing const& pairing = canonical_pairing());

}  // namespace airframe

#endif  // AIRFRAME_TREE_EMBEDDING_HPP_
