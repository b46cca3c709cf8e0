// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems
//
// Airplane-specific geometry and invariants: blue-edge lengths, extremes,
// extremal derivatives, the global derivative homomorphism, rigid
// stabilizers and the induced maps on the central circle and the horizon.

#ifndef AIRFRAME_AIRPLANE_HPP_
#define AIRFRAME_AIRPLANE_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "airframe/diagram.hpp"
#include "airframe/pl_map.hpp"

namespace airframe {

  inline constexpr std::size_t red_color  = 0;
  inline constexpr std::size_t blue_color = 1;

  // Base edge indices of the Airplane system.
  inline constexpr std::size_t base_left  = 0;  // bL
  inline constexpr std::size_t base_right = 1;  // bR
  inline constexpr std::size_t base_top   = 2;  // rT
  inline constexpr std::size_t base_bottom = 3;  // rB

  // Child indices inside the Airplane rules.
  inline constexpr std::size_t red_first_half  = 0;
  inline constexpr std::size_t red_second_half = 1;
  inline constexpr std::size_t red_new_ray     = 2;
  inline constexpr std::size_t blue_near_initial  = 0;
  inline constexpr std::size_t blue_arc_one       = 1;
  inline constexpr std::size_t blue_arc_two       = 2;
  inline constexpr std::size_t blue_near_terminal = 3;

  void require_airplane(ReplacementSystem const& sys);

  ////////////////////////////////////////////////////////////////////////
  // Rays and components
  ////////////////////////////////////////////////////////////////////////

  // A component is either the central one or is named by the blue address
  // whose expansion produced its two boundary red edges.
  struct ComponentId {
    std::optional<EdgeAddress> creator;

    static ComponentId central() { return ComponentId{}; }
    static ComponentId created_by(EdgeAddress a) { return ComponentId{std::move(a)}; }
    bool is_central() const noexcept { return !creator.has_value(); }

    auto operator<=>(ComponentId const&) const = default;
    bool operator==(ComponentId const&) const  = default;
  };

  // The blue address starting the ray that contains `blue`.
  EdgeAddress ray_root(ReplacementSystem const& sys, EdgeAddress const& blue);
  // Whether the source of the blue edge is its end nearer the ray's start.
  bool inner_is_source(ReplacementSystem const& sys, EdgeAddress const& blue);
  // Child index of the half nearer to (inner) or farther from (outer) the
  // ray's start, for a blue edge with the given orientation.
  std::size_t inner_child(bool inner_source) noexcept;
  std::size_t outer_child(bool inner_source) noexcept;
  // Sub-interval of [0,1] occupied by `blue` on its ray.
  std::pair<DyadicRational, DyadicRational> ray_interval(ReplacementSystem const& sys,
                                                         EdgeAddress const&       blue);
  // The component on which a ray starts, and the angle at which it leaves.
  ComponentId    ray_component(ReplacementSystem const& sys, EdgeAddress const& root);
  DyadicRational ray_angle(ReplacementSystem const& sys, EdgeAddress const& root);

  // Boundary arc of a red address: its component and angle interval.
  struct Arc {
    ComponentId    component;
    DyadicRational lo;
    DyadicRational hi;
  };
  ComponentId component_of_red(ReplacementSystem const& sys, EdgeAddress const& red);
  Arc         red_arc(ReplacementSystem const& sys, EdgeAddress const& red);
  // The two boundary red edges of a component, in angle order.
  std::pair<EdgeAddress, EdgeAddress> boundary_reds(ReplacementSystem const& sys,
                                                    ComponentId const&       c);

  ////////////////////////////////////////////////////////////////////////
  // Lengths, extremes and derivatives
  ////////////////////////////////////////////////////////////////////////

  DyadicRational blue_edge_length(ReplacementSystem const& sys, EdgeAddress const& a);

  // A degree-one vertex, named by the start of the ray it terminates.
  struct ExtremeId {
    EdgeAddress ray;

    auto operator<=>(ExtremeId const&) const = default;
    bool operator==(ExtremeId const&) const  = default;
  };

  // Degree-one vertices of the realized expansion.
  std::vector<ExtremeId> extremes(Expansion const& e);
  // The leaf of `e` incident to the extreme, if the ray is present in `e`.
  std::optional<EdgeAddress> extreme_leaf(Expansion const& e, ExtremeId const& p);
  // The extreme a blue leaf touches, if it sits at the outer end of its ray.
  std::optional<ExtremeId> extreme_of_leaf(ReplacementSystem const& sys, EdgeAddress const& leaf);

  // log2 of a derivative value.
  struct DerivativeValue {
    std::int64_t exponent = 0;
    bool operator==(DerivativeValue const&) const = default;
  };

  DerivativeValue extremal_derivative_at(GraphPairDiagram const& f, ExtremeId const& p);
  std::vector<std::pair<ExtremeId, DerivativeValue>> derivative_table(GraphPairDiagram const& f);
  DerivativeValue global_derivative(GraphPairDiagram const& f);
  bool            is_in_commutator(GraphPairDiagram const& f);
  std::int64_t    abelianization_image(GraphPairDiagram const& f);

  struct SemidirectSplit {
    GraphPairDiagram c;
    std::int64_t     k = 0;
  };
  // f = c∘ε^k with D(c) = 1.
  SemidirectSplit semidirect_split(GraphPairDiagram const& f);

  bool is_in_rist_C0(GraphPairDiagram const& f);
  bool is_in_rist_Hor(GraphPairDiagram const& f);
  bool is_in_E(GraphPairDiagram const& f);

  // Action on the central circle (angle coordinates) of an element of
  // rist(C0), and on the horizon (right ray at 1/2 + l/2, left ray at
  // 1/2 - l/2, central component at 1/2) of an element of rist(Hor).
  PLMap induced_boundary_map(GraphPairDiagram const& f);
  PLMap induced_hor_map(GraphPairDiagram const& f);

}  // namespace airframe

#endif  // AIRFRAME_AIRPLANE_HPP_
