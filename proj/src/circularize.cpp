// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems

#include "airframe/circularize.hpp"

#include <algorithm>

#include "airframe/airplane.hpp"
#include "airframe/systems.hpp"

namespace airframe {

  namespace {
    constexpr std::size_t forward  = 0;
    constexpr std::size_t backward = 1;

    // Circular base edges g0..g5 for the Airplane base edges bL, bR, rT, rB.
    std::vector<EdgeAddress> base_image(std::size_t base) {
      switch (base) {
        case base_left: return {EdgeAddress{2, {}}, EdgeAddress{3, {}}};
        case base_right: return {EdgeAddress{5, {}}, EdgeAddress{0, {}}};
        case base_top: return {EdgeAddress{1, {}}};
        case base_bottom: return {EdgeAddress{4, {}}};
        default: throw PreconditionError("not an Airplane base edge");
      }
    }

    // Images of the children of an Airplane edge, given the image of the
    // edge itself.
    std::vector<EdgeAddress> child_image(std::size_t                     color,
                                         std::vector<EdgeAddress> const& parent,
                                         std::size_t                     i) {
      if (color == red_color) {
        EdgeAddress const& c = parent.front();
        switch (i) {
          case red_first_half: return {c.child(0)};
          case red_second_half: return {c.child(3)};
          default: return {c.child(1), c.child(2)};
        }
      }
      EdgeAddress const& f = parent[forward];
      EdgeAddress const& b = parent[backward];
      switch (i) {
        case blue_near_initial: return {b.child(2), f.child(0)};
        case blue_arc_one: return {b.child(1)};
        case blue_arc_two: return {f.child(1)};
        default: return {f.child(2), b.child(0)};
      }
    }

    CircularExpansion assemble(SystemRef const& airplane_sys, std::vector<EdgeAddress> const& leaves) {
      CircularExpansion out{Expansion{circular_airplane().system, {}}, {}};
      for (auto const& a : leaves) {
        auto img = circular_edges(*airplane_sys, a);
        out.expansion.leaves.insert(out.expansion.leaves.end(), img.begin(), img.end());
        out.correspondence.emplace(a, std::move(img));
      }
      std::sort(out.expansion.leaves.begin(), out.expansion.leaves.end());
      return out;
    }
  }  // namespace

  std::vector<EdgeAddress> circular_edges(ReplacementSystem const& airplane_sys,
                                          EdgeAddress const&       a) {
    require_airplane(airplane_sys);
    std::vector<EdgeAddress> img = base_image(a.base);
    EdgeAddress              cur{a.base, {}};
    for (auto i : a.path) {
      img = child_image(color_of(airplane_sys, cur), img, i);
      cur = cur.child(i);
    }
    return img;
  }

  CircularExpansion circularize(Expansion const& e) {
    return assemble(e.system, e.leaves);
  }

  CircularExpansion circular_base() {
    return circularize(base_expansion(airplane().system));
  }

  CircularExpansion circular_expand(CircularExpansion const& c, EdgeAddress const& a) {
    auto it = c.correspondence.find(a);
    if (it == c.correspondence.end()) {
      throw PreconditionError("address is not a leaf of the circularized expansion");
    }
    auto const&       sys   = *airplane().system;
    std::size_t       color = color_of(sys, a);
    CircularExpansion out{c.expansion, c.correspondence};
    for (auto const& edge : it->second) {
      out.expansion = expand_edge(out.expansion, edge);
    }
    out.correspondence.erase(a);
    for (std::size_t i = 0; i < sys.child_count(color); ++i) {
      out.correspondence.emplace(a.child(i), child_image(color, it->second, i));
    }
    return out;
  }

  GraphPairDiagram circularize(GraphPairDiagram const& f) {
    require_airplane(*f.system);
    GraphPairDiagram out{circular_airplane().system, {}};
    for (auto const& [d, img] : f.cells) {
      auto from = circular_edges(*f.system, d);
      auto to   = circular_edges(*f.system, img.target);
      if (img.reversed) {
        std::swap(to[forward], to[backward]);
      }
      for (std::size_t k = 0; k < from.size(); ++k) {
        out.cells.emplace(from[k], CellImage{to[k], false});
      }
    }
    if (!validate(out)) {
      throw InvariantError("circularized map is not a valid diagram");
    }
    return reduce(out);
  }

}  // namespace airframe
