// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems

#include "airframe/airplane.hpp"

#include <algorithm>
#include <set>

#include "airframe/systems.hpp"

namespace airframe {

  void require_airplane(ReplacementSystem const& sys) {
    if (sys.name != "airplane") {
      throw PreconditionError("operation requires the airplane system, got " + sys.name);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Rays and components
  ////////////////////////////////////////////////////////////////////////

  EdgeAddress ray_root(ReplacementSystem const& sys, EdgeAddress const& blue) {
    if (color_of(sys, blue) != blue_color) {
      throw PreconditionError(format_address(sys, blue) + " is not blue");
    }
    EdgeAddress a = blue;
    while (!a.is_base() && color_of(sys, a.parent()) == blue_color) {
      a = a.parent();
    }
    return a;
  }

  std::size_t inner_child(bool inner_source) noexcept {
    return inner_source ? blue_near_initial : blue_near_terminal;
  }

  std::size_t outer_child(bool inner_source) noexcept {
    return inner_source ? blue_near_terminal : blue_near_initial;
  }

  namespace {
    // Orientation of a blue child given its parent's.
    bool child_orientation(bool parent_inner_source, std::size_t index) noexcept {
      return index == blue_near_initial ? !parent_inner_source : parent_inner_source;
    }
  }  // namespace

  bool inner_is_source(ReplacementSystem const& sys, EdgeAddress const& blue) {
    EdgeAddress root = ray_root(sys, blue);
    bool        f    = true;
    for (std::size_t i = root.depth(); i < blue.depth(); ++i) {
      f = child_orientation(f, blue.path[i]);
    }
    return f;
  }

  std::pair<DyadicRational, DyadicRational> ray_interval(ReplacementSystem const& sys,
                                                         EdgeAddress const&       blue) {
    EdgeAddress    root = ray_root(sys, blue);
    bool           f    = true;
    DyadicRational lo{0};
    DyadicRational hi{1};
    for (std::size_t i = root.depth(); i < blue.depth(); ++i) {
      auto mid = midpoint(lo, hi);
      if (blue.path[i] == inner_child(f)) {
        hi = mid;
      } else {
        lo = mid;
      }
      f = child_orientation(f, blue.path[i]);
    }
    return {lo, hi};
  }

  ComponentId component_of_red(ReplacementSystem const& sys, EdgeAddress const& red) {
    EdgeAddress a = red;
    while (!a.is_base()) {
      EdgeAddress p = a.parent();
      if (color_of(sys, p) == blue_color) {
        return ComponentId::created_by(p);
      }
      a = std::move(p);
    }
    return ComponentId::central();
  }

  Arc red_arc(ReplacementSystem const& sys, EdgeAddress const& red) {
    if (color_of(sys, red) != red_color) {
      throw PreconditionError(format_address(sys, red) + " is not red");
    }
    std::vector<std::size_t> halves;
    EdgeAddress              a = red;
    while (!a.is_base() && color_of(sys, a.parent()) == red_color) {
      halves.push_back(a.last());
      a = a.parent();
    }
    Arc arc;
    if (a.is_base()) {
      arc.component = ComponentId::central();
      bool top      = a.base == base_top;
      arc.lo        = top ? DyadicRational(0) : DyadicRational(1, 1);
      arc.hi        = top ? DyadicRational(1, 1) : DyadicRational(1);
    } else {
      EdgeAddress creator = a.parent();
      bool        f       = inner_is_source(sys, creator);
      bool first_half     = (a.last() == blue_arc_two) == f;
      arc.component       = ComponentId::created_by(creator);
      arc.lo              = first_half ? DyadicRational(0) : DyadicRational(1, 1);
      arc.hi              = first_half ? DyadicRational(1, 1) : DyadicRational(1);
    }
    for (auto it = halves.rbegin(); it != halves.rend(); ++it) {
      auto mid = midpoint(arc.lo, arc.hi);
      (*it == red_first_half ? arc.hi : arc.lo) = mid;
    }
    return arc;
  }

  std::pair<EdgeAddress, EdgeAddress> boundary_reds(ReplacementSystem const& sys,
                                                    ComponentId const&       c) {
    if (c.is_central()) {
      return {EdgeAddress{base_top, {}}, EdgeAddress{base_bottom, {}}};
    }
    auto const& a = *c.creator;
    if (inner_is_source(sys, a)) {
      return {a.child(blue_arc_two), a.child(blue_arc_one)};
    }
    return {a.child(blue_arc_one), a.child(blue_arc_two)};
  }

  ComponentId ray_component(ReplacementSystem const& sys, EdgeAddress const& root) {
    if (root.is_base()) {
      return ComponentId::central();
    }
    return component_of_red(sys, root.parent());
  }

  DyadicRational ray_angle(ReplacementSystem const& sys, EdgeAddress const& root) {
    if (root.is_base()) {
      return root.base == base_right ? DyadicRational(0) : DyadicRational(1, 1);
    }
    auto arc = red_arc(sys, root.parent());
    return midpoint(arc.lo, arc.hi);
  }

  ////////////////////////////////////////////////////////////////////////
  // Lengths, extremes and derivatives
  ////////////////////////////////////////////////////////////////////////

  DyadicRational blue_edge_length(ReplacementSystem const& sys, EdgeAddress const& a) {
    require_airplane(sys);
    EdgeAddress root = ray_root(sys, a);
    return DyadicRational(1, static_cast<int>(a.depth() - root.depth()));
  }

  std::optional<ExtremeId> extreme_of_leaf(ReplacementSystem const& sys,
                                           EdgeAddress const&       leaf) {
    if (color_of(sys, leaf) != blue_color) {
      return std::nullopt;
    }
    EdgeAddress root = ray_root(sys, leaf);
    bool        f    = true;
    for (std::size_t i = root.depth(); i < leaf.depth(); ++i) {
      if (leaf.path[i] != outer_child(f)) {
        return std::nullopt;
      }
      f = child_orientation(f, leaf.path[i]);
    }
    return ExtremeId{root};
  }

  std::vector<ExtremeId> extremes(Expansion const& e) {
    auto const& sys = *e.system;
    require_airplane(sys);
    RealizedGraph            g   = realize_graph(e);
    std::vector<std::size_t> deg = vertex_degrees(g.graph);
    std::vector<ExtremeId>   out;
    for (std::size_t i = 0; i < g.graph.edges.size(); ++i) {
      auto const& edge = g.graph.edges[i];
      for (auto v : {edge.source, edge.target}) {
        if (deg[v] != 1) {
          continue;
        }
        auto p = extreme_of_leaf(sys, g.leaves[i]);
        if (!p) {
          throw InvariantError("degree-one vertex on a non-outer edge "
                               + format_address(sys, g.leaves[i]));
        }
        out.push_back(*p);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::optional<EdgeAddress> extreme_leaf(Expansion const& e, ExtremeId const& p) {
    EdgeAddress a = p.ray;
    bool        f = true;
    while (true) {
      auto it = std::lower_bound(e.leaves.begin(), e.leaves.end(), a);
      if (it == e.leaves.end() || !a.is_prefix_of(*it)) {
        return std::nullopt;
      }
      if (*it == a) {
        return a;
      }
      std::size_t k = outer_child(f);
      f             = child_orientation(f, k);
      a             = a.child(k);
    }
  }

  DerivativeValue extremal_derivative_at(GraphPairDiagram const& f, ExtremeId const& p) {
    auto const& sys = *f.system;
    require_airplane(sys);
    Expansion dom  = f.domain();
    auto      leaf = extreme_leaf(dom, p);
    if (!leaf) {
      return DerivativeValue{0};
    }
    auto const& img = f.cells.at(*leaf);
    auto d = static_cast<std::int64_t>(leaf->depth() - ray_root(sys, *leaf).depth());
    auto r = static_cast<std::int64_t>(img.target.depth() - ray_root(sys, img.target).depth());
    return DerivativeValue{r - d};
  }

  std::vector<std::pair<ExtremeId, DerivativeValue>> derivative_table(GraphPairDiagram const& f) {
    auto const& sys = *f.system;
    require_airplane(sys);
    std::set<ExtremeId> rays;
    for (auto const& [a, img] : f.cells) {
      if (color_of(sys, a) == blue_color) {
        rays.insert(ExtremeId{ray_root(sys, a)});
      }
    }
    std::vector<std::pair<ExtremeId, DerivativeValue>> out;
    for (auto const& p : rays) {
      out.emplace_back(p, extremal_derivative_at(f, p));
    }
    return out;
  }

  DerivativeValue global_derivative(GraphPairDiagram const& f) {
    DerivativeValue total;
    for (auto const& [p, v] : derivative_table(reduce(f))) {
      total.exponent += v.exponent;
    }
    return total;
  }

  bool is_in_commutator(GraphPairDiagram const& f) {
    return global_derivative(f).exponent == 0;
  }

  std::int64_t abelianization_image(GraphPairDiagram const& f) {
    return global_derivative(f).exponent;
  }

  SemidirectSplit semidirect_split(GraphPairDiagram const& f) {
    auto const&  eps  = airplane().table.get("epsilon");
    std::int64_t unit = abelianization_image(eps);
    std::int64_t a    = abelianization_image(f);
    if (unit == 0 || a % unit != 0) {
      throw InvariantError("derivative of f is not a power of the derivative of epsilon");
    }
    SemidirectSplit out;
    out.k = a / unit;
    out.c = compose(f, power(eps, -out.k));
    return out;
  }

  namespace {
    // True if some leaf of the diagram (either side) has a proper ancestor of
    // the given color.
    bool has_internal_of_color(GraphPairDiagram const& f, std::size_t color) {
      auto const& sys   = *f.system;
      auto        check = [&](EdgeAddress const& leaf) {
        std::size_t c = sys.base.edges[leaf.base].color;
        for (auto i : leaf.path) {
          if (c == color) {
            return true;
          }
          c = sys.rules[c].graph.edges[i].color;
        }
        return false;
      };
      for (auto const& [a, img] : f.cells) {
        if (check(a) || check(img.target)) {
          return true;
        }
      }
      return false;
    }
  }  // namespace

  bool is_in_rist_C0(GraphPairDiagram const& f) {
    require_airplane(*f.system);
    return !has_internal_of_color(reduce(f), blue_color);
  }

  bool is_in_rist_Hor(GraphPairDiagram const& f) {
    require_airplane(*f.system);
    return !has_internal_of_color(reduce(f), red_color);
  }

  bool is_in_E(GraphPairDiagram const& f) {
    for (auto const& [p, v] : derivative_table(reduce(f))) {
      if (v.exponent != 0) {
        return false;
      }
    }
    return true;
  }

  PLMap induced_boundary_map(GraphPairDiagram const& f) {
    if (!is_in_rist_C0(f)) {
      throw PreconditionError("not in the rigid stabilizer of the central component");
    }
    auto const&               sys = *f.system;
    GraphPairDiagram          r   = reduce(f);
    std::vector<PLMap::Point> pts;
    for (auto const& [a, img] : r.cells) {
      if (color_of(sys, a) != red_color) {
        continue;
      }
      Arc from = red_arc(sys, a);
      Arc to   = red_arc(sys, img.target);
      if (!from.component.is_central() || !to.component.is_central()) {
        throw InvariantError("central boundary cell mapped off the central component");
      }
      pts.emplace_back(from.lo, to.lo);
      pts.emplace_back(from.hi, to.hi);
    }
    return PLMap(PLDomain::circle, std::move(pts));
  }

  PLMap induced_hor_map(GraphPairDiagram const& f) {
    if (!is_in_rist_Hor(f)) {
      throw PreconditionError("not in the rigid stabilizer of the horizon");
    }
    auto const& sys = *f.system;
    // Horizon coordinates of the source and target of a horizontal blue cell.
    auto ends = [&sys](EdgeAddress const& a) {
      auto [lo, hi] = ray_interval(sys, a);
      bool f        = inner_is_source(sys, a);
      auto src      = f ? lo : hi;
      auto tgt      = f ? hi : lo;
      auto half     = DyadicRational(1, 1);
      if (a.base == base_right) {
        return std::pair{half + src.half(), half + tgt.half()};
      }
      return std::pair{half - src.half(), half - tgt.half()};
    };
    GraphPairDiagram          r = reduce(f);
    std::vector<PLMap::Point> pts;
    for (auto const& [a, img] : r.cells) {
      if (color_of(sys, a) != blue_color) {
        continue;
      }
      auto [s, t]   = ends(a);
      auto [s2, t2] = ends(img.target);
      pts.emplace_back(s, img.reversed ? t2 : s2);
      pts.emplace_back(t, img.reversed ? s2 : t2);
    }
    return PLMap(PLDomain::interval, std::move(pts));
  }

}  // namespace airframe
