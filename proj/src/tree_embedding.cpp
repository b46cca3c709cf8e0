// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems

#include "airframe/tree_embedding.hpp"

#include <algorithm>
#include <set>

#include "airframe/systems.hpp"

namespace airframe {

  namespace {
    DyadicRational const zero{0};
    DyadicRational const half{1, 1};
    DyadicRational const one{1};

    // Basilica base edges.
    constexpr std::size_t top_edge    = 0;
    constexpr std::size_t bottom_edge = 1;
    constexpr std::size_t loop_a      = 2;
    constexpr std::size_t loop_b      = 3;
    constexpr std::size_t new_loop    = 2;

    void require_basilica(ReplacementSystem const& sys) {
      if (sys.name != "basilica") {
        throw PreconditionError("expected the basilica system, got " + sys.name);
      }
    }

    // The topmost edge of the component containing `a` that still lies in
    // that component.
    EdgeAddress component_root(EdgeAddress a) {
      while (!a.is_base() && a.last() != new_loop) {
        a = a.parent();
      }
      return a;
    }

    // Interval of `a` on its component, in the edge-direction coordinate.
    std::pair<DyadicRational, DyadicRational> edge_interval(EdgeAddress const& a) {
      EdgeAddress    root = component_root(a);
      DyadicRational lo   = zero;
      DyadicRational hi   = one;
      if (root.is_base() && root.base == top_edge) {
        lo = half;
      } else if (root.is_base() && root.base == bottom_edge) {
        hi = half;
      }
      for (std::size_t i = root.depth(); i < a.depth(); ++i) {
        auto mid = midpoint(lo, hi);
        (a.path[i] == 0 ? hi : lo) = mid;
      }
      return {lo, hi};
    }

    DyadicRational attachment(BasilicaComponent const& c) {
      EdgeAddress const& x = *c.loop;
      if (x.is_base()) {
        return x.base == loop_b ? zero : half;
      }
      auto [lo, hi] = edge_interval(x.parent());
      return midpoint(lo, hi);
    }

    DyadicRational flip(DyadicRational const& x) { return (one - x).mod1(); }

    std::string canonical_airplane_letter(std::string const& name) {
      auto const& table = airplane().table;
      if (!table.contains(name)) {
        throw PreconditionError("unknown generator " + name);
      }
      auto const& c = table.canonical(name);
      if (c == "epsilon") {
        throw PreconditionError("the tree action uses alpha, beta, gamma and delta only");
      }
      return c;
    }

    FrakCVertex frak_image(GraphPairDiagram const& f, FrakCVertex const& v) {
      auto const& sys = *f.system;
      auto        img = frak_c_membership(sys, map_component(f, frak_c_component(sys, v)));
      if (!img) {
        throw InvariantError("image of a tree vertex left the component family");
      }
      return *img;
    }
  }  // namespace

  std::string format_vertex(TreeVertex const& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i == 0 ? "" : ",") + v[i].str();
    }
    return out + "]";
  }

  ////////////////////////////////////////////////////////////////////////
  // Airplane side
  ////////////////////////////////////////////////////////////////////////

  std::optional<FrakCVertex> frak_c_membership(ReplacementSystem const& sys, ComponentId const& c) {
    FrakCVertex out;
    for (auto const& [angle, position] : component_path(sys, c)) {
      auto gap = one - position;
      if (gap.numerator() != 1) {
        return std::nullopt;
      }
      out.push_back(FrakCStep{angle, gap.exponent()});
    }
    return out;
  }

  ComponentId frak_c_component(ReplacementSystem const& sys, FrakCVertex const& v) {
    ComponentPath p;
    for (auto const& [angle, k] : v) {
      if (k < 1 || k > 60) {
        throw InputError("step index out of range: " + std::to_string(k));
      }
      p.push_back(PathStep{angle, DyadicRational((std::int64_t(1) << k) - 1, k)});
    }
    return path_to_component(sys, p);
  }

  TreeVertex to_tree_vertex(FrakCVertex const& v) {
    TreeVertex out;
    for (auto const& [angle, k] : v) {
      out.push_back(angle);
      out.insert(out.end(), static_cast<std::size_t>(k - 1), half);
    }
    return out;
  }

  FrakCVertex from_tree_vertex(TreeVertex const& v) {
    FrakCVertex out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < zero || v[i] >= one || (i > 0 && v[i] == zero)) {
        throw InputError("angle " + v[i].str() + " is out of range at index " + std::to_string(i));
      }
      if (i > 0 && v[i] == half) {
        ++out.back().k;
      } else {
        out.push_back(FrakCStep{v[i], 1});
      }
    }
    return out;
  }

  FrakCVertex airplane_tree_action(GroupWord const& w, FrakCVertex const& v) {
    GroupWord canonical;
    for (auto const& [name, e] : w) {
      canonical.emplace_back(canonical_airplane_letter(name), e);
    }
    return frak_image(evaluate_word(airplane().table, canonical), v);
  }

  ////////////////////////////////////////////////////////////////////////
  // Basilica side
  ////////////////////////////////////////////////////////////////////////

  BasilicaComponent basilica_component_of(ReplacementSystem const& sys, EdgeAddress const& a) {
    require_basilica(sys);
    EdgeAddress root = component_root(a);
    if (root.is_base() && (root.base == top_edge || root.base == bottom_edge)) {
      return BasilicaComponent{};
    }
    return BasilicaComponent{root};
  }

  BasilicaComponent basilica_parent(ReplacementSystem const& sys, BasilicaComponent const& c) {
    if (c.is_central()) {
      throw PreconditionError("the central component has no parent");
    }
    if (c.loop->is_base()) {
      return BasilicaComponent{};
    }
    return basilica_component_of(sys, c.loop->parent());
  }

  BasilicaComponent map_basilica_component(GraphPairDiagram const& f, BasilicaComponent const& c) {
    auto const& sys  = *f.system;
    require_basilica(sys);
    EdgeAddress edge = c.is_central() ? EdgeAddress{top_edge, {}} : *c.loop;
    while (true) {
      if (auto img = image_of(f, edge)) {
        return basilica_component_of(sys, img->target);
      }
      edge = edge.child(0);
    }
  }

  TreeVertex basilica_vertex(ReplacementSystem const& sys, BasilicaComponent const& c) {
    TreeVertex        out;
    BasilicaComponent cur = c;
    while (!cur.is_central()) {
      out.push_back(flip(attachment(cur)));
      cur = basilica_parent(sys, cur);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  BasilicaComponent basilica_component(ReplacementSystem const& sys, TreeVertex const& v) {
    require_basilica(sys);
    BasilicaComponent cur;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < zero || v[i] >= one || (i > 0 && v[i] == zero)) {
        throw InputError("angle " + v[i].str() + " is out of range at index " + std::to_string(i));
      }
      DyadicRational psi = flip(v[i]);
      if (cur.is_central() && (psi == zero || psi == half)) {
        cur = BasilicaComponent{EdgeAddress{psi == zero ? loop_b : loop_a, {}}};
        continue;
      }
      EdgeAddress    edge;
      DyadicRational lo = zero;
      DyadicRational hi = one;
      if (cur.is_central()) {
        edge = EdgeAddress{psi < half ? bottom_edge : top_edge, {}};
        (psi < half ? hi : lo) = half;
      } else {
        edge = *cur.loop;
      }
      while (true) {
        auto mid = midpoint(lo, hi);
        if (psi == mid) {
          break;
        }
        edge                   = edge.child(psi < mid ? 0 : 1);
        (psi < mid ? hi : lo)  = mid;
      }
      cur = BasilicaComponent{edge.child(new_loop)};
    }
    return cur;
  }

  TreeVertex basilica_tree_action(GroupWord const& w, TreeVertex const& v) {
    auto const& b = basilica();
    auto        f = evaluate_word(b.table, w);
    return basilica_vertex(*b.system, map_basilica_component(f, basilica_component(*b.system, v)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Intertwining
  ////////////////////////////////////////////////////////////////////////

  std::vector<TreeVertex> truncated_tree(std::size_t depth, int bound) {
    if (bound < 2 || (bound & (bound - 1)) != 0) {
      throw InputError("denominator bound must be a power of 2 and at least 2");
    }
    int e = 0;
    while ((1 << e) < bound) {
      ++e;
    }
    std::vector<TreeVertex> out{TreeVertex{}};
    std::vector<TreeVertex> layer{TreeVertex{}};
    for (std::size_t d = 1; d <= depth; ++d) {
      std::vector<TreeVertex> next;
      for (auto const& v : layer) {
        for (int j = (d == 1 ? 0 : 1); j < bound; ++j) {
          TreeVertex w = v;
          w.push_back(DyadicRational(j, e));
          next.push_back(std::move(w));
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  }

  GeneratorPairing canonical_pairing() {
    return {{"alpha", "t1"}, {"beta", "t2"}, {"gamma", "t3"}, {"delta", "t4"}};
  }

  GeneratorPairing shuffled_pairing() {
    return {{"alpha", "t2"}, {"beta", "t1"}, {"gamma", "t3"}, {"delta", "t4"}};
  }

  IntertwineReport intertwine_check(std::size_t depth, int bound, GeneratorPairing const& pairing) {
    auto const& a = airplane();
    auto const& b = basilica();
    IntertwineReport report;
    auto             vertices = truncated_tree(depth, bound);
    report.vertices           = vertices.size();
    for (auto const& [g, h] : pairing) {
      std::string gname = canonical_airplane_letter(g);
      if (!b.table.contains(h)) {
        throw PreconditionError("unknown generator " + h);
      }
      for (int sign : {1, -1}) {
        auto const& gd = sign > 0 ? a.table.get(gname) : a.table.get_inverse(gname);
        auto const& hd = sign > 0 ? b.table.get(h) : b.table.get_inverse(h);
        for (auto const& v : vertices) {
          ++report.checks;
          std::string label = g + (sign > 0 ? "" : "^-1") + " / " + h + (sign > 0 ? "" : "^-1")
                              + " at " + format_vertex(v);
          auto left = frak_c_membership(*a.system,
                                        map_component(gd, frak_c_component(*a.system, from_tree_vertex(v))));
          if (!left) {
            report.mismatches.push_back(label + ": image left the component family");
            continue;
          }
          TreeVertex lv = to_tree_vertex(*left);
          TreeVertex rv = basilica_vertex(*b.system, map_basilica_component(hd, basilica_component(*b.system, v)));
          if (lv != rv) {
            report.mismatches.push_back(label + ": " + format_vertex(lv) + " vs " + format_vertex(rv));
          }
        }
      }
    }
    return report;
  }

}  // namespace airframe
