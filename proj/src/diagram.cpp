// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems

#include "airframe/diagram.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace airframe {

  namespace {
    bool same_system(SystemRef const& a, SystemRef const& b) {
      return a == b || (a && b && a->name == b->name);
    }

    EdgeAddress append(EdgeAddress a,
                       std::vector<std::size_t>::const_iterator first,
                       std::vector<std::size_t>::const_iterator last) {
      a.path.insert(a.path.end(), first, last);
      return a;
    }

    // Image of the cell `image.target`'s descendant along `suffix`.
    CellImage descend(ReplacementSystem const&        sys,
                      CellImage const&                image,
                      std::vector<std::size_t> const& suffix,
                      std::size_t                     from) {
      if (from == suffix.size()) {
        return image;
      }
      std::size_t first = suffix[from];
      if (image.reversed) {
        first = sys.reversal(color_of(sys, image.target)).at(first);
      }
      EdgeAddress target = image.target.child(first);
      target             = append(std::move(target), suffix.begin() + from + 1, suffix.end());
      return CellImage{std::move(target), false};
    }

    std::size_t inverse_index(std::vector<std::size_t> const& sigma, std::size_t j) {
      auto it = std::find(sigma.begin(), sigma.end(), j);
      if (it == sigma.end()) {
        throw InvariantError("reversal permutation is not a bijection");
      }
      return static_cast<std::size_t>(it - sigma.begin());
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // GraphPairDiagram
  ////////////////////////////////////////////////////////////////////////

  Expansion GraphPairDiagram::domain() const {
    Expansion e{system, {}};
    e.leaves.reserve(cells.size());
    for (auto const& [a, img] : cells) {
      e.leaves.push_back(a);
    }
    return e;
  }

  Expansion GraphPairDiagram::range() const {
    Expansion e{system, {}};
    e.leaves.reserve(cells.size());
    for (auto const& [a, img] : cells) {
      e.leaves.push_back(img.target);
    }
    std::sort(e.leaves.begin(), e.leaves.end());
    return e;
  }

  bool GraphPairDiagram::operator==(GraphPairDiagram const& that) const {
    return same_system(system, that.system) && cells == that.cells;
  }

  bool validate(GraphPairDiagram const& d) {
    if (!d.system || d.cells.empty()) {
      return false;
    }
    auto const& sys = *d.system;
    Expansion   dom = d.domain();
    Expansion   ran = d.range();
    if (!is_valid_expansion(dom) || !is_valid_expansion(ran)) {
      return false;
    }
    if (std::adjacent_find(ran.leaves.begin(), ran.leaves.end()) != ran.leaves.end()) {
      return false;
    }
    for (auto const& [a, img] : d.cells) {
      std::size_t c = color_of(sys, a);
      if (c != color_of(sys, img.target)) {
        return false;
      }
      if (img.reversed && sys.reversal(c).empty()) {
        return false;
      }
    }
    RealizedGraph gd = realize_graph(dom);
    RealizedGraph gr = realize_graph(ran);
    if (gd.graph.vertices.size() != gr.graph.vertices.size()) {
      return false;
    }
    std::map<EdgeAddress, std::size_t> range_index;
    for (std::size_t i = 0; i < gr.leaves.size(); ++i) {
      range_index[gr.leaves[i]] = i;
    }
    constexpr std::size_t    unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> vmap(gd.graph.vertices.size(), unset);
    auto bind = [&vmap](std::size_t from, std::size_t to) {
      if (vmap[from] == unset) {
        vmap[from] = to;
        return true;
      }
      return vmap[from] == to;
    };
    for (std::size_t i = 0; i < gd.leaves.size(); ++i) {
      auto const& img = d.cells.at(gd.leaves[i]);
      auto const& de  = gd.graph.edges[i];
      auto const& re  = gr.graph.edges[range_index.at(img.target)];
      std::size_t s   = img.reversed ? re.target : re.source;
      std::size_t t   = img.reversed ? re.source : re.target;
      if (!bind(de.source, s) || !bind(de.target, t)) {
        return false;
      }
    }
    std::vector<bool> hit(gr.graph.vertices.size(), false);
    for (auto v : vmap) {
      if (v == unset || hit[v]) {
        return false;
      }
      hit[v] = true;
    }
    return true;
  }

  GraphPairDiagram identity(SystemRef const& sys) {
    GraphPairDiagram d{sys, {}};
    for (std::size_t i = 0; i < sys->base.edges.size(); ++i) {
      EdgeAddress a{i, {}};
      d.cells.emplace(a, CellImage{a, false});
    }
    return d;
  }

  std::optional<CellImage> image_of(GraphPairDiagram const& d, EdgeAddress const& a) {
    auto it = d.cells.upper_bound(a);
    if (it == d.cells.begin()) {
      return std::nullopt;
    }
    --it;
    if (!it->first.is_prefix_of(a)) {
      return std::nullopt;
    }
    return descend(*d.system, it->second, a.path, it->first.depth());
  }

  GraphPairDiagram expand_pair(GraphPairDiagram const& d, EdgeAddress const& a) {
    auto it = d.cells.find(a);
    if (it == d.cells.end()) {
      throw PreconditionError("address " + format_address(*d.system, a)
                              + " is not a domain leaf");
    }
    GraphPairDiagram out  = d;
    CellImage        img  = it->second;
    out.cells.erase(a);
    std::size_t n = d.system->child_count(color_of(*d.system, a));
    for (std::size_t i = 0; i < n; ++i) {
      out.cells.emplace(a.child(i), descend(*d.system, img, {i}, 0));
    }
    return out;
  }

  GraphPairDiagram refine_domain(GraphPairDiagram const& d, Expansion const& target) {
    GraphPairDiagram out{d.system, {}};
    for (auto const& [a, img] : d.cells) {
      auto under = leaves_under(target.leaves, a);
      if (under.empty()) {
        throw PreconditionError("target expansion does not refine the domain");
      }
      for (auto const& leaf : under) {
        out.cells.emplace(leaf, descend(*d.system, img, leaf.path, a.depth()));
      }
    }
    return out;
  }

  GraphPairDiagram refine_range(GraphPairDiagram const& d, Expansion const& target) {
    auto const&      sys = *d.system;
    GraphPairDiagram out{d.system, {}};
    for (auto const& [a, img] : d.cells) {
      auto under = leaves_under(target.leaves, img.target);
      if (under.empty()) {
        throw PreconditionError("target expansion does not refine the range");
      }
      for (auto const& leaf : under) {
        std::size_t depth = img.target.depth();
        if (leaf.depth() == depth) {
          out.cells.emplace(a, img);
          continue;
        }
        std::size_t first = leaf.path[depth];
        if (img.reversed) {
          first = inverse_index(sys.reversal(color_of(sys, img.target)), first);
        }
        EdgeAddress source = a.child(first);
        source = append(std::move(source), leaf.path.begin() + depth + 1, leaf.path.end());
        out.cells.emplace(std::move(source), CellImage{leaf, false});
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reduction
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool try_collapse(ReplacementSystem const&          sys,
                      std::map<EdgeAddress, CellImage>& cells,
                      EdgeAddress const&                p) {
      std::size_t c = color_of(sys, p);
      std::size_t n = sys.child_count(c);
      std::vector<std::map<EdgeAddress, CellImage>::iterator> kids;
      kids.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        auto it = cells.find(p.child(i));
        if (it == cells.end() || it->second.reversed || it->second.target.is_base()) {
          return false;
        }
        kids.push_back(it);
      }
      EdgeAddress q = kids[0]->second.target.parent();
      bool        straight = true;
      bool        flipped  = !sys.reversal(c).empty();
      auto const& sigma    = sys.reversal(c);
      for (std::size_t i = 0; i < n; ++i) {
        auto const& t = kids[i]->second.target;
        if (t.depth() != q.depth() + 1 || !q.is_prefix_of(t)) {
          return false;
        }
        straight = straight && t.last() == i;
        flipped  = flipped && t.last() == sigma[i];
      }
      if (!straight && !flipped) {
        return false;
      }
      for (auto it : kids) {
        cells.erase(it);
      }
      cells.emplace(p, CellImage{q, !straight});
      return true;
    }

    GraphPairDiagram reduce_impl(GraphPairDiagram const&      d,
                                 std::optional<std::uint64_t> seed) {
      auto const&      sys = *d.system;
      GraphPairDiagram out = d;
      std::mt19937_64  rng(seed.value_or(0));
      while (true) {
        std::vector<EdgeAddress> sites;
        for (auto const& [a, img] : out.cells) {
          if (!a.is_base() && a.last() == 0) {
            sites.push_back(a.parent());
          }
        }
        if (seed) {
          std::shuffle(sites.begin(), sites.end(), rng);
        }
        bool changed = false;
        for (auto const& p : sites) {
          changed = try_collapse(sys, out.cells, p) || changed;
        }
        if (!changed) {
          return out;
        }
      }
    }
  }  // namespace

  GraphPairDiagram reduce(GraphPairDiagram const& d) {
    return reduce_impl(d, std::nullopt);
  }

  GraphPairDiagram reduce_shuffled(GraphPairDiagram const& d, std::uint64_t seed) {
    return reduce_impl(d, seed);
  }

  bool is_reduced(GraphPairDiagram const& d) {
    return reduce(d) == d;
  }

  ////////////////////////////////////////////////////////////////////////
  // Group operations
  ////////////////////////////////////////////////////////////////////////

  GraphPairDiagram compose(GraphPairDiagram const& f, GraphPairDiagram const& g) {
    if (!same_system(f.system, g.system)) {
      throw PreconditionError("cannot compose diagrams over different systems");
    }
    Expansion        mid = common_refinement(g.range(), f.domain());
    GraphPairDiagram g2  = refine_range(g, mid);
    GraphPairDiagram f2  = refine_domain(f, mid);
    GraphPairDiagram out{g.system, {}};
    for (auto const& [a, first] : g2.cells) {
      auto const& second = f2.cells.at(first.target);
      out.cells.emplace_hint(out.cells.end(),
                             a,
                             CellImage{second.target, first.reversed != second.reversed});
    }
    return reduce(out);
  }

  GraphPairDiagram invert(GraphPairDiagram const& f) {
    GraphPairDiagram out{f.system, {}};
    for (auto const& [a, img] : f.cells) {
      out.cells.emplace(img.target, CellImage{a, img.reversed});
    }
    return out;
  }

  GraphPairDiagram power(GraphPairDiagram const& f, std::int64_t k) {
    GraphPairDiagram base   = k < 0 ? invert(f) : f;
    std::uint64_t    n      = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
    GraphPairDiagram result = identity(f.system);
    while (n > 0) {
      if (n & 1U) {
        result = compose(base, result);
      }
      n >>= 1U;
      if (n > 0) {
        base = compose(base, base);
      }
    }
    return result;
  }

  bool equals(GraphPairDiagram const& f, GraphPairDiagram const& g) {
    return same_system(f.system, g.system) && reduce(f).cells == reduce(g).cells;
  }

  bool is_identity(GraphPairDiagram const& f) {
    return equals(f, identity(f.system));
  }

  std::optional<std::size_t> order_up_to(GraphPairDiagram const& f, std::size_t n) {
    if (n == 0) {
      throw PreconditionError("order bound must be positive");
    }
    GraphPairDiagram acc = reduce(f);
    for (std::size_t k = 1; k <= n; ++k) {
      if (is_identity(acc)) {
        return k;
      }
      acc = compose(f, acc);
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Generator tables and words
  ////////////////////////////////////////////////////////////////////////

  void GeneratorTable::add(std::string name, GraphPairDiagram d, std::vector<std::string> aliases) {
    if (contains(name)) {
      throw PreconditionError("duplicate generator name " + name);
    }
    GraphPairDiagram r = reduce(d);
    _inverses.emplace(name, invert(r));
    _diagrams.emplace(name, std::move(r));
    _alias[name] = name;
    for (auto& alias : aliases) {
      if (contains(alias)) {
        throw PreconditionError("duplicate generator alias " + alias);
      }
      _alias[alias] = name;
    }
    _names.push_back(std::move(name));
  }

  bool GeneratorTable::contains(std::string const& name) const {
    return _alias.count(name) != 0;
  }

  std::string const& GeneratorTable::canonical(std::string const& name) const {
    auto it = _alias.find(name);
    if (it == _alias.end()) {
      throw InputError("unknown generator \"" + name + "\"");
    }
    return it->second;
  }

  GraphPairDiagram const& GeneratorTable::get(std::string const& name) const {
    return _diagrams.at(canonical(name));
  }

  GraphPairDiagram const& GeneratorTable::get_inverse(std::string const& name) const {
    return _inverses.at(canonical(name));
  }

  GraphPairDiagram evaluate_word(GeneratorTable const& table, GroupWord const& w) {
    GraphPairDiagram result = identity(table.system());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      auto const& [name, e] = *it;
      auto const& g         = e >= 0 ? table.get(name) : table.get_inverse(name);
      for (std::int64_t k = 0; k < (e >= 0 ? e : -e); ++k) {
        result = compose(g, result);
      }
    }
    return result;
  }

  GroupWord inverse_word(GroupWord const& w) {
    GroupWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.emplace_back(it->first, -it->second);
    }
    return out;
  }

  std::string format_word(GroupWord const& w) {
    std::string out;
    for (auto const& [name, e] : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += name;
      if (e != 1) {
        out += '^' + std::to_string(e);
      }
    }
    return out;
  }

}  // namespace airframe
