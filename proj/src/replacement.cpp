// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems

#include "airframe/replacement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace airframe {

  ////////////////////////////////////////////////////////////////////////
  // ReplacementSystem
  ////////////////////////////////////////////////////////////////////////

  void ReplacementSystem::prepare() {
    _reversal.assign(rules.size(), {});
    for (std::size_t c = 0; c < rules.size(); ++c) {
      if (!rules[c].reversible) {
        continue;
      }
      if (auto sigma = find_reversal(rules[c])) {
        _reversal[c] = std::move(*sigma);
      }
    }
  }

  std::size_t ReplacementSystem::color_index(std::string const& color) const {
    auto it = std::find(colors.begin(), colors.end(), color);
    if (it == colors.end()) {
      throw InputError("unknown color \"" + color + "\" in system " + name);
    }
    return static_cast<std::size_t>(it - colors.begin());
  }

  std::size_t ReplacementSystem::base_edge_index(std::string const& id) const {
    for (std::size_t i = 0; i < base.edges.size(); ++i) {
      if (base.edges[i].id == id) {
        return i;
      }
    }
    throw InputError("unknown base edge \"" + id + "\" in system " + name);
  }

  std::size_t ReplacementSystem::child_count(std::size_t color) const {
    return rules.at(color).graph.edges.size();
  }

  std::vector<std::size_t> const&
  ReplacementSystem::reversal(std::size_t color) const {
    static std::vector<std::size_t> const none;
    return color < _reversal.size() ? _reversal[color] : none;
  }

  namespace {
    void check_graph(Graph const&                       g,
                     std::size_t                        ncolors,
                     std::string const&                 where,
                     std::vector<std::string>&          problems) {
      std::set<std::string> ids;
      for (auto const& e : g.edges) {
        if (!ids.insert(e.id).second) {
          problems.push_back(where + ": duplicate edge id " + e.id);
        }
        if (e.source >= g.vertices.size() || e.target >= g.vertices.size()) {
          problems.push_back(where + ": edge " + e.id
                             + " has a missing endpoint");
        }
        if (e.color >= ncolors) {
          problems.push_back(where + ": edge " + e.id + " has unknown color");
        }
      }
    }
  }  // namespace

  ValidationReport validate_system(ReplacementSystem const& sys) {
    ValidationReport report;
    auto&            problems = report.problems;
    std::size_t      ncolors  = sys.colors.size();
    {
      std::set<std::string> seen(sys.colors.begin(), sys.colors.end());
      if (seen.size() != ncolors) {
        problems.push_back("color ids are not unique");
      }
    }
    if (sys.base.edges.empty()) {
      problems.push_back("base graph has no edges");
    }
    check_graph(sys.base, ncolors, "base", problems);
    if (sys.rules.size() != ncolors) {
      problems.push_back("expected one rule per color, found "
                         + std::to_string(sys.rules.size()) + " rules for "
                         + std::to_string(ncolors) + " colors");
    }
    for (std::size_t c = 0; c < sys.rules.size(); ++c) {
      auto const& rule  = sys.rules[c];
      std::string where = "rule " + (c < ncolors ? sys.colors[c] : std::to_string(c));
      if (rule.graph.edges.empty()) {
        problems.push_back(where + ": rule graph is empty");
      }
      check_graph(rule.graph, ncolors, where, problems);
      if (rule.initial >= rule.graph.vertices.size()
          || rule.terminal >= rule.graph.vertices.size()) {
        problems.push_back(where + ": initial or terminal vertex missing");
      }
      if (rule.initial == rule.terminal) {
        problems.push_back(where + ": initial and terminal vertices coincide");
      }
      if (rule.reversible && !find_reversal(rule)) {
        problems.push_back(where
                           + ": marked reversible but has no reversing automorphism");
      }
    }
    report.ok = problems.empty();
    return report;
  }

  std::optional<std::vector<std::size_t>>
  find_reversal(ReplacementRule const& rule) {
    auto const& g = rule.graph;
    std::size_t n = g.vertices.size();
    if (rule.initial >= n || rule.terminal >= n || rule.initial == rule.terminal) {
      return std::nullopt;
    }
    std::vector<std::size_t> inner;
    for (std::size_t v = 0; v < n; ++v) {
      if (v != rule.initial && v != rule.terminal) {
        inner.push_back(v);
      }
    }
    std::vector<std::size_t> images = inner;
    std::sort(images.begin(), images.end());
    do {
      std::vector<std::size_t> pi(n);
      pi[rule.initial]  = rule.terminal;
      pi[rule.terminal] = rule.initial;
      for (std::size_t i = 0; i < inner.size(); ++i) {
        pi[inner[i]] = images[i];
      }
      std::vector<std::size_t> sigma(g.edges.size());
      std::vector<bool>        used(g.edges.size(), false);
      bool                     ok = true;
      for (std::size_t i = 0; i < g.edges.size() && ok; ++i) {
        auto const& e     = g.edges[i];
        bool        found = false;
        for (std::size_t j = 0; j < g.edges.size(); ++j) {
          auto const& f = g.edges[j];
          if (!used[j] && f.color == e.color && f.source == pi[e.source]
              && f.target == pi[e.target]) {
            sigma[i] = j;
            used[j]  = true;
            found    = true;
            break;
          }
        }
        ok = found;
      }
      if (ok) {
        return sigma;
      }
    } while (std::next_permutation(images.begin(), images.end()));
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // EdgeAddress
  ////////////////////////////////////////////////////////////////////////

  EdgeAddress EdgeAddress::child(std::size_t i) const {
    EdgeAddress out = *this;
    out.path.push_back(i);
    return out;
  }

  EdgeAddress EdgeAddress::parent() const {
    if (path.empty()) {
      throw PreconditionError("a base edge has no parent");
    }
    EdgeAddress out = *this;
    out.path.pop_back();
    return out;
  }

  bool EdgeAddress::is_prefix_of(EdgeAddress const& that) const noexcept {
    return base == that.base && path.size() <= that.path.size()
           && std::equal(path.begin(), path.end(), that.path.begin());
  }

  std::string format_address(ReplacementSystem const& sys, EdgeAddress const& a) {
    std::string out = sys.base.edges.at(a.base).id;
    for (std::size_t i = 0; i < a.path.size(); ++i) {
      out += (i == 0 ? '.' : '-');
      out += std::to_string(a.path[i]);
    }
    return out;
  }

  EdgeAddress parse_address(ReplacementSystem const& sys, std::string const& text) {
    EdgeAddress a;
    auto        dot = text.find('.');
    a.base          = sys.base_edge_index(text.substr(0, dot));
    if (dot != std::string::npos) {
      std::string rest = text.substr(dot + 1);
      std::size_t pos  = 0;
      while (true) {
        auto        dash = rest.find('-', pos);
        std::string part = rest.substr(pos, dash == std::string::npos ? dash : dash - pos);
        if (part.empty()
            || !std::all_of(part.begin(), part.end(), [](char ch) {
                 return ch >= '0' && ch <= '9';
               })) {
          throw InputError("malformed address \"" + text + "\"");
        }
        a.path.push_back(std::stoul(part));
        if (dash == std::string::npos) {
          break;
        }
        pos = dash + 1;
      }
    }
    if (!is_valid_address(sys, a)) {
      throw InputError("child index out of range in address \"" + text + "\"");
    }
    return a;
  }

  std::size_t color_of(ReplacementSystem const& sys, EdgeAddress const& a) {
    std::size_t color = sys.base.edges.at(a.base).color;
    for (auto i : a.path) {
      color = sys.rules.at(color).graph.edges.at(i).color;
    }
    return color;
  }

  bool is_valid_address(ReplacementSystem const& sys, EdgeAddress const& a) {
    if (a.base >= sys.base.edges.size()) {
      return false;
    }
    std::size_t color = sys.base.edges[a.base].color;
    for (auto i : a.path) {
      if (color >= sys.rules.size() || i >= sys.rules[color].graph.edges.size()) {
        return false;
      }
      color = sys.rules[color].graph.edges[i].color;
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Expansion
  ////////////////////////////////////////////////////////////////////////

  bool Expansion::contains(EdgeAddress const& a) const {
    return std::binary_search(leaves.begin(), leaves.end(), a);
  }

  std::vector<EdgeAddress> leaves_under(std::vector<EdgeAddress> const& sorted,
                                        EdgeAddress const&              a) {
    std::vector<EdgeAddress> out;
    for (auto it = std::lower_bound(sorted.begin(), sorted.end(), a);
         it != sorted.end() && a.is_prefix_of(*it);
         ++it) {
      out.push_back(*it);
    }
    return out;
  }

  Expansion base_expansion(SystemRef const& sys) {
    Expansion e{sys, {}};
    for (std::size_t i = 0; i < sys->base.edges.size(); ++i) {
      e.leaves.push_back(EdgeAddress{i, {}});
    }
    return e;
  }

  Expansion expand_edge(Expansion const& e, EdgeAddress const& a) {
    auto it = std::lower_bound(e.leaves.begin(), e.leaves.end(), a);
    if (it == e.leaves.end() || *it != a) {
      throw PreconditionError("address " + format_address(*e.system, a)
                              + " is not a leaf of the expansion");
    }
    Expansion   out{e.system, {}};
    std::size_t n = e.system->child_count(color_of(*e.system, a));
    out.leaves.reserve(e.leaves.size() + n - 1);
    out.leaves.insert(out.leaves.end(), e.leaves.begin(), it);
    for (std::size_t i = 0; i < n; ++i) {
      out.leaves.push_back(a.child(i));
    }
    out.leaves.insert(out.leaves.end(), it + 1, e.leaves.end());
    return out;
  }

  Expansion full_expansion(SystemRef const& sys, std::size_t rounds) {
    Expansion e = base_expansion(sys);
    for (std::size_t r = 0; r < rounds; ++r) {
      Expansion next{sys, {}};
      for (auto const& leaf : e.leaves) {
        std::size_t n = sys->child_count(color_of(*sys, leaf));
        for (std::size_t i = 0; i < n; ++i) {
          next.leaves.push_back(leaf.child(i));
        }
      }
      e = std::move(next);
    }
    return e;
  }

  Expansion common_refinement(Expansion const& e1, Expansion const& e2) {
    if (e1.system != e2.system
        && (!e1.system || !e2.system || e1.system->name != e2.system->name)) {
      throw PreconditionError("expansions belong to different systems");
    }
    std::vector<EdgeAddress> merged;
    merged.reserve(e1.leaves.size() + e2.leaves.size());
    std::set_union(e1.leaves.begin(),
                   e1.leaves.end(),
                   e2.leaves.begin(),
                   e2.leaves.end(),
                   std::back_inserter(merged));
    Expansion out{e1.system, {}};
    for (std::size_t i = 0; i < merged.size(); ++i) {
      // Strict descendants sort immediately after their ancestor.
      if (i + 1 < merged.size() && merged[i].is_prefix_of(merged[i + 1])) {
        continue;
      }
      out.leaves.push_back(merged[i]);
    }
    return out;
  }

  bool is_valid_expansion(Expansion const& e) {
    auto const& sys = *e.system;
    if (!std::is_sorted(e.leaves.begin(), e.leaves.end())
        || std::adjacent_find(e.leaves.begin(), e.leaves.end()) != e.leaves.end()) {
      return false;
    }
    for (auto const& a : e.leaves) {
      if (!is_valid_address(sys, a)) {
        return false;
      }
    }
    // Rebuild the tree bottom-up: collapse the deepest complete sibling sets
    // until only base edges remain. Any leftover node means an incomplete
    // child set or an ancestor/descendant clash.
    std::set<EdgeAddress> nodes(e.leaves.begin(), e.leaves.end());
    while (true) {
      std::size_t deepest = 0;
      for (auto const& a : nodes) {
        deepest = std::max(deepest, a.depth());
      }
      if (deepest == 0) {
        break;
      }
      std::set<EdgeAddress>              next;
      std::map<EdgeAddress, std::size_t> counts;
      for (auto const& a : nodes) {
        if (a.depth() < deepest) {
          next.insert(a);
        } else {
          ++counts[a.parent()];
        }
      }
      for (auto const& [p, k] : counts) {
        if (next.count(p) != 0 || k != sys.child_count(color_of(sys, p))) {
          return false;
        }
        next.insert(p);
      }
      nodes = std::move(next);
    }
    return nodes.size() == sys.base.edges.size();
  }

  ////////////////////////////////////////////////////////////////////////
  // Realization
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Realizer {
      ReplacementSystem const&        sys;
      std::set<EdgeAddress> const&    internal;
      std::size_t                     next_vertex;
      std::vector<EdgeAddress>        leaves;
      std::vector<std::size_t>        sources;
      std::vector<std::size_t>        targets;

      void visit(EdgeAddress const& a, std::size_t src, std::size_t tgt) {
        if (internal.count(a) == 0) {
          leaves.push_back(a);
          sources.push_back(src);
          targets.push_back(tgt);
          return;
        }
        auto const&              rule = sys.rules[color_of(sys, a)];
        std::vector<std::size_t> image(rule.graph.vertices.size());
        for (std::size_t v = 0; v < image.size(); ++v) {
          if (v == rule.initial) {
            image[v] = src;
          } else if (v == rule.terminal) {
            image[v] = tgt;
          } else {
            image[v] = next_vertex++;
          }
        }
        for (std::size_t i = 0; i < rule.graph.edges.size(); ++i) {
          auto const& e = rule.graph.edges[i];
          visit(a.child(i), image[e.source], image[e.target]);
        }
      }
    };
  }  // namespace

  RealizedGraph realize_graph(Expansion const& e) {
    auto const&           sys = *e.system;
    std::set<EdgeAddress> internal;
    for (auto const& leaf : e.leaves) {
      EdgeAddress a = leaf;
      while (!a.is_base()) {
        a = a.parent();
        if (!internal.insert(a).second) {
          break;
        }
      }
    }
    Realizer r{sys, internal, sys.base.vertices.size(), {}, {}, {}};
    for (std::size_t i = 0; i < sys.base.edges.size(); ++i) {
      auto const& be = sys.base.edges[i];
      r.visit(EdgeAddress{i, {}}, be.source, be.target);
    }
    // Canonical representative of each vertex: least (leaf, endpoint).
    using Rep = std::pair<EdgeAddress, int>;
    std::vector<std::optional<Rep>> rep(r.next_vertex);
    auto offer = [&rep](std::size_t v, Rep const& cand) {
      if (!rep[v] || cand < *rep[v]) {
        rep[v] = cand;
      }
    };
    for (std::size_t i = 0; i < r.leaves.size(); ++i) {
      offer(r.sources[i], Rep{r.leaves[i], 0});
      offer(r.targets[i], Rep{r.leaves[i], 1});
    }
    std::vector<std::size_t> used;
    for (std::size_t v = 0; v < rep.size(); ++v) {
      if (rep[v]) {
        used.push_back(v);
      }
    }
    std::sort(used.begin(), used.end(), [&rep](std::size_t a, std::size_t b) {
      return *rep[a] < *rep[b];
    });
    std::vector<std::size_t> index(rep.size());
    RealizedGraph            out;
    for (std::size_t k = 0; k < used.size(); ++k) {
      index[used[k]] = k;
      auto const& [addr, end] = *rep[used[k]];
      out.graph.vertices.push_back(format_address(sys, addr) + (end == 0 ? ":s" : ":t"));
    }
    // Leaves are visited base edge by base edge in child order, which is the
    // sorted order of addresses.
    for (std::size_t i = 0; i < r.leaves.size(); ++i) {
      out.graph.edges.push_back(GraphEdge{format_address(sys, r.leaves[i]),
                                          index[r.sources[i]],
                                          index[r.targets[i]],
                                          color_of(sys, r.leaves[i])});
    }
    out.leaves = std::move(r.leaves);
    return out;
  }

  std::vector<std::size_t> vertex_degrees(Graph const& g) {
    std::vector<std::size_t> deg(g.vertices.size(), 0);
    for (auto const& e : g.edges) {
      ++deg[e.source];
      ++deg[e.target];
    }
    return deg;
  }

  std::string to_dot(ReplacementSystem const& sys, RealizedGraph const& g) {
    std::ostringstream out;
    out << "digraph \"" << sys.name << "\" {\n";
    for (std::size_t v = 0; v < g.graph.vertices.size(); ++v) {
      out << "  v" << v << " [label=\"" << g.graph.vertices[v] << "\"];\n";
    }
    for (auto const& e : g.graph.edges) {
      out << "  v" << e.source << " -> v" << e.target << " [label=\"" << e.id
          << "\", color=\"" << sys.colors.at(e.color) << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace airframe
