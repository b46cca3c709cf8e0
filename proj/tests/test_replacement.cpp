// Replacement systems, addresses, expansions and realization. Realized
// graphs are checked against an independent gluing of rule copies.

#include <algorithm>
#include <map>
#include <functional>
#include <numeric>
#include <set>
#include <random>

#include "airframe/replacement.hpp"
#include "airframe/systems.hpp"
#include "doctest.h"

using namespace airframe;

namespace {
  // Builds the realized graph by creating a fresh copy of every rule
  // graph for every internal node and gluing endpoints with union-find.
  struct Glued {
    std::size_t              vertices = 0;
    std::vector<std::size_t> degrees;  // sorted
  };

  Glued glue(Expansion const& e) {
    auto const&              sys = *e.system;
    std::vector<std::size_t> parent;
    auto make = [&] {
      parent.push_back(parent.size());
      return parent.size() - 1;
    };
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    // endpoints of every node, keyed by address
    std::map<EdgeAddress, std::pair<std::size_t, std::size_t>> ends;
    std::vector<std::size_t>                                   base_v;
    for (std::size_t i = 0; i < sys.base.vertices.size(); ++i) {
      base_v.push_back(make());
    }
    for (std::size_t i = 0; i < sys.base.edges.size(); ++i) {
      auto const& ed            = sys.base.edges[i];
      ends[EdgeAddress{i, {}}] = {base_v[ed.source], base_v[ed.target]};
    }
    std::set<EdgeAddress> internal;
    for (auto const& l : e.leaves) {
      for (EdgeAddress p = l; !p.is_base();) {
        p = p.parent();
        internal.insert(p);
      }
    }
    // std::set iterates parents before children
    for (auto const& node : internal) {
      auto const&              rule = sys.rules[color_of(sys, node)];
      std::vector<std::size_t> copy;
      for (std::size_t v = 0; v < rule.graph.vertices.size(); ++v) {
        copy.push_back(make());
      }
      auto [s, t] = ends.at(node);
      parent[find(copy[rule.initial])]  = find(s);
      parent[find(copy[rule.terminal])] = find(t);
      for (std::size_t k = 0; k < rule.graph.edges.size(); ++k) {
        auto const& ed       = rule.graph.edges[k];
        ends[node.child(k)] = {copy[ed.source], copy[ed.target]};
      }
    }
    std::map<std::size_t, std::size_t> degree;
    for (auto const& l : e.leaves) {
      auto [s, t] = ends.at(l);
      ++degree[find(s)];
      ++degree[find(t)];
    }
    Glued g;
    g.vertices = degree.size();
    for (auto const& [v, d] : degree) {
      g.degrees.push_back(d);
    }
    std::sort(g.degrees.begin(), g.degrees.end());
    return g;
  }

  Expansion random_expansion(SystemRef const& sys, std::mt19937_64& rng, int steps) {
    Expansion e = base_expansion(sys);
    for (int i = 0; i < steps; ++i) {
      std::uniform_int_distribution<std::size_t> pick(0, e.leaves.size() - 1);
      e = expand_edge(e, e.leaves[pick(rng)]);
    }
    return e;
  }
}  // namespace

TEST_CASE("built-in systems validate") {
  for (auto const& name : builtin_names()) {
    CAPTURE(name);
    CHECK(validate_system(*builtin(name).system).ok);
  }
}

TEST_CASE("validation reports broken systems") {
  ReplacementSystem sys = *airplane().system;
  sys.rules[0].reversible = true;  // the red rule has no reversal
  sys.prepare();
  CHECK_FALSE(validate_system(sys).ok);

  ReplacementSystem two = *airplane().system;
  two.rules[1].terminal = two.rules[1].initial;
  CHECK_FALSE(validate_system(two).ok);

  ReplacementSystem empty = *airplane().system;
  empty.base.edges.clear();
  CHECK_FALSE(validate_system(empty).ok);
}

TEST_CASE("blue rule reversal swaps the outer and inner pairs") {
  auto const& sys = *airplane().system;
  CHECK(sys.reversal(1) == std::vector<std::size_t>{3, 2, 1, 0});
  CHECK(sys.reversal(0).empty());
}

TEST_CASE("address serialization round-trips") {
  auto const& sys = *airplane().system;
  EdgeAddress a   = parse_address(sys, "bR.3-0");
  CHECK(a.base == 1);
  CHECK(a.path == std::vector<std::size_t>{3, 0});
  CHECK(format_address(sys, a) == "bR.3-0");
  CHECK(format_address(sys, EdgeAddress{2, {}}) == "rT");
  CHECK_THROWS_AS(parse_address(sys, "bR."), InputError);
  CHECK_THROWS_AS(parse_address(sys, "zz"), InputError);
  CHECK_THROWS_AS(parse_address(sys, "bR.1-x"), InputError);
  CHECK_THROWS_AS(parse_address(sys, "rT.3"), InputError);
  CHECK(is_valid_address(sys, parse_address(sys, "bL.3")));
}

TEST_CASE("full expansion leaf counts follow the rule sizes") {
  auto sys = airplane().system;
  // red -> 2 red + 1 blue, blue -> 2 red + 2 blue
  std::size_t red = 2, blue = 2;
  for (std::size_t r = 0; r <= 3; ++r) {
    CHECK(full_expansion(sys, r).leaves.size() == red + blue);
    std::size_t nr = 2 * red + 2 * blue;
    std::size_t nb = red + 2 * blue;
    red            = nr;
    blue           = nb;
  }
}

TEST_CASE("expansion validity") {
  auto      sys = airplane().system;
  Expansion e   = expand_edge(expand_edge(base_expansion(sys), EdgeAddress{2, {}}), EdgeAddress{2, {1}});
  CHECK(is_valid_expansion(e));
  Expansion missing = e;
  missing.leaves.erase(missing.leaves.begin());
  CHECK_FALSE(is_valid_expansion(missing));
  Expansion clash = e;
  clash.leaves.push_back(EdgeAddress{2, {}});
  std::sort(clash.leaves.begin(), clash.leaves.end());
  CHECK_FALSE(is_valid_expansion(clash));
  CHECK_THROWS_AS(expand_edge(e, EdgeAddress{2, {}}), PreconditionError);
}

TEST_CASE("common refinement is the least common expansion") {
  auto            sys = airplane().system;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Expansion a = random_expansion(sys, rng, 5);
    Expansion b = random_expansion(sys, rng, 5);
    Expansion c = common_refinement(a, b);
    CHECK(is_valid_expansion(c));
    CHECK(common_refinement(c, a) == c);
    CHECK(common_refinement(b, a) == c);
    for (auto const& l : c.leaves) {
      // every leaf of c is below a leaf of a and below a leaf of b
      auto below = [&](Expansion const& x) {
        return std::any_of(x.leaves.begin(), x.leaves.end(), [&](auto const& y) { return y.is_prefix_of(l); });
      };
      CHECK(below(a));
      CHECK(below(b));
    }
  }
}

TEST_CASE("realization agrees with explicit gluing") {
  std::mt19937_64 rng(11);
  for (auto const& name : {"airplane", "basilica", "interval", "circle", "circular_airplane"}) {
    auto sys = builtin(name).system;
    for (int i = 0; i < 60; ++i) {
      Expansion     e = random_expansion(sys, rng, i % 12);
      RealizedGraph g = realize_graph(e);
      Glued         o = glue(e);
      CAPTURE(name);
      CHECK(g.graph.vertices.size() == o.vertices);
      auto d = vertex_degrees(g.graph);
      std::sort(d.begin(), d.end());
      CHECK(d == o.degrees);
      CHECK(g.graph.edges.size() == e.leaves.size());
    }
  }
}

TEST_CASE("base airplane realization") {
  auto g = realize_graph(base_expansion(airplane().system));
  CHECK(g.graph.vertices.size() == 4);
  CHECK(g.graph.vertices.front() == "bL:s");
  auto dot = to_dot(*airplane().system, g);
  CHECK(dot.find("color=\"blue\"") != std::string::npos);
  CHECK(dot.find("color=\"red\"") != std::string::npos);
}
