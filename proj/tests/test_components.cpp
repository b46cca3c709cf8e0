// Component paths, the action on components, alignment and orbit search.

#include <random>

#include "airframe/acceptance.hpp"
#include "airframe/components.hpp"
#include "airframe/systems.hpp"
#include "airframe/word.hpp"
#include "doctest.h"

using namespace airframe;

namespace {
  std::vector<std::string> const five{"alpha", "beta", "gamma", "delta", "epsilon"};
  ReplacementSystem const&       plane() { return *airplane().system; }
  ComponentId at(std::string const& p) { return path_to_component(plane(), parse_path(p)); }
  std::string where(ComponentId const& c) { return format_path(component_path(plane(), c)); }
  GraphPairDiagram eval(std::string const& w) {
    return evaluate_word(airplane().table, parse_group_word(w, airplane().table));
  }
}  // namespace

TEST_CASE("paths") {
  CHECK(component_path(plane(), ComponentId::central()).empty());
  CHECK(depth(plane(), ComponentId::central()) == 0);
  auto c = at("(1/2,1/2);(3/4,1/2)");
  CHECK(depth(plane(), c) == 2);
  CHECK(where(c) == "(1/2,1/2);(3/4,1/2)");
  CHECK(depth(plane(), at("(0,1/2)")) == 1);
  CHECK(at("(0,1/2)") == ComponentId::created_by(parse_address(plane(), "bR")));
  CHECK(parse_path("(3/2^2, 1/2)") == parse_path("(3/4,1/2)"));
  CHECK(format_path({}) == "()");
}

TEST_CASE("path errors") {
  CHECK_THROWS_AS(parse_path("(1/2,1/2"), InputError);
  CHECK_THROWS_AS(parse_path("(1/2;1/2)"), InputError);
  CHECK_THROWS_AS(parse_path("(1/2,1/3)"), InputError);
  CHECK_THROWS_AS(parse_path("(1/2,1/2);"), InputError);
  CHECK_THROWS_AS(at("(1,1/2)"), InputError);
  CHECK_THROWS_AS(at("(1/2,0)"), InputError);
  CHECK_THROWS_AS(at("(1/2,1/2);(0,1/2)"), InputError);
}

TEST_CASE("paths round-trip for all small components") {
  for (auto const& p : enumerate_components(2, 3)) {
    CHECK(component_path(plane(), path_to_component(plane(), p)) == p);
  }
  CHECK(enumerate_components(1, 1).size() == 1 + 2);
}

TEST_CASE("fast action agrees with the expansion-based reference") {
  std::mt19937_64 rng(23);
  auto            pool = enumerate_components(2, 2);
  for (int i = 0; i < 60; ++i) {
    auto f = evaluate_word(airplane().table, random_word(rng, five, 8));
    for (std::size_t k = 0; k < pool.size(); k += 3) {
      auto c = path_to_component(plane(), pool[k]);
      CHECK(map_component(f, c) == map_component_by_expansion(f, c));
    }
  }
}

TEST_CASE("action respects composition") {
  std::mt19937_64 rng(29);
  auto            pool = enumerate_components(2, 2);
  for (int i = 0; i < 60; ++i) {
    auto f = evaluate_word(airplane().table, random_word(rng, five, 6));
    auto g = evaluate_word(airplane().table, random_word(rng, five, 6));
    auto c = path_to_component(plane(), pool[i % pool.size()]);
    CHECK(map_component(compose(f, g), c) == map_component(f, map_component(g, c)));
  }
}

TEST_CASE("generator actions") {
  CHECK(map_component(identity(airplane().system), at("(1/4,1/2)")) == at("(1/4,1/2)"));
  // exactly one of alpha, alpha^-1 sends ((0,1/2)) to the central component
  bool fwd = map_component(eval("a"), at("(0,1/2)")).is_central();
  bool bwd = map_component(eval("a'"), at("(0,1/2)")).is_central();
  CHECK(fwd != bwd);
  CHECK(bwd);
  // beta permutes the central rays and keeps positions
  for (auto const& p : {"(1/2,1/2)", "(1/2,1/4)", "(1/4,3/4)"}) {
    auto img = component_path(plane(), map_component(eval("b"), at(p)));
    REQUIRE(img.size() == 1);
    CHECK(img[0].position == parse_path(p)[0].position);
  }
  // rist(C0) fixes the central component
  std::mt19937_64 rng(31);
  for (int i = 0; i < 30; ++i) {
    auto f = evaluate_word(airplane().table, random_word(rng, {"beta", "gamma", "delta"}, 10));
    CHECK(map_component(f, ComponentId::central()).is_central());
  }
  // epsilon keeps the right horizontal ray
  CHECK(where(map_component(eval("e"), at("(0,1/2)"))) == "(0,3/4)");
}

TEST_CASE("alignment") {
  auto p = [](char const* s) { return parse_path(s); };
  CHECK(aligned({p("(1/4,1/2)"), p("(3/4,1/4);(1/8,1/2)")}).aligned);
  CHECK_FALSE(aligned({p("(0,1/2)"), p("(1/4,1/2)"), p("(1/2,1/2)")}).aligned);
  auto hor = aligned({p("(1/2,1/2)"), p("()"), p("(0,1/2)")});
  CHECK(hor.aligned);
  REQUIRE(hor.ordered.size() == 3);
  CHECK(hor.ordered[1].empty());
  auto ray = aligned({p("(0,3/4)"), p("(0,1/4)"), p("(0,1/2)")});
  CHECK(ray.aligned);
  CHECK(ray.ordered == std::vector<ComponentPath>{p("(0,3/4)"), p("(0,1/2)"), p("(0,1/4)")});
  CHECK(on_connecting_path(p("(0,3/4)"), p("(1/4,1/2)"), p("()")));
  CHECK_FALSE(on_connecting_path(p("(0,3/4)"), p("(0,1/2)"), p("()")));
  CHECK_THROWS_AS(aligned({p("()")}), PreconditionError);
  CHECK_THROWS_AS(aligned({p("()"), p("()")}), PreconditionError);
}

TEST_CASE("orbit search") {
  auto const& t = airplane().table;
  CHECK(orbit_search(t, at("(1/4,1/2)"), at("(1/4,1/2)"), 0) == GroupWord{});
  auto w = orbit_search(t, at("(0,1/2)"), ComponentId::central(), 2);
  REQUIRE(w.has_value());
  CHECK(w->size() <= 2);
  CHECK(map_component(evaluate_word(t, *w), at("(0,1/2)")).is_central());
  auto deep = orbit_search(t, at("(1/2,1/2);(3/4,1/2)"), ComponentId::central(), 6);
  REQUIRE(deep.has_value());
  CHECK(map_component(evaluate_word(t, *deep), at("(1/2,1/2);(3/4,1/2)")).is_central());
  // shortlex: no shorter word exists
  CHECK_FALSE(orbit_search(t, at("(1/2,1/2);(3/4,1/2)"), ComponentId::central(), deep->size() - 1).has_value());
  // deterministic
  CHECK(orbit_search(t, at("(1/2,1/2);(3/4,1/2)"), ComponentId::central(), 6) == deep);
  CHECK_FALSE(orbit_search(t, at("(1/4,1/2)"), ComponentId::central(), 0).has_value());
}

TEST_CASE("staged reduction to the central component") {
  for (auto const* name : {"airplane", "airplane_commutator"}) {
    auto const& b = builtin(name);
    for (auto const& p : enumerate_components(2, 2)) {
      auto c = path_to_component(plane(), p);
      auto w = reduce_to_central(b.table, c);
      REQUIRE(w.has_value());
      CHECK(map_component(evaluate_word(b.table, *w), c).is_central());
    }
  }
}

TEST_CASE("pairs reach the reference pair") {
  auto const& t = airplane().table;
  auto        w = reduce_pair(t, at("(1/4,1/2)"), at("(3/4,1/4);(1/8,3/4)"));
  REQUIRE(w.has_value());
  auto f = evaluate_word(t, *w);
  CHECK(map_component(f, at("(1/4,1/2)")).is_central());
  CHECK(map_component(f, at("(3/4,1/4);(1/8,3/4)")) == at("(0,1/2)"));
  CHECK_THROWS_AS(reduce_pair(t, at("()"), at("()")), PreconditionError);
}

TEST_CASE("transitivity report") {
  auto r = check_k_transitivity(airplane().table, 1, 1, 2, 30);
  CHECK(r.ok());
  CHECK(r.checked == 1 + 4 * 3);
  auto tight = check_k_transitivity(airplane().table, 1, 1, 2, 0);
  CHECK_FALSE(tight.ok());
  CHECK_THROWS_AS(check_k_transitivity(airplane().table, 3, 1, 2, 30), PreconditionError);
}
