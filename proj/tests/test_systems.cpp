// Built-in systems and generator tables. Diagrams over the interval and
// circle systems are checked against direct piecewise-linear composition.

#include <random>

#include "airframe/acceptance.hpp"
#include "airframe/systems.hpp"
#include "doctest.h"

using namespace airframe;

TEST_CASE("every built-in generator is a valid reduced diagram") {
  for (auto const& name : builtin_names()) {
    auto const& b = builtin(name);
    for (auto const& g : b.table.names()) {
      CAPTURE(name);
      CAPTURE(g);
      CHECK(validate(b.table.get(g)));
      CHECK(is_reduced(b.table.get(g)));
      CHECK(is_identity(compose(b.table.get(g), b.table.get_inverse(g))));
    }
  }
  CHECK_THROWS_AS(builtin("nope"), InputError);
}

TEST_CASE("aliases resolve to canonical names") {
  auto const& t = airplane().table;
  CHECK(t.canonical("a") == "alpha");
  CHECK(t.canonical("e") == "epsilon");
  CHECK(t.contains("gamma"));
  CHECK_FALSE(t.contains("zeta"));
  CHECK(airplane_commutator().table.names().size() == 6);
  CHECK(basilica().table.names() == std::vector<std::string>{"t1", "t2", "t3", "t4"});
}

TEST_CASE("interval and circle generators match their breakpoints") {
  auto const& i = interval_system().table;
  auto const& c = circle_system().table;
  CHECK(diagram_pl_map(i.get("X0")) == thompson_x0());
  CHECK(diagram_pl_map(i.get("X1")) == thompson_x1());
  CHECK(diagram_pl_map(c.get("Y0")) == thompson_y0());
  CHECK(diagram_pl_map(c.get("Y1")) == thompson_y1());
  CHECK(diagram_pl_map(c.get("Y2")) == thompson_y2());
  CHECK(thompson_x0().apply(DyadicRational(1, 2)) == DyadicRational(1, 1));
  CHECK(thompson_x0().apply(DyadicRational(1, 1)) == DyadicRational(3, 2));
}

TEST_CASE("diagram composition matches map composition") {
  std::mt19937_64 rng(17);
  for (auto const* name : {"interval", "circle"}) {
    auto const& t = builtin(name).table;
    for (int k = 0; k < 80; ++k) {
      auto  w = random_word(rng, t.names(), 10);
      PLMap expected = PLMap::identity(std::string(name) == "interval" ? PLDomain::interval : PLDomain::circle);
      for (auto const& [g, e] : w) {
        auto m   = diagram_pl_map(t.get(g));
        expected = compose(expected, e > 0 ? m : m.inverse());
      }
      CAPTURE(format_word(w));
      CHECK(diagram_pl_map(evaluate_word(t, w)) == expected);
    }
  }
}

TEST_CASE("basilica generator orders") {
  auto const& t = basilica().table;
  CHECK(order_up_to(t.get("t4"), 6) == std::optional<std::size_t>(2));
  for (auto const& g : {"t1", "t2", "t3"}) {
    CHECK_FALSE(order_up_to(t.get(g), 6).has_value());
  }
}

TEST_CASE("diagram_from_cells rejects duplicates") {
  CHECK_THROWS_AS(diagram_from_cells(airplane().system, {{"bL", "bL", false}, {"bL", "bR", false}}), InputError);
}
