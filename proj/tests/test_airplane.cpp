// Airplane geometry, derivatives and rigid stabilizers.

#include <random>

#include "airframe/acceptance.hpp"
#include "airframe/airplane.hpp"
#include "airframe/systems.hpp"
#include "airframe/word.hpp"
#include "doctest.h"

using namespace airframe;

namespace {
  GraphPairDiagram eval(std::string const& w) {
    return evaluate_word(airplane().table, parse_group_word(w, airplane().table));
  }
  std::vector<std::string> const five{"alpha", "beta", "gamma", "delta", "epsilon"};
}  // namespace

TEST_CASE("blue edge lengths halve along a ray") {
  auto const& sys = *airplane().system;
  CHECK(blue_edge_length(sys, parse_address(sys, "bR")) == DyadicRational(1));
  CHECK(blue_edge_length(sys, parse_address(sys, "bR.3")) == DyadicRational(1, 1));
  CHECK(blue_edge_length(sys, parse_address(sys, "bR.0-3")) == DyadicRational(1, 2));
  // a new ray starts at full length
  CHECK(blue_edge_length(sys, parse_address(sys, "rT.2")) == DyadicRational(1));
  CHECK(blue_edge_length(sys, parse_address(sys, "bR.1-2")) == DyadicRational(1));
}

TEST_CASE("ray geometry") {
  auto const& sys = *airplane().system;
  CHECK(ray_angle(sys, parse_address(sys, "bR")) == DyadicRational(0));
  CHECK(ray_angle(sys, parse_address(sys, "bL")) == DyadicRational(1, 1));
  CHECK(ray_angle(sys, parse_address(sys, "rT.2")) == DyadicRational(1, 2));
  CHECK(ray_angle(sys, parse_address(sys, "rB.2")) == DyadicRational(3, 2));
  CHECK(ray_root(sys, parse_address(sys, "bR.3-0")) == parse_address(sys, "bR"));
  auto [lo, hi] = ray_interval(sys, parse_address(sys, "bR.3"));
  CHECK(lo == DyadicRational(1, 1));
  CHECK(hi == DyadicRational(1));
  CHECK(inner_is_source(sys, parse_address(sys, "bR")));
  CHECK_FALSE(inner_is_source(sys, parse_address(sys, "bR.0")));
  CHECK(component_of_red(sys, parse_address(sys, "rT.0")).is_central());
  CHECK(component_of_red(sys, parse_address(sys, "bR.1")) == ComponentId::created_by(parse_address(sys, "bR")));
}

TEST_CASE("extremes") {
  auto sys = airplane().system;
  CHECK(extremes(base_expansion(sys)).size() == 2);
  auto e = expand_edge(base_expansion(sys), EdgeAddress{base_top, {}});
  CHECK(extremes(e).size() == 3);
  auto leaf = extreme_leaf(e, ExtremeId{parse_address(*sys, "rT.2")});
  REQUIRE(leaf.has_value());
  CHECK(*leaf == parse_address(*sys, "rT.2"));
}

TEST_CASE("derivatives of the generators") {
  auto const& t = airplane().table;
  CHECK(global_derivative(t.get("epsilon")).exponent == 1);
  for (auto const& g : {"alpha", "beta", "gamma", "delta"}) {
    CHECK(global_derivative(t.get(g)).exponent == 0);
  }
  auto tab = derivative_table(t.get("alpha"));
  std::map<std::string, std::int64_t> byray;
  for (auto const& [p, v] : tab) {
    byray[format_address(*airplane().system, p.ray)] = v.exponent;
  }
  CHECK(byray["bL"] == -1);
  CHECK(byray["bR"] == 1);
  CHECK(global_derivative(eval("e^-2")).exponent == -2);
}

TEST_CASE("derivative is multiplicative on random words") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    auto w = random_word(rng, five, 12);
    std::int64_t sum = 0;
    for (auto const& [n, e] : w) {
      sum += n == "epsilon" ? e : 0;
    }
    CHECK(global_derivative(evaluate_word(airplane().table, w)).exponent == sum);
  }
}

TEST_CASE("semidirect split") {
  auto s = semidirect_split(eval("e^3"));
  CHECK(s.k == 3);
  CHECK(is_identity(s.c));
  auto m = semidirect_split(eval("a e^-1 b"));
  CHECK(m.k == -1);
  CHECK(equals(compose(m.c, power(airplane().table.get("epsilon"), -1)), eval("a e^-1 b")));
}

TEST_CASE("rigid stabilizer membership") {
  auto const& t = airplane().table;
  CHECK(is_in_rist_C0(t.get("beta")));
  CHECK(is_in_rist_C0(t.get("gamma")));
  CHECK(is_in_rist_C0(t.get("delta")));
  CHECK_FALSE(is_in_rist_C0(t.get("alpha")));
  CHECK_FALSE(is_in_rist_C0(t.get("epsilon")));
  CHECK(is_in_rist_Hor(t.get("alpha")));
  CHECK(is_in_rist_Hor(t.get("epsilon")));
  CHECK_FALSE(is_in_rist_Hor(t.get("beta")));
  CHECK(is_in_E(t.get("beta")));
  CHECK_FALSE(is_in_E(t.get("epsilon")));
  CHECK_FALSE(is_in_E(t.get("alpha")));
}

TEST_CASE("induced maps") {
  auto const& t = airplane().table;
  CHECK(induced_boundary_map(t.get("delta")) == thompson_y2());
  CHECK(induced_hor_map(t.get("epsilon")) == thompson_x1());
  CHECK_THROWS_AS(induced_boundary_map(t.get("alpha")), PreconditionError);
  CHECK_THROWS_AS(induced_hor_map(t.get("beta")), PreconditionError);
  // delta flips the horizon, which is not an increasing interval map
  CHECK_THROWS(induced_hor_map(t.get("delta")));
  CHECK(induced_boundary_map(eval("b g")) == compose(thompson_y0(), thompson_y1()));
}

TEST_CASE("non-airplane diagrams are rejected") {
  CHECK_THROWS_AS(global_derivative(interval_system().table.get("X0")), PreconditionError);
}
