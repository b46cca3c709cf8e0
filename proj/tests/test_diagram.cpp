// Graph pair diagrams: validation, reduction, composition and inversion.

#include <random>

#include "airframe/acceptance.hpp"
#include "airframe/diagram.hpp"
#include "airframe/systems.hpp"
#include "doctest.h"

using namespace airframe;

namespace {
  std::vector<std::string> const five{"alpha", "beta", "gamma", "delta", "epsilon"};

  GraphPairDiagram random_element(std::mt19937_64& rng, std::size_t len = 8) {
    return evaluate_word(airplane().table, random_word(rng, five, len));
  }

  GraphPairDiagram random_expansion_of(GraphPairDiagram d, std::mt19937_64& rng, int steps) {
    for (int i = 0; i < steps; ++i) {
      auto leaves = d.domain().leaves;
      d           = expand_pair(d, leaves[std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng)]);
    }
    return d;
  }
}  // namespace

TEST_CASE("identity") {
  auto id = identity(airplane().system);
  CHECK(validate(id));
  CHECK(is_identity(id));
  CHECK(id.size() == 4);
  CHECK(is_reduced(id));
}

TEST_CASE("validation rejects broken maps") {
  auto sys = airplane().system;
  // color mismatch
  CHECK_FALSE(validate(diagram_from_cells(
      sys, {{"bL", "rT", false}, {"bR", "bR", false}, {"rT", "bL", false}, {"rB", "rB", false}})));
  // not a graph map: swaps the two red edges only
  CHECK_FALSE(validate(diagram_from_cells(
      sys, {{"bL", "bL", false}, {"bR", "bR", false}, {"rT", "rB", false}, {"rB", "rT", false}})));
  // reversal on a red cell
  CHECK_FALSE(validate(diagram_from_cells(
      sys, {{"bL", "bL", false}, {"bR", "bR", false}, {"rT", "rT", true}, {"rB", "rB", false}})));
  // repeated range cell
  CHECK_FALSE(validate(diagram_from_cells(
      sys, {{"bL", "bL", false}, {"bR", "bL", false}, {"rT", "rT", false}, {"rB", "rB", false}})));
  // swapping the two sides is a graph isomorphism
  CHECK(validate(diagram_from_cells(
      sys, {{"bL", "bR", false}, {"bR", "bL", false}, {"rT", "rB", false}, {"rB", "rT", false}})));
}

TEST_CASE("expanding a pair and reducing gives back the diagram") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto f = random_element(rng);
    auto g = random_expansion_of(f, rng, 6);
    CHECK(validate(g));
    CHECK(reduce(g) == f);
    CHECK(equals(f, g));
  }
}

TEST_CASE("collapse order does not matter") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    auto g = random_expansion_of(random_element(rng, 10), rng, 5);
    auto r = reduce(g);
    for (std::uint64_t s = 0; s < 3; ++s) {
      CHECK(reduce_shuffled(g, rng()) == r);
    }
  }
}

TEST_CASE("group laws") {
  std::mt19937_64 rng(13);
  auto            id = identity(airplane().system);
  for (int i = 0; i < 60; ++i) {
    auto f = random_element(rng), g = random_element(rng), h = random_element(rng);
    CHECK(equals(compose(compose(f, g), h), compose(f, compose(g, h))));
    CHECK(is_identity(compose(f, invert(f))));
    CHECK(is_identity(compose(invert(f), f)));
    CHECK(equals(compose(f, id), f));
    CHECK(equals(invert(compose(f, g)), compose(invert(g), invert(f))));
    CHECK(validate(compose(f, g)));
    CHECK(is_reduced(compose(f, g)));
  }
}

TEST_CASE("power and order") {
  auto const& t = airplane().table;
  CHECK(order_up_to(t.get("delta"), 10) == std::optional<std::size_t>(2));
  CHECK(order_up_to(compose(t.get("delta"), t.get("beta")), 10) == std::optional<std::size_t>(3));
  CHECK_FALSE(order_up_to(t.get("epsilon"), 10).has_value());
  auto e = t.get("epsilon");
  CHECK(equals(power(e, 3), compose(e, compose(e, e))));
  CHECK(equals(power(e, -2), invert(compose(e, e))));
  CHECK(is_identity(power(e, 0)));
}

TEST_CASE("words compose right to left") {
  auto const& t = airplane().table;
  GroupWord   w{{"alpha", 1}, {"epsilon", 1}};
  CHECK(equals(evaluate_word(t, w), compose(t.get("alpha"), t.get("epsilon"))));
  CHECK(format_word({{"alpha", 1}, {"beta", -2}}) == "alpha beta^-2");
  CHECK(inverse_word(w) == GroupWord{{"epsilon", -1}, {"alpha", -1}});
  CHECK_THROWS(evaluate_word(t, {{"zeta", 1}}));
}

TEST_CASE("image of deeper addresses follows the cell") {
  auto const& t   = airplane().table;
  auto const& sys = *airplane().system;
  auto        a   = t.get("alpha");
  auto        img = image_of(a, parse_address(sys, "rT.0-1"));
  REQUIRE(img.has_value());
  CHECK(format_address(sys, img->target) == "bR.1-0-1");
  // reversed blue cell: children are permuted by the reversal
  auto rev = image_of(a, parse_address(sys, "bL.0-3"));
  REQUIRE(rev.has_value());
  CHECK(format_address(sys, rev->target) == "bR.0-0");
  CHECK_FALSE(rev->reversed);
  CHECK_FALSE(image_of(t.get("epsilon"), parse_address(sys, "bR")).has_value());
}
