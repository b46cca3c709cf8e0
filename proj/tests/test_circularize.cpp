// The circular image of Airplane expansions and elements.

#include <random>

#include "airframe/acceptance.hpp"
#include "airframe/airplane.hpp"
#include "airframe/circularize.hpp"
#include "airframe/systems.hpp"
#include "doctest.h"

using namespace airframe;

namespace {
  std::vector<std::string> const five{"alpha", "beta", "gamma", "delta", "epsilon"};

  std::size_t count_color(Expansion const& e, std::size_t color) {
    std::size_t n = 0;
    for (auto const& l : e.leaves) {
      n += color_of(*e.system, l) == color ? 1 : 0;
    }
    return n;
  }
}  // namespace

TEST_CASE("base image is the hexagon") {
  auto c = circular_base();
  CHECK(c.expansion.leaves.size() == 6);
  CHECK(count_color(c.expansion, red_color) == 2);
  CHECK(count_color(c.expansion, blue_color) == 4);
  CHECK(c.correspondence.size() == 4);
}

TEST_CASE("simple expansions add three or four edges") {
  auto c   = circular_base();
  auto red = circular_expand(c, EdgeAddress{base_top, {}});
  CHECK(red.expansion.leaves.size() == 6 + 3);
  auto blue = circular_expand(c, EdgeAddress{base_right, {}});
  CHECK(blue.expansion.leaves.size() == 6 + 4);
  CHECK_THROWS_AS(circular_expand(c, EdgeAddress{base_top, {0}}), PreconditionError);
}

TEST_CASE("correspondence is one-to-one on red and one-to-two on blue") {
  std::mt19937_64 rng(37);
  auto            sys = airplane().system;
  Expansion       e   = base_expansion(sys);
  for (int i = 0; i < 40; ++i) {
    e      = expand_edge(e, e.leaves[std::uniform_int_distribution<std::size_t>(0, e.leaves.size() - 1)(rng)]);
    auto c = circularize(e);
    CHECK(is_valid_expansion(c.expansion));
    for (auto const& [a, img] : c.correspondence) {
      CHECK(img.size() == (color_of(*sys, a) == red_color ? 1u : 2u));
      for (auto const& x : img) {
        CHECK(color_of(*c.expansion.system, x) == color_of(*sys, a));
      }
    }
    CHECK(count_color(c.expansion, red_color) == count_color(e, red_color));
    CHECK(count_color(c.expansion, blue_color) == 2 * count_color(e, blue_color));
  }
}

TEST_CASE("the circular map is an injective homomorphism") {
  auto const&     t = airplane().table;
  std::mt19937_64 rng(41);
  CHECK(is_identity(circularize(identity(airplane().system))));
  for (int i = 0; i < 50; ++i) {
    auto f = evaluate_word(t, random_word(rng, five, 8));
    auto g = evaluate_word(t, random_word(rng, five, 8));
    CHECK(equals(circularize(compose(f, g)), compose(circularize(f), circularize(g))));
    CHECK(is_identity(circularize(f)) == is_identity(f));
    // no collapse below the size of the correspondence image
    auto dom = f.domain();
    CHECK(circularize(f).size() >= count_color(dom, red_color) + 2 * count_color(dom, blue_color));
  }
}
