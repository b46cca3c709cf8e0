// Word grammar: parsing, printing and flattening.

#include <random>

#include "airframe/systems.hpp"
#include "airframe/word.hpp"
#include "doctest.h"

using namespace airframe;

namespace {
  GroupWord g(std::string const& s) { return parse_group_word(s, airplane().table); }
  GroupWord w(std::initializer_list<std::pair<char const*, std::int64_t>> xs) {
    GroupWord out;
    for (auto const& [n, e] : xs) {
      out.emplace_back(n, e);
    }
    return out;
  }

  // Random expression trees over a few names.
  WordExpression random_expr(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 5);
    WordExpression                     e;
    switch (pick(rng)) {
      case 0:
        e.kind = WordExpression::Kind::atom;
        e.name = std::string(1, "abcde"[std::uniform_int_distribution<int>(0, 4)(rng)]);
        return e;
      case 1:
        e.kind = WordExpression::Kind::inverse;
        e.children.push_back(random_expr(rng, depth - 1));
        return e;
      case 2:
        e.kind     = WordExpression::Kind::power;
        e.exponent = std::uniform_int_distribution<int>(-3, 3)(rng);
        if (e.exponent == 0) {
          e.exponent = 2;
        }
        e.children.push_back(random_expr(rng, depth - 1));
        return e;
      case 3: {
        e.kind = WordExpression::Kind::product;
        int n  = std::uniform_int_distribution<int>(2, 3)(rng);
        for (int i = 0; i < n; ++i) {
          e.children.push_back(random_expr(rng, depth - 1));
        }
        return e;
      }
      case 4:
        e.kind = WordExpression::Kind::commutator;
        e.children.push_back(random_expr(rng, depth - 1));
        e.children.push_back(random_expr(rng, depth - 1));
        return e;
      default:
        e.kind = WordExpression::Kind::conjugate;
        e.children.push_back(random_expr(rng, depth - 1));
        e.children.push_back(random_expr(rng, depth - 1));
        return e;
    }
  }
}  // namespace

TEST_CASE("flattening examples") {
  CHECK(g("a") == w({{"alpha", 1}}));
  CHECK(g("") == GroupWord{});
  CHECK(g("a b'") == w({{"alpha", 1}, {"beta", -1}}));
  CHECK(g("a^3") == w({{"alpha", 1}, {"alpha", 1}, {"alpha", 1}}));
  CHECK(g("b^e") == w({{"epsilon", -1}, {"beta", 1}, {"epsilon", 1}}));
  CHECK(g("[a,b]") == w({{"alpha", 1}, {"beta", 1}, {"alpha", -1}, {"beta", -1}}));
  CHECK(g("[e,d] [e^-1, a^-2]")
        == w({{"epsilon", 1},
              {"delta", 1},
              {"epsilon", -1},
              {"delta", -1},
              {"epsilon", -1},
              {"alpha", -1},
              {"alpha", -1},
              {"epsilon", 1},
              {"alpha", 1},
              {"alpha", 1}}));
  CHECK(g("(a b)^-1") == w({{"beta", -1}, {"alpha", -1}}));
  CHECK(g("alpha^0") == GroupWord{});
  CHECK(format_word(g("a b' a")) == "alpha beta^-1 alpha");
}

TEST_CASE("printing reparses to the same tree") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 300; ++i) {
    auto e   = random_expr(rng, 3);
    auto txt = to_string(e);
    CAPTURE(txt);
    auto back = parse_word(txt);
    CHECK(flatten(back) == flatten(e));
    CHECK(to_string(back) == txt);
  }
}

TEST_CASE("syntax errors carry offsets") {
  auto offset_of = [](std::string const& s) -> std::size_t {
    try {
      parse_word(s);
    } catch (WordSyntaxError const& err) {
      return err.offset();
    }
    return std::string::npos;
  };
  CHECK(offset_of("a (b") == 4);
  CHECK(offset_of("a )") == 2);
  CHECK(offset_of("[a b]") == 4);
  CHECK(offset_of("a^") == 2);
  CHECK(offset_of("a ? b") == 2);
  CHECK(offset_of("a b") == std::string::npos);
  CHECK_THROWS_AS(g("zeta"), InputError);
  CHECK_THROWS_AS(flatten(parse_word("a^1000000000")), InputError);
}
