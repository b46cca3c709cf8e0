// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems
//
// Component paths, the action of Airplane rearrangements on components,
// alignment, and breadth-first orbit experiments.

#ifndef AIRFRAME_COMPONENTS_HPP_
#define AIRFRAME_COMPONENTS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "airframe/airplane.hpp"

namespace airframe {

  struct PathStep {
    DyadicRational angle;
    DyadicRational position;

    auto operator<=>(PathStep const&) const = default;
    bool operator==(PathStep const&) const  = default;
  };

  // Empty for the central component.
  using ComponentPath = std::vector<PathStep>;

  ComponentPath component_path(ReplacementSystem const& sys, ComponentId const& c);
  // Throws InputError when an angle or position is out of range.
  ComponentId   path_to_component(ReplacementSystem const& sys, ComponentPath const& p);
  std::size_t   depth(ReplacementSystem const& sys, ComponentId const& c);

  // "(1/2,1/2);(3/4,1/2)"; the central component prints as "()".
  std::string   format_path(ComponentPath const& p);
  // Accepts reduced fractions and a/2^b forms; "()" or "" is central.
  ComponentPath parse_path(std::string const& text);

  ComponentId map_component(GraphPairDiagram const& f, ComponentId const& c);
  // Reference implementation: expands f along the component's boundary and
  // reads the image from the expanded range.
  ComponentId map_component_by_expansion(GraphPairDiagram const& f, ComponentId const& c);

  struct AlignmentResult {
    bool                       aligned = false;
    std::vector<ComponentPath> ordered;
  };

  // Whether `k` lies on the connecting path from `a` to `b`.
  bool on_connecting_path(ComponentPath const& a,
                          ComponentPath const& b,
                          ComponentPath const& k);
  AlignmentResult aligned(std::vector<ComponentPath> const& cs);

  // Letters are generators and their inverses, or composite words, each
  // with its diagram. Actions on components are memoized.
  struct Letter {
    std::string      label;
    GroupWord        word;
    GraphPairDiagram diagram;
  };

  struct ComponentHash {
    std::size_t operator()(ComponentId const& c) const noexcept;
  };

  class ActionCache {
   public:
    explicit ActionCache(std::vector<Letter> letters);
    std::vector<Letter> const& letters() const noexcept { return _letters; }
    ComponentId apply(std::size_t letter, ComponentId const& c);

   private:
    std::vector<Letter>                                        _letters;
    std::vector<std::unordered_map<ComponentId, ComponentId, ComponentHash>> _memo;
  };

  // Generators followed by their inverses, in table order.
  std::vector<Letter> generator_letters(GeneratorTable const& table);
  Letter              composite_letter(GeneratorTable const& table,
                                       std::string          label,
                                       GroupWord const&     word);

  // Shortlex-least word of length <= max_len mapping src to tgt, or nothing
  // if none exists or more than `state_cap` states were explored.
  std::optional<GroupWord> orbit_search(GeneratorTable const& table,
                                        ComponentId const&    src,
                                        ComponentId const&    tgt,
                                        std::size_t           max_len,
                                        std::size_t           state_cap = 2000000);

  // Word mapping c to the central component, found by alternating a
  // breadth-first rotation stage (generators in rist(C0)) with a sliding
  // stage (generators in rist(Hor)). The word is verified by re-evaluation.
  std::optional<GroupWord> reduce_to_central(GeneratorTable const& table,
                                             ComponentId const&    c,
                                             std::size_t           state_cap = 200000);

  // Word mapping (c1, c2) to (central, ((0,1/2))), or nothing on failure.
  std::optional<GroupWord> reduce_pair(GeneratorTable const& table,
                                       ComponentId const&    c1,
                                       ComponentId const&    c2,
                                       std::size_t           state_cap = 200000);

  // All components with depth <= max_depth whose coordinates have
  // denominators dividing 2^denominator_exponent.
  std::vector<ComponentPath> enumerate_components(std::size_t max_depth,
                                                  int         denominator_exponent);

  struct TransitivityReport {
    std::size_t              k       = 1;
    std::size_t              checked = 0;
    std::size_t              longest = 0;
    std::vector<std::string> failures;
    bool ok() const noexcept { return failures.empty(); }
  };

  // k = 1: every enumerated component is mapped to the central component
  // by a word of length <= word_bound. k = 2: `samples` pseudo-random
  // ordered pairs of distinct enumerated components are mapped to
  // (central, ((0,1/2))).
  TransitivityReport check_k_transitivity(GeneratorTable const& table,
                                          std::size_t           k,
                                          std::size_t           max_depth,
                                          int                   denominator_exponent,
                                          std::size_t           word_bound,
                                          std::size_t           samples = 20,
                                          std::uint64_t         seed    = 1);

}  // namespace airframe

#endif  // AIRFRAME_COMPONENTS_HPP_
