// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems
//
// Graph pair diagrams as group elements.

#ifndef AIRFRAME_DIAGRAM_HPP_
#define AIRFRAME_DIAGRAM_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "airframe/replacement.hpp"

namespace airframe {

  // Where a domain cell goes. `reversed` is set when the cell is matched with
  // its direction flipped, which is allowed only for reversible colors.
  struct CellImage {
    EdgeAddress target;
    bool        reversed = false;

    bool operator==(CellImage const&) const = default;
  };

  // Domain leaves are the keys of `cells`, range leaves the targets.
  struct GraphPairDiagram {
    SystemRef                          system;
    std::map<EdgeAddress, CellImage>   cells;

    Expansion domain() const;
    Expansion range() const;
    std::size_t size() const noexcept { return cells.size(); }

    // Structural equality (no reduction).
    bool operator==(GraphPairDiagram const& that) const;
  };

  // Raised when a diagram operation detects that a claimed diagram is not a
  // graph isomorphism, or when a structural invariant fails.
  class InvariantError : public std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  bool             validate(GraphPairDiagram const& d);
  GraphPairDiagram identity(SystemRef const& sys);
  GraphPairDiagram expand_pair(GraphPairDiagram const& d, EdgeAddress const& a);
  // Expands the diagram until its domain refines `target`.
  GraphPairDiagram refine_domain(GraphPairDiagram const& d, Expansion const& target);
  // Expands the diagram until its range refines `target`.
  GraphPairDiagram refine_range(GraphPairDiagram const& d, Expansion const& target);

  // Collapses matched sibling sets to a fixpoint. Sites are scanned in
  // address order.
  GraphPairDiagram reduce(GraphPairDiagram const& d);
  // Same fixpoint, with collapse sites visited in a pseudo-random order
  // determined by `seed`.
  GraphPairDiagram reduce_shuffled(GraphPairDiagram const& d, std::uint64_t seed);
  bool             is_reduced(GraphPairDiagram const& d);

  // f∘g: apply g first. The result is reduced.
  GraphPairDiagram compose(GraphPairDiagram const& f, GraphPairDiagram const& g);
  GraphPairDiagram invert(GraphPairDiagram const& f);
  GraphPairDiagram power(GraphPairDiagram const& f, std::int64_t k);
  bool             equals(GraphPairDiagram const& f, GraphPairDiagram const& g);
  bool             is_identity(GraphPairDiagram const& f);
  // Least k <= n with f^k = 1.
  std::optional<std::size_t> order_up_to(GraphPairDiagram const& f, std::size_t n);

  // Image of a cell under `d`, for any address comparable with a domain leaf
  // that lies at or below it. Returns nothing if the address sits strictly
  // above the domain leaves.
  std::optional<CellImage> image_of(GraphPairDiagram const& d, EdgeAddress const& a);

  // A word: (generator name, exponent) pairs, evaluated right to left.
  using GroupWord = std::vector<std::pair<std::string, std::int64_t>>;

  class GeneratorTable {
   public:
    GeneratorTable() = default;
    explicit GeneratorTable(SystemRef sys) : _system(std::move(sys)) {}

    void add(std::string name, GraphPairDiagram d, std::vector<std::string> aliases = {});

    SystemRef const& system() const noexcept { return _system; }
    // Canonical names in insertion order.
    std::vector<std::string> const& names() const noexcept { return _names; }
    bool contains(std::string const& name) const;
    std::string const& canonical(std::string const& name) const;
    GraphPairDiagram const& get(std::string const& name) const;
    GraphPairDiagram const& get_inverse(std::string const& name) const;

   private:
    SystemRef                                  _system;
    std::vector<std::string>                   _names;
    std::map<std::string, std::string>         _alias;
    std::map<std::string, GraphPairDiagram>    _diagrams;
    std::map<std::string, GraphPairDiagram>    _inverses;
  };

  GraphPairDiagram evaluate_word(GeneratorTable const& table, GroupWord const& w);
  GroupWord        inverse_word(GroupWord const& w);
  std::string      format_word(GroupWord const& w);

}  // namespace airframe

#endif  // AIRFRAME_DIAGRAM_HPP_
