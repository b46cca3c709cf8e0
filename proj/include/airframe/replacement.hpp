// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems
//
// Replacement systems, edge addresses, expansions, and the realization of an
// expansion as a concrete colored directed graph.

#ifndef AIRFRAME_REPLACEMENT_HPP_
#define AIRFRAME_REPLACEMENT_HPP_

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace airframe {

  // Raised for malformed input: unknown edge ids, bad addresses, bad files.
  class InputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // Raised when an operation's precondition is violated by its arguments.
  class PreconditionError : public std::logic_error {
    using std::logic_error::logic_error;
  };

  struct GraphEdge {
    std::string id;
    std::size_t source;
    std::size_t target;
    std::size_t color;
  };

  // Colored directed multigraph. The order of `edges` is significant: in a
  // rule graph it defines the child indices of an expanded edge.
  struct Graph {
    std::vector<std::string> vertices;
    std::vector<GraphEdge>   edges;
  };

  struct ReplacementRule {
    Graph       graph;
    std::size_t initial  = 0;
    std::size_t terminal = 1;
    // Whether cells of this color may be matched with their direction
    // reversed inside a graph pair diagram.
    bool reversible = false;
  };

  struct ValidationReport {
    bool                     ok = true;
    std::vector<std::string> problems;
  };

  class ReplacementSystem {
   public:
    std::string              name;
    std::vector<std::string> colors;
    Graph                    base;
    std::vector<ReplacementRule> rules;  // indexed by color

    // Computes derived data (reversal permutations). Safe on invalid input.
    void prepare();

    std::size_t color_index(std::string const& color) const;
    std::size_t base_edge_index(std::string const& id) const;
    std::size_t child_count(std::size_t color) const;

    // The direction-reversing automorphism of a reversible rule, as a
    // permutation of its edges; empty if the color is not reversible.
    std::vector<std::size_t> const& reversal(std::size_t color) const;

   private:
    std::vector<std::vector<std::size_t>> _reversal;
  };

  using SystemRef = std::shared_ptr<ReplacementSystem const>;

  // Structural sanity checks on a system.
  ValidationReport validate_system(ReplacementSystem const& sys);

  // Finds a color- and direction-preserving automorphism of a rule graph
  // that swaps its initial and terminal vertices.
  std::optional<std::vector<std::size_t>> find_reversal(ReplacementRule const& rule);

  // A cell name: a base edge followed by child indices.
  struct EdgeAddress {
    std::size_t              base = 0;
    std::vector<std::size_t> path;

    EdgeAddress child(std::size_t i) const;
    EdgeAddress parent() const;
    bool        is_base() const noexcept { return path.empty(); }
    std::size_t depth() const noexcept { return path.size(); }
    std::size_t last() const { return path.back(); }
    // True if `this` equals `that` or is an ancestor of it.
    bool is_prefix_of(EdgeAddress const& that) const noexcept;

    auto operator<=>(EdgeAddress const&) const = default;
    bool operator==(EdgeAddress const&) const  = default;
  };

  std::string format_address(ReplacementSystem const& sys, EdgeAddress const& a);
  EdgeAddress parse_address(ReplacementSystem const& sys, std::string const& text);
  std::size_t color_of(ReplacementSystem const& sys, EdgeAddress const& a);
  // Checks that every index is in range for the color it descends from.
  bool is_valid_address(ReplacementSystem const& sys, EdgeAddress const& a);

  // A complete leaf set of edge addresses, kept sorted.
  struct Expansion {
    SystemRef                system;
    std::vector<EdgeAddress> leaves;

    bool contains(EdgeAddress const& a) const;
    bool operator==(Expansion const& that) const { return leaves == that.leaves; }
  };

  Expansion base_expansion(SystemRef const& sys);
  Expansion expand_edge(Expansion const& e, EdgeAddress const& a);
  Expansion full_expansion(SystemRef const& sys, std::size_t rounds);
  Expansion common_refinement(Expansion const& e1, Expansion const& e2);
  // Checks the complete-leaf-set property.
  bool is_valid_expansion(Expansion const& e);
  // Leaves of `e` lying under `a` (including `a` itself), in sorted order.
  std::vector<EdgeAddress> leaves_under(std::vector<EdgeAddress> const& sorted,
                                        EdgeAddress const&              a);

  // A realized expansion. Edge i of `graph` is leaf i of the expansion; each
  // vertex is named by its canonical representative, the least incident
  // (leaf address, endpoint) pair, printed as "<address>:s" or "<address>:t".
  struct RealizedGraph {
    Graph                    graph;
    std::vector<EdgeAddress> leaves;
  };

  RealizedGraph realize_graph(Expansion const& e);
  std::vector<std::size_t> vertex_degrees(Graph const& g);

  // Graphviz rendering with one color attribute per edge.
  std::string to_dot(ReplacementSystem const& sys, RealizedGraph const& g);

}  // namespace airframe

#endif  // AIRFRAME_REPLACEMENT_HPP_
