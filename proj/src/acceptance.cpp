// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems

#include "airframe/acceptance.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "airframe/airplane.hpp"
#include "airframe/circularize.hpp"
#include "airframe/components.hpp"
#include "airframe/systems.hpp"
#include "airframe/tree_embedding.hpp"
#include "airframe/word.hpp"

namespace airframe {

  namespace {
    std::vector<std::string> const all_five{"alpha", "beta", "gamma", "delta", "epsilon"};
    std::vector<std::string> const rist_c0_names{"beta", "gamma", "delta"};
    std::vector<std::string> const rist_hor_names{"alpha", "epsilon"};

    // Collects failure notes and counts checks.
    struct Tally {
      std::size_t              checks = 0;
      std::vector<std::string> failures;

      void check(bool ok, std::string const& what) {
        ++checks;
        if (!ok && failures.size() < 5) {
          failures.push_back(what);
        } else if (!ok) {
          failures.back() = "...";
        }
      }

      CriterionResult result(int id, std::string const& summary) const {
        CriterionResult r{id, criterion_title(id), failures.empty(), summary};
        for (auto const& f : failures) {
          r.detail += "; FAIL " + f;
        }
        return r;
      }
    };

    GraphPairDiagram eval(GeneratorTable const& t, std::string const& src) {
      return evaluate_word(t, parse_group_word(src, t));
    }

    GraphPairDiagram eval(GeneratorTable const& t, GroupWord const& w) {
      return evaluate_word(t, w);
    }

    ////////////////////////////////////////////////////////////////////
    // 1. Reduction canonicity
    ////////////////////////////////////////////////////////////////////

    CriterionResult reduction_canonicity(std::uint64_t seed) {
      auto const&     t = airplane().table;
      std::mt19937_64 rng(seed);
      Tally           tally;
      std::size_t     expansions = 0;
      for (int i = 0; i < 500; ++i) {
        GroupWord        w = random_word(rng, all_five, 10);
        GraphPairDiagram d = eval(t, w);
        std::uniform_int_distribution<int> count(0, 5);
        for (int k = count(rng); k > 0; --k) {
          auto const& leaves = d.domain().leaves;
          std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
          d = expand_pair(d, leaves[pick(rng)]);
          ++expansions;
        }
        GraphPairDiagram in_order = reduce(d);
        GraphPairDiagram shuffled = reduce_shuffled(d, rng());
        tally.check(in_order == shuffled && is_reduced(in_order),
                    "schedules disagree for " + format_word(w));
      }
      return tally.result(1, "500 diagrams, " + std::to_string(expansions)
                                 + " extra pair expansions, two collapse schedules");
    }

    ////////////////////////////////////////////////////////////////////
    // 2. Exact identities
    ////////////////////////////////////////////////////////////////////

    CriterionResult exact_identities(std::uint64_t) {
      auto const& t = airplane().table;
      Tally       tally;
      auto        same = [&](std::string const& x, std::string const& y) {
        tally.check(equals(eval(t, x), eval(t, y)), x + " = " + y);
      };
      same("(d b)^3", "");
      same("d^2", "");
      same("a", "[e,d] [e^-1, a^-2]");
      same("b^e", "b");
      same("g^e", "g");
      for (int k = 1; k <= 5; ++k) {
        same("[d,e]^" + std::to_string(k), "[d,e^" + std::to_string(k) + "]");
      }
      tally.check(!is_identity(t.get("beta")) && !is_identity(eval(t, "d b")),
                  "generators are nontrivial");
      return tally.result(2, std::to_string(tally.checks) + " diagram equalities");
    }

    ////////////////////////////////////////////////////////////////////
    // 3. Derivative homomorphism
    ////////////////////////////////////////////////////////////////////

    CriterionResult derivative_homomorphism(std::uint64_t seed) {
      auto const&     t = airplane().table;
      std::mt19937_64 rng(seed);
      Tally           tally;
      for (int i = 0; i < 200; ++i) {
        auto f = eval(t, random_word(rng, all_five, 12));
        auto g = eval(t, random_word(rng, all_five, 12));
        tally.check(global_derivative(compose(f, g)).exponent
                        == global_derivative(f).exponent + global_derivative(g).exponent,
                    "D(f g) != D(f) D(g)");
      }
      for (auto const& n : {"alpha", "beta", "gamma", "delta"}) {
        tally.check(global_derivative(t.get(n)).exponent == 0, std::string("D(") + n + ") != 1");
      }
      std::int64_t de = global_derivative(t.get("epsilon")).exponent;
      tally.check(de == 1 || de == -1, "|log2 D(epsilon)| != 1");
      for (int k = -6; k <= 6; ++k) {
        tally.check(global_derivative(power(t.get("epsilon"), k)).exponent == k * de,
                    "D(epsilon^" + std::to_string(k) + ") != D(epsilon)^k");
      }
      return tally.result(3, "200 random pairs; log2 D(epsilon) = " + std::to_string(de));
    }

    ////////////////////////////////////////////////////////////////////
    // 4. Commutator subgroup
    ////////////////////////////////////////////////////////////////////

    CriterionResult commutator_membership(std::uint64_t seed) {
      auto const&     t = airplane().table;
      std::mt19937_64 rng(seed);
      Tally           tally;
      for (auto const& w : {"a", "b", "g", "d", "[d,e]", "[e^-1, e^-1 a]"}) {
        tally.check(global_derivative(eval(t, w)).exponent == 0, std::string("D(") + w + ") != 1");
      }
      tally.check(global_derivative(t.get("epsilon")).exponent != 0, "D(epsilon) = 1");
      std::size_t inside = 0;
      for (int i = 0; i < 100; ++i) {
        GroupWord    w   = random_word(rng, all_five, 10);
        auto         f   = eval(t, w);
        std::int64_t sum = 0;
        for (auto const& [name, e] : w) {
          sum += name == "epsilon" ? e : 0;
        }
        bool member = is_in_commutator(f);
        inside += member ? 1 : 0;
        tally.check(member == (abelianization_image(f) == 0), "membership disagrees with image");
        tally.check(member == (sum == 0), "membership disagrees with epsilon exponent sum of "
                                              + format_word(w));
      }
      return tally.result(4, "six generators have D = 1; 100 random words, "
                                 + std::to_string(inside) + " in the commutator subgroup");
    }

    ////////////////////////////////////////////////////////////////////
    // 5. Semidirect split
    ////////////////////////////////////////////////////////////////////

    CriterionResult semidirect(std::uint64_t seed) {
      auto const&     t = airplane().table;
      std::mt19937_64 rng(seed);
      Tally           tally;
      std::int64_t    widest = 0;
      for (int i = 0; i < 100; ++i) {
        GroupWord w     = random_word(rng, all_five, 10);
        auto      f     = eval(t, w);
        auto      split = semidirect_split(f);
        widest          = std::max(widest, split.k < 0 ? -split.k : split.k);
        tally.check(equals(f, compose(split.c, power(t.get("epsilon"), split.k))),
                    "f != c e^k for " + format_word(w));
        tally.check(global_derivative(split.c).exponent == 0, "D(c) != 1 for " + format_word(w));
      }
      return tally.result(5, "100 random words, max |k| = " + std::to_string(widest));
    }

    ////////////////////////////////////////////////////////////////////
    // 6. Rigid stabilizer actions
    ////////////////////////////////////////////////////////////////////

    CriterionResult rigid_stabilizers(std::uint64_t seed) {
      auto const&     t = airplane().table;
      std::mt19937_64 rng(seed);
      Tally           tally;
      tally.check(induced_boundary_map(t.get("beta")) == thompson_y0(), "beta != Y0");
      tally.check(induced_boundary_map(t.get("gamma")) == thompson_y1(), "gamma != Y1");
      tally.check(induced_boundary_map(t.get("delta")) == thompson_y2(), "delta != Y2");
      tally.check(induced_hor_map(t.get("alpha")) == thompson_x0(), "alpha != X0");
      tally.check(induced_hor_map(t.get("epsilon")) == thompson_x1(), "epsilon != X1");
      auto x0 = induced_hor_map(t.get("alpha"));
      tally.check(x0.apply(DyadicRational(1, 2)) == DyadicRational(1, 1)
                      && x0.apply(DyadicRational(1, 1)) == DyadicRational(3, 2),
                  "alpha does not send 1/4 to 1/2 and 1/2 to 3/4");
      for (int i = 0; i < 50; ++i) {
        auto f = eval(t, random_word(rng, rist_c0_names, 8));
        auto g = eval(t, random_word(rng, rist_c0_names, 8));
        tally.check(induced_boundary_map(compose(f, g))
                        == compose(induced_boundary_map(f), induced_boundary_map(g)),
                    "boundary map is not functorial");
        auto h = eval(t, random_word(rng, rist_hor_names, 8));
        auto k = eval(t, random_word(rng, rist_hor_names, 8));
        tally.check(induced_hor_map(compose(h, k)) == compose(induced_hor_map(h), induced_hor_map(k)),
                    "horizon map is not functorial");
      }
      return tally.result(6, "five generator maps match breakpoint data; 50 + 50 composed rist words");
    }

    ////////////////////////////////////////////////////////////////////
    // 7. Relations of F
    ////////////////////////////////////////////////////////////////////

    CriterionResult f_relations(std::uint64_t) {
      auto const& interval = interval_system().table;
      auto const& plane    = airplane().table;
      Tally       tally;
      // Juxtaposition composes right to left, so the usual left-to-right
      // relators appear with their letters reversed and inverted.
      std::vector<std::string> const relators{"[X1' X0, X0 X1 X0']", "[X1' X0, X0^2 X1 X0^-2]"};
      std::vector<std::string> const literal{"[X0 X1', X0' X1 X0]", "[X0 X1', X0^-2 X1 X0^2]"};
      auto in_plane = [](std::string s) {
        for (auto [from, to] : {std::pair{"X0", "a"}, std::pair{"X1", "e"}}) {
          for (auto p = s.find(from); p != std::string::npos; p = s.find(from)) {
            s.replace(p, 2, to);
          }
        }
        return s;
      };
      for (auto const& r : relators) {
        tally.check(is_identity(eval(interval, r)), r + " != 1 in the interval group");
        tally.check(is_identity(eval(plane, in_plane(r))), in_plane(r) + " != 1 in <a,e>");
      }
      std::size_t trivial = 0;
      for (auto const& r : literal) {
        bool i = is_identity(eval(interval, r));
        bool p = is_identity(eval(plane, in_plane(r)));
        tally.check(i == p, r + " is judged differently by the two models");
        trivial += i ? 1 : 0;
      }
      return tally.result(7, "both relators trivial in the interval group and <a,e>; the left-to-right forms agree "
                                 "in both models (" + std::to_string(trivial) + " of 2 trivial)");
    }

    ////////////////////////////////////////////////////////////////////
    // 8. Transitivity
    ////////////////////////////////////////////////////////////////////

    CriterionResult transitivity(std::uint64_t seed) {
      Tally tally;
      auto  full = check_k_transitivity(airplane().table, 1, 2, 3, 30);
      for (auto const& f : full.failures) {
        tally.check(false, "five generators: " + f);
      }
      auto comm = check_k_transitivity(airplane_commutator().table, 1, 2, 3, 30);
      for (auto const& f : comm.failures) {
        tally.check(false, "commutator generators: " + f);
      }
      auto pairs = check_k_transitivity(airplane().table, 2, 2, 3, 30, 20, seed);
      for (auto const& f : pairs.failures) {
        tally.check(false, "pairs: " + f);
      }
      auto const t1 = aligned({parse_path("(0,1/2)"), parse_path("(1/4,1/2)"), parse_path("(1/2,1/2)")});
      auto const t2 = aligned({parse_path("(1/2,1/2)"), parse_path("()"), parse_path("(0,1/2)")});
      tally.check(!t1.aligned && t2.aligned, "triple alignment certificate");
      std::ostringstream s;
      s << full.checked << " components: longest word " << full.longest << " (five generators), "
        << comm.longest << " (commutator generators); " << pairs.checked
        << " pairs mapped, longest word " << pairs.longest
        << "; non-aligned triple cannot map to aligned triple";
      return tally.result(8, s.str());
    }

    ////////////////////////////////////////////////////////////////////
    // 9. Alignment invariance
    ////////////////////////////////////////////////////////////////////

    CriterionResult alignment_invariance(std::uint64_t seed) {
      auto const&     a   = airplane();
      auto const&     sys = *a.system;
      std::mt19937_64 rng(seed);
      auto            pool = enumerate_components(2, 2);
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      Tally       tally;
      std::size_t positive = 0;
      for (int i = 0; i < 100; ++i) {
        GroupWord w = random_word(rng, all_five, 8);
        auto      f = eval(a.table, w);
        std::set<std::size_t> chosen;
        while (chosen.size() < 3) {
          chosen.insert(pick(rng));
        }
        std::vector<ComponentPath> before;
        std::vector<ComponentPath> after;
        for (auto k : chosen) {
          before.push_back(pool[k]);
          after.push_back(component_path(sys, map_component(f, path_to_component(sys, pool[k]))));
        }
        bool x = aligned(before).aligned;
        positive += x ? 1 : 0;
        tally.check(x == aligned(after).aligned, "alignment changed under " + format_word(w));
      }
      return tally.result(9, "100 random triples (" + std::to_string(positive) + " aligned)");
    }

    ////////////////////////////////////////////////////////////////////
    // 10. Circularization
    ////////////////////////////////////////////////////////////////////

    struct ExpansionSearch {
      std::map<std::vector<EdgeAddress>, std::vector<EdgeAddress>> images;
      std::size_t                                                  sequences = 0;
    };

    void explore(Expansion const& e, CircularExpansion const& c, int left, ExpansionSearch& s, Tally& tally) {
      ++s.sequences;
      auto direct = circularize(e);
      tally.check(direct.expansion == c.expansion && direct.correspondence == c.correspondence,
                  "step-by-step image differs from the direct image");
      tally.check(is_valid_expansion(c.expansion), "image is not an expansion");
      auto [it, fresh] = s.images.emplace(e.leaves, c.expansion.leaves);
      if (!fresh) {
        tally.check(it->second == c.expansion.leaves, "image depends on the expansion order");
      }
      if (left == 0) {
        return;
      }
      for (auto const& leaf : e.leaves) {
        explore(expand_edge(e, leaf), circular_expand(c, leaf), left - 1, s, tally);
      }
    }

    CriterionResult circularization(std::uint64_t seed) {
      auto const&     a = airplane();
      std::mt19937_64 rng(seed);
      Tally           tally;

      ExpansionSearch search;
      explore(base_expansion(a.system), circular_base(), 3, search, tally);
      std::set<std::vector<EdgeAddress>> distinct;
      for (auto const& [e, c] : search.images) {
        distinct.insert(c);
      }
      tally.check(distinct.size() == search.images.size(), "two expansions share an image");

      // Three full rounds, built in two different orders.
      Expansion         full = full_expansion(a.system, 3);
      std::set<EdgeAddress> internal;
      for (auto const& leaf : full.leaves) {
        for (EdgeAddress p = leaf; !p.is_base();) {
          p = p.parent();
          internal.insert(p);
        }
      }
      auto build = [&](bool shuffled) {
        Expansion                e = base_expansion(a.system);
        CircularExpansion        c = circular_base();
        std::vector<EdgeAddress> ready;
        for (auto const& l : e.leaves) {
          if (internal.count(l) != 0) {
            ready.push_back(l);
          }
        }
        while (!ready.empty()) {
          std::size_t i = 0;
          if (shuffled) {
            i = std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng);
          }
          EdgeAddress x = ready[i];
          ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(i));
          e = expand_edge(e, x);
          c = circular_expand(c, x);
          std::size_t n = a.system->child_count(color_of(*a.system, x));
          for (std::size_t k = 0; k < n; ++k) {
            if (internal.count(x.child(k)) != 0) {
              ready.push_back(x.child(k));
            }
          }
        }
        tally.check(e == full, "incremental build missed the full expansion");
        return c.expansion;
      };
      auto first  = build(false);
      auto second = build(true);
      tally.check(first == second && first == circularize(full).expansion,
                  "three full rounds depend on the order");

      for (int i = 0; i < 100; ++i) {
        auto f = eval(a.table, random_word(rng, all_five, 10));
        auto g = eval(a.table, random_word(rng, all_five, 10));
        tally.check(equals(circularize(compose(f, g)), compose(circularize(f), circularize(g))),
                    "not a homomorphism");
      }
      std::size_t nontrivial = 0;
      for (std::size_t tries = 0; nontrivial < 100 && tries < 10000; ++tries) {
        auto f = eval(a.table, random_word(rng, all_five, 10));
        if (is_identity(f)) {
          continue;
        }
        ++nontrivial;
        tally.check(!is_identity(circularize(f)), "nontrivial element maps to the identity");
      }
      tally.check(nontrivial == 100, "could not sample 100 nontrivial words");
      return tally.result(10, std::to_string(search.sequences) + " expansion sequences ("
                                  + std::to_string(search.images.size())
                                  + " expansions) of length <= 3; 100 pairs; 100 nontrivial words");
    }

    ////////////////////////////////////////////////////////////////////
    // 11. Tree intertwining
    ////////////////////////////////////////////////////////////////////

    CriterionResult tree_intertwining(std::uint64_t) {
      Tally       tally;
      std::size_t checks = 0;
      for (std::size_t depth : {1, 2}) {
        auto r = intertwine_check(depth, 8);
        checks += r.checks;
        for (auto const& m : r.mismatches) {
          tally.check(false, m);
        }
      }
      auto control = intertwine_check(2, 8, shuffled_pairing());
      tally.check(!control.ok(), "shuffled pairing was not rejected");
      return tally.result(11, std::to_string(checks) + " vertex checks pass; shuffled pairing gives "
                                  + std::to_string(control.mismatches.size()) + " mismatches");
    }

    ////////////////////////////////////////////////////////////////////
    // 12. The subgroup E
    ////////////////////////////////////////////////////////////////////

    CriterionResult subgroup_e(std::uint64_t seed) {
      auto const&     t = airplane().table;
      std::mt19937_64 rng(seed);
      Tally           tally;
      for (int i = 0; i < 50; ++i) {
        GroupWord w = random_word(rng, rist_c0_names, 10);
        auto      f = eval(t, w);
        tally.check(is_in_E(f), format_word(w) + " not in E");
        tally.check(!is_in_E(f) || is_in_commutator(f), "E element outside the commutator subgroup");
      }
      tally.check(!is_in_E(t.get("epsilon")), "epsilon in E");
      std::size_t in_e = 0;
      for (int i = 0; i < 100; ++i) {
        auto f = eval(t, random_word(rng, all_five, 10));
        bool e = is_in_E(f);
        in_e += e ? 1 : 0;
        tally.check(!e || is_in_commutator(f), "E element outside the commutator subgroup");
      }
      return tally.result(12, "50 rist words in E; epsilon not; " + std::to_string(in_e)
                                  + " of 100 random words in E, all in the commutator subgroup");
    }
  }  // namespace

  GroupWord random_word(std::mt19937_64& rng, std::vector<std::string> const& names, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> letter(0, names.size() - 1);
    std::uniform_int_distribution<int>         sign(0, 1);
    GroupWord                                  w;
    for (std::size_t n = len(rng); n > 0; --n) {
      auto const& name = names[letter(rng)];
      w.emplace_back(name, sign(rng) == 0 ? 1 : -1);
    }
    return w;
  }

  std::string criterion_title(int id) {
    static std::vector<std::string> const titles{
        "reduction canonicity",
        "exact identities",
        "derivative homomorphism",
        "commutator characterization",
        "semidirect split",
        "rigid stabilizer actions",
        "relations of F",
        "transitivity",
        "alignment invariance",
        "circularization",
        "tree intertwining",
        "subgroup E",
    };
    if (id < 1 || id > criteria_count) {
      throw PreconditionError("no criterion " + std::to_string(id));
    }
    return titles[static_cast<std::size_t>(id - 1)];
  }

  CriterionResult run_criterion(int id, std::uint64_t seed) {
    // Each criterion gets its own stream so that running one alone gives
    // the same result as running the whole suite.
    std::uint64_t s = seed * 1000003ULL + static_cast<std::uint64_t>(id);
    try {
      switch (id) {
        case 1: return reduction_canonicity(s);
        case 2: return exact_identities(s);
        case 3: return derivative_homomorphism(s);
        case 4: return commutator_membership(s);
        case 5: return semidirect(s);
        case 6: return rigid_stabilizers(s);
        case 7: return f_relations(s);
        case 8: return transitivity(s);
        case 9: return alignment_invariance(s);
        case 10: return circularization(s);
        case 11: return tree_intertwining(s);
        case 12: return subgroup_e(s);
        default: break;
      }
    } catch (std::exception const& e) {
      return CriterionResult{id, criterion_title(id), false, std::string("exception: ") + e.what()};
    }
    throw PreconditionError("no criterion " + std::to_string(id));
  }

  std::vector<CriterionResult> run_acceptance(std::uint64_t                                      seed,
                                              std::function<void(CriterionResult const&)> const& on_result) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= criteria_count; ++id) {
      out.push_back(run_criterion(id, seed));
      if (on_result) {
        on_result(out.back());
      }
    }
    return out;
  }

}  // namespace airframe
