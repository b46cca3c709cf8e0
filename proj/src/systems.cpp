// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems

#include "airframe/systems.hpp"

#include <map>

namespace airframe {

  namespace {
    struct EdgeSpec {
      std::string id;
      std::string source;
      std::string target;
      std::string color;
    };

    Graph make_graph(std::vector<std::string> const& colors,
                     std::vector<std::string>        vertices,
                     std::vector<EdgeSpec> const&    edges) {
      Graph g;
      g.vertices = std::move(vertices);
      auto vindex = [&g](std::string const& v) {
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
          if (g.vertices[i] == v) {
            return i;
          }
        }
        throw std::logic_error("unknown vertex " + v);
      };
      auto cindex = [&colors](std::string const& c) {
        for (std::size_t i = 0; i < colors.size(); ++i) {
          if (colors[i] == c) {
            return i;
          }
        }
        throw std::logic_error("unknown color " + c);
      };
      for (auto const& e : edges) {
        g.edges.push_back(GraphEdge{e.id, vindex(e.source), vindex(e.target), cindex(e.color)});
      }
      return g;
    }

    ReplacementRule make_rule(std::vector<std::string> const& colors,
                              std::vector<std::string>        vertices,
                              std::vector<EdgeSpec> const&    edges,
                              bool                            reversible = false) {
      ReplacementRule rule;
      rule.graph      = make_graph(colors, std::move(vertices), edges);
      rule.initial    = 0;
      rule.terminal   = 1;
      rule.reversible = reversible;
      return rule;
    }

    SystemRef finish(ReplacementSystem sys) {
      sys.prepare();
      auto report = validate_system(sys);
      if (!report.ok) {
        throw std::logic_error("built-in system " + sys.name + " is invalid: "
                               + report.problems.front());
      }
      return std::make_shared<ReplacementSystem const>(std::move(sys));
    }

    // The binary subdivision rule shared by the interval and circle systems.
    ReplacementRule halving_rule(std::vector<std::string> const& colors) {
      return make_rule(colors, {"vi", "vt", "m"}, {{"0", "vi", "m", "black"}, {"1", "m", "vt", "black"}});
    }

    void add_cells(GeneratorTable&                 table,
                   std::string const&              name,
                   CellList const&                 cells,
                   std::vector<std::string> const& aliases = {}) {
      GraphPairDiagram d = diagram_from_cells(table.system(), cells);
      if (!validate(d)) {
        throw std::logic_error("built-in generator " + name + " is not a valid diagram");
      }
      table.add(name, std::move(d), aliases);
    }
  }  // namespace

  GraphPairDiagram diagram_from_cells(SystemRef const& sys, CellList const& cells) {
    GraphPairDiagram d{sys, {}};
    for (auto const& [from, to, rev] : cells) {
      auto a = parse_address(*sys, from);
      if (!d.cells.emplace(a, CellImage{parse_address(*sys, to), rev}).second) {
        throw InputError("domain cell " + from + " listed twice");
      }
    }
    return d;
  }

  BuiltinSystem const& airplane() {
    static BuiltinSystem const instance = [] {
      ReplacementSystem sys;
      sys.name   = "airplane";
      sys.colors = {"red", "blue"};
      auto const& c = sys.colors;
      sys.base = make_graph(c,
                            {"cL", "cR", "xL", "xR"},
                            {{"bL", "cL", "xL", "blue"},
                             {"bR", "cR", "xR", "blue"},
                             {"rT", "cR", "cL", "red"},
                             {"rB", "cL", "cR", "red"}});
      sys.rules.push_back(make_rule(c,
                                    {"vi", "vt", "m", "n"},
                                    {{"0", "vi", "m", "red"},
                                     {"1", "m", "vt", "red"},
                                     {"2", "m", "n", "blue"}}));
      sys.rules.push_back(make_rule(c,
                                    {"vi", "vt", "p0", "p1"},
                                    {{"0", "p0", "vi", "blue"},
                                     {"1", "p1", "p0", "red"},
                                     {"2", "p0", "p1", "red"},
                                     {"3", "p1", "vt", "blue"}},
                                    true));
      BuiltinSystem out{finish(std::move(sys)), {}};
      out.table = GeneratorTable(out.system);
      auto& t   = out.table;
      add_cells(t,
                "alpha",
                {{"bL.3", "bL", false},
                 {"bL.1", "rB", false},
                 {"bL.2", "rT", false},
                 {"bL.0", "bR.0", true},
                 {"rT", "bR.1", false},
                 {"rB", "bR.2", false},
                 {"bR", "bR.3", false}},
                {"a"});
      add_cells(t,
                "beta",
                {{"bL", "rT.2", false},
                 {"rT", "rT.0", false},
                 {"rB.0", "rT.1", false},
                 {"rB.1", "rB", false},
                 {"rB.2", "bL", false},
                 {"bR", "bR", false}},
                {"b"});
      add_cells(t,
                "gamma",
                {{"bL", "bL", false},
                 {"bR", "bR", false},
                 {"rB", "rB", false},
                 {"rT.0", "rT.0-0", false},
                 {"rT.1-0", "rT.0-1", false},
                 {"rT.1-1", "rT.1", false},
                 {"rT.2", "rT.0-2", false},
                 {"rT.1-2", "rT.2", false}},
                {"g"});
      add_cells(t,
                "delta",
                {{"bL", "bR", false}, {"bR", "bL", false}, {"rT", "rB", false}, {"rB", "rT", false}},
                {"d"});
      add_cells(t,
                "epsilon",
                {{"bL", "bL", false},
                 {"rT", "rT", false},
                 {"rB", "rB", false},
                 {"bR.0-3", "bR.0", false},
                 {"bR.0-1", "bR.2", false},
                 {"bR.0-2", "bR.1", false},
                 {"bR.0-0", "bR.3-0", true},
                 {"bR.1", "bR.3-1", false},
                 {"bR.2", "bR.3-2", false},
                 {"bR.3", "bR.3-3", false}},
                {"e"});
      return out;
    }();
    return instance;
  }

  BuiltinSystem const& airplane_commutator() {
    static BuiltinSystem const instance = [] {
      auto const&   base = airplane();
      BuiltinSystem out{base.system, GeneratorTable(base.system)};
      std::vector<std::pair<std::string, std::string>> const plain
          = {{"alpha", "a"}, {"beta", "b"}, {"gamma", "g"}, {"delta", "d"}};
      for (auto const& [name, alias] : plain) {
        out.table.add(name, base.table.get(name), {alias});
      }
      out.table.add("c1",
                    evaluate_word(base.table,
                                  {{"delta", 1}, {"epsilon", 1}, {"delta", -1}, {"epsilon", -1}}));
      out.table.add("c2",
                    evaluate_word(base.table,
                                  {{"epsilon", -1},
                                   {"epsilon", -1},
                                   {"alpha", 1},
                                   {"epsilon", 1},
                                   {"alpha", -1},
                                   {"epsilon", 1}}));
      return out;
    }();
    return instance;
  }

  BuiltinSystem const& basilica() {
    static BuiltinSystem const instance = [] {
      ReplacementSystem sys;
      sys.name   = "basilica";
      sys.colors = {"black"};
      auto const& c = sys.colors;
      sys.base = make_graph(c,
                            {"A", "B"},
                            {{"t", "A", "B", "black"},
                             {"b", "B", "A", "black"},
                             {"lA", "A", "A", "black"},
                             {"lB", "B", "B", "black"}});
      sys.rules.push_back(make_rule(c,
                                    {"vi", "vt", "m"},
                                    {{"0", "vi", "m", "black"},
                                     {"1", "m", "vt", "black"},
                                     {"2", "m", "m", "black"}}));
      BuiltinSystem out{finish(std::move(sys)), {}};
      out.table = GeneratorTable(out.system);
      auto& t   = out.table;
      add_cells(t,
                "t1",
                {{"t", "lB.0", false},
                 {"b", "lB.1", false},
                 {"lA.0", "b", false},
                 {"lA.1", "t", false},
                 {"lA.2", "lA", false},
                 {"lB", "lB.2", false}});
      add_cells(t,
                "t2",
                {{"t", "t.1", false},
                 {"b.0", "b", false},
                 {"b.1", "t.0", false},
                 {"b.2", "lA", false},
                 {"lA", "t.2", false},
                 {"lB", "lB", false}});
      add_cells(t,
                "t3",
                {{"t.0-0", "t.0", false},
                 {"t.0-1", "t.1-0", false},
                 {"t.1", "t.1-1", false},
                 {"t.0-2", "t.2", false},
                 {"t.2", "t.1-2", false},
                 {"b", "b", false},
                 {"lA", "lA", false},
                 {"lB", "lB", false}});
      add_cells(t,
                "t4",
                {{"t", "b", false}, {"b", "t", false}, {"lA", "lB", false}, {"lB", "lA", false}});
      return out;
    }();
    return instance;
  }

  BuiltinSystem const& interval_system() {
    static BuiltinSystem const instance = [] {
      ReplacementSystem sys;
      sys.name   = "interval";
      sys.colors = {"black"};
      sys.base   = make_graph(sys.colors, {"l", "r"}, {{"I", "l", "r", "black"}});
      sys.rules.push_back(halving_rule(sys.colors));
      BuiltinSystem out{finish(std::move(sys)), {}};
      out.table = GeneratorTable(out.system);
      add_cells(out.table,
                "X0",
                {{"I.0-0", "I.0", false}, {"I.0-1", "I.1-0", false}, {"I.1", "I.1-1", false}});
      add_cells(out.table,
                "X1",
                {{"I.0", "I.0", false},
                 {"I.1-0-0", "I.1-0", false},
                 {"I.1-0-1", "I.1-1-0", false},
                 {"I.1-1", "I.1-1-1", false}});
      return out;
    }();
    return instance;
  }

  BuiltinSystem const& circle_system() {
    static BuiltinSystem const instance = [] {
      ReplacementSystem sys;
      sys.name   = "circle";
      sys.colors = {"black"};
      sys.base   = make_graph(sys.colors,
                            {"w0", "w1"},
                            {{"c0", "w0", "w1", "black"}, {"c1", "w1", "w0", "black"}});
      sys.rules.push_back(halving_rule(sys.colors));
      BuiltinSystem out{finish(std::move(sys)), {}};
      out.table = GeneratorTable(out.system);
      add_cells(out.table,
                "Y0",
                {{"c0", "c0.0", false}, {"c1.0", "c0.1", false}, {"c1.1", "c1", false}});
      add_cells(out.table,
                "Y1",
                {{"c0.0", "c0.0-0", false},
                 {"c0.1-0", "c0.0-1", false},
                 {"c0.1-1", "c0.1", false},
                 {"c1", "c1", false}});
      add_cells(out.table, "Y2", {{"c0", "c1", false}, {"c1", "c0", false}});
      return out;
    }();
    return instance;
  }

  BuiltinSystem const& circular_airplane() {
    static BuiltinSystem const instance = [] {
      ReplacementSystem sys;
      sys.name   = "circular_airplane";
      sys.colors = {"red", "blue"};
      auto const& c = sys.colors;
      sys.base = make_graph(c,
                            {"w0", "w1", "w2", "w3", "w4", "w5"},
                            {{"g0", "w0", "w1", "blue"},
                             {"g1", "w1", "w2", "red"},
                             {"g2", "w2", "w3", "blue"},
                             {"g3", "w3", "w4", "blue"},
                             {"g4", "w4", "w5", "red"},
                             {"g5", "w5", "w0", "blue"}});
      sys.rules.push_back(make_rule(c,
                                    {"q0", "q4", "q1", "q2", "q3"},
                                    {{"0", "q0", "q1", "red"},
                                     {"1", "q1", "q2", "blue"},
                                     {"2", "q2", "q3", "blue"},
                                     {"3", "q3", "q4", "red"}}));
      sys.rules.push_back(make_rule(c,
                                    {"q0", "q3", "q1", "q2"},
                                    {{"0", "q0", "q1", "blue"},
                                     {"1", "q1", "q2", "red"},
                                     {"2", "q2", "q3", "blue"}}));
      BuiltinSystem out{finish(std::move(sys)), {}};
      out.table = GeneratorTable(out.system);
      return out;
    }();
    return instance;
  }

  std::vector<std::string> builtin_names() {
    return {"airplane", "airplane_commutator", "basilica", "interval", "circle", "circular_airplane"};
  }

  BuiltinSystem const& builtin(std::string const& name) {
    if (name == "airplane") {
      return airplane();
    }
    if (name == "airplane_commutator") {
      return airplane_commutator();
    }
    if (name == "basilica") {
      return basilica();
    }
    if (name == "interval") {
      return interval_system();
    }
    if (name == "circle") {
      return circle_system();
    }
    if (name == "circular_airplane") {
      return circular_airplane();
    }
    throw InputError("unknown built-in system \"" + name + "\"");
  }

  std::pair<DyadicRational, DyadicRational> unit_cell(ReplacementSystem const& sys,
                                                      EdgeAddress const&       a) {
    DyadicRational lo{0};
    DyadicRational hi{1};
    if (sys.name == "circle") {
      lo = a.base == 0 ? DyadicRational(0) : DyadicRational(1, 1);
      hi = a.base == 0 ? DyadicRational(1, 1) : DyadicRational(1);
    } else if (sys.name != "interval") {
      throw PreconditionError("unit cells exist only in the interval and circle systems");
    }
    for (auto i : a.path) {
      auto mid = midpoint(lo, hi);
      (i == 0 ? hi : lo) = mid;
    }
    return {lo, hi};
  }

  PLMap diagram_pl_map(GraphPairDiagram const& d) {
    auto const&             sys    = *d.system;
    PLDomain                domain = sys.name == "circle" ? PLDomain::circle : PLDomain::interval;
    std::vector<PLMap::Point> pts;
    for (auto const& [a, img] : d.cells) {
      auto [x0, x1] = unit_cell(sys, a);
      auto [y0, y1] = unit_cell(sys, img.target);
      pts.emplace_back(x0, y0);
      pts.emplace_back(x1, y1);
    }
    return PLMap(domain, std::move(pts));
  }

  namespace {
    DyadicRational q(std::int64_t num, int exp) {
      return DyadicRational(num, exp);
    }
  }  // namespace

  PLMap thompson_x0() {
    return PLMap(PLDomain::interval, {{q(0, 0), q(0, 0)}, {q(1, 2), q(1, 1)}, {q(1, 1), q(3, 2)}, {q(1, 0), q(1, 0)}});
  }

  PLMap thompson_x1() {
    return PLMap(PLDomain::interval,
                 {{q(0, 0), q(0, 0)},
                  {q(1, 1), q(1, 1)},
                  {q(5, 3), q(3, 2)},
                  {q(3, 2), q(7, 3)},
                  {q(1, 0), q(1, 0)}});
  }

  PLMap thompson_y0() {
    return PLMap(PLDomain::circle, {{q(0, 0), q(0, 0)}, {q(1, 1), q(1, 2)}, {q(3, 2), q(1, 1)}});
  }

  PLMap thompson_y1() {
    return PLMap(PLDomain::circle,
                 {{q(0, 0), q(0, 0)}, {q(1, 2), q(1, 3)}, {q(3, 3), q(1, 2)}, {q(1, 1), q(1, 1)}});
  }

  PLMap thompson_y2() {
    return PLMap(PLDomain::circle, {{q(0, 0), q(1, 1)}});
  }

}  // namespace airframe
