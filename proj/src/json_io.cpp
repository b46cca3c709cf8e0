// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems

#include "airframe/json_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "airframe/systems.hpp"

namespace airframe {

  using nlohmann::json;

  namespace {
    json graph_to_json(ReplacementSystem const& sys, Graph const& g) {
      json edges = json::array();
      for (auto const& e : g.edges) {
        edges.push_back({e.id, g.vertices.at(e.source), g.vertices.at(e.target), sys.colors.at(e.color)});
      }
      return {{"vertices", g.vertices}, {"edges", edges}};
    }

    std::size_t vertex_index(Graph const& g, std::string const& v) {
      for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (g.vertices[i] == v) {
          return i;
        }
      }
      throw InputError("unknown vertex \"" + v + "\"");
    }

    Graph graph_from_json(ReplacementSystem const& sys, json const& j) {
      Graph g;
      g.vertices = j.at("vertices").get<std::vector<std::string>>();
      for (auto const& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 4) {
          throw InputError("an edge must be [id, source, target, color]");
        }
        g.edges.push_back(GraphEdge{e[0].get<std::string>(),
                                    vertex_index(g, e[1].get<std::string>()),
                                    vertex_index(g, e[2].get<std::string>()),
                                    sys.color_index(e[3].get<std::string>())});
      }
      return g;
    }

    std::vector<std::string> addresses(ReplacementSystem const& sys, std::vector<EdgeAddress> const& as) {
      std::vector<std::string> out;
      for (auto const& a : as) {
        out.push_back(format_address(sys, a));
      }
      return out;
    }

    std::vector<EdgeAddress> parse_addresses(ReplacementSystem const& sys, json const& j) {
      std::vector<EdgeAddress> out;
      for (auto const& s : j) {
        out.push_back(parse_address(sys, s.get<std::string>()));
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace

  json system_to_json(ReplacementSystem const& sys) {
    json rules = json::array();
    for (std::size_t c = 0; c < sys.rules.size(); ++c) {
      auto const& r = sys.rules[c];
      json        j = graph_to_json(sys, r.graph);
      j["color"]      = sys.colors.at(c);
      j["initial"]    = r.graph.vertices.at(r.initial);
      j["terminal"]   = r.graph.vertices.at(r.terminal);
      j["reversible"] = r.reversible;
      rules.push_back(std::move(j));
    }
    return {{"name", sys.name},
            {"colors", sys.colors},
            {"base", graph_to_json(sys, sys.base)},
            {"rules", rules}};
  }

  ReplacementSystem system_from_json(json const& j) {
    try {
      ReplacementSystem sys;
      sys.name   = j.at("name").get<std::string>();
      sys.colors = j.at("colors").get<std::vector<std::string>>();
      sys.base   = graph_from_json(sys, j.at("base"));
      sys.rules.resize(sys.colors.size());
      std::vector<bool> seen(sys.colors.size(), false);
      for (auto const& r : j.at("rules")) {
        std::size_t c = sys.color_index(r.at("color").get<std::string>());
        if (seen[c]) {
          throw InputError("two rules for color " + sys.colors[c]);
        }
        seen[c]                = true;
        ReplacementRule& rule  = sys.rules[c];
        rule.graph             = graph_from_json(sys, r);
        rule.initial           = vertex_index(rule.graph, r.at("initial").get<std::string>());
        rule.terminal          = vertex_index(rule.graph, r.at("terminal").get<std::string>());
        rule.reversible        = r.value("reversible", false);
      }
      for (std::size_t c = 0; c < seen.size(); ++c) {
        if (!seen[c]) {
          throw InputError("no rule for color " + sys.colors[c]);
        }
      }
      sys.prepare();
      auto report = validate_system(sys);
      if (!report.ok) {
        throw InputError("invalid system: " + report.problems.front());
      }
      return sys;
    } catch (json::exception const& e) {
      throw InputError(std::string("malformed system JSON: ") + e.what());
    }
  }

  SystemRef resolve_system(std::string const& name) {
    for (auto const& b : builtin_names()) {
      if (b == name) {
        return builtin(name).system;
      }
    }
    if (char const* path = std::getenv(system_path_variable)) {
      std::stringstream dirs(path);
      std::string       dir;
      while (std::getline(dirs, dir, ':')) {
        if (dir.empty()) {
          continue;
        }
        std::filesystem::path file = std::filesystem::path(dir) / (name + ".json");
        std::ifstream         in(file);
        if (!in) {
          continue;
        }
        json j;
        try {
          in >> j;
        } catch (json::exception const& e) {
          throw InputError("cannot parse " + file.string() + ": " + e.what());
        }
        return std::make_shared<ReplacementSystem const>(system_from_json(j));
      }
    }
    throw InputError("unknown system \"" + name + "\"");
  }

  json diagram_to_json(GraphPairDiagram const& d) {
    auto const& sys = *d.system;
    json        map = json::array();
    for (auto const& [a, img] : d.cells) {
      json pair = {format_address(sys, a), format_address(sys, img.target)};
      if (img.reversed) {
        pair.push_back("rev");
      }
      map.push_back(std::move(pair));
    }
    return {{"system", sys.name},
            {"domain", addresses(sys, d.domain().leaves)},
            {"range", addresses(sys, d.range().leaves)},
            {"map", map}};
  }

  GraphPairDiagram diagram_from_json(json const& j, SystemResolver const& resolve) {
    try {
      SystemRef        sys = resolve(j.at("system").get<std::string>());
      GraphPairDiagram d{sys, {}};
      for (auto const& pair : j.at("map")) {
        if (!pair.is_array() || pair.size() < 2 || pair.size() > 3
            || (pair.size() == 3 && pair[2] != "rev")) {
          throw InputError("a map entry must be [domain, range] or [domain, range, \"rev\"]");
        }
        auto a = parse_address(*sys, pair[0].get<std::string>());
        auto b = parse_address(*sys, pair[1].get<std::string>());
        if (!d.cells.emplace(a, CellImage{b, pair.size() == 3}).second) {
          throw InputError("domain cell " + pair[0].get<std::string>() + " mapped twice");
        }
      }
      if (j.contains("domain") && parse_addresses(*sys, j["domain"]) != d.domain().leaves) {
        throw InputError("domain list does not match the map");
      }
      if (j.contains("range") && parse_addresses(*sys, j["range"]) != d.range().leaves) {
        throw InputError("range list does not match the map");
      }
      if (!validate(d)) {
        throw InputError("the map is not a valid graph pair diagram");
      }
      return d;
    } catch (json::exception const& e) {
      throw InputError(std::string("malformed diagram JSON: ") + e.what());
    }
  }

}  // namespace airframe
