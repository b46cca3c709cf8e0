// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems
//
// Command-line front end. Exit codes: 0 success, 1 usage or parse error,
// 2 invariant violation or failed check.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "airframe/acceptance.hpp"
#include "airframe/airplane.hpp"
#include "airframe/circularize.hpp"
#include "airframe/components.hpp"
#include "airframe/json_io.hpp"
#include "airframe/systems.hpp"
#include "airframe/tree_embedding.hpp"
#include "airframe/word.hpp"

using namespace airframe;
using nlohmann::json;

namespace {

  constexpr int exit_ok        = 0;
  constexpr int exit_usage     = 1;
  constexpr int exit_invariant = 2;

  struct Options {
    bool          as_json = false;
    std::uint64_t seed    = default_seed;
  };

  std::string join(std::vector<std::string> const& parts) {
    std::string out;
    for (auto const& p : parts) {
      out += (out.empty() ? "" : " ") + p;
    }
    return out;
  }

  GroupWord word_arg(std::vector<std::string> const& parts, GeneratorTable const& table) {
    return parse_group_word(join(parts), table);
  }

  json word_json(GroupWord const& w) {
    json out = json::array();
    for (auto const& [name, e] : w) {
      out.push_back({name, e});
    }
    return out;
  }

  std::string dot_pair(GraphPairDiagram const& d) {
    auto const& sys = *d.system;
    std::string dom = to_dot(sys, realize_graph(d.domain()));
    std::string ran = to_dot(sys, realize_graph(d.range()));
    auto rename = [](std::string s, std::string const& name) {
      auto p = s.find("digraph");
      if (p != std::string::npos) {
        auto brace = s.find('{', p);
        s.replace(p, brace - p, "digraph " + name + " ");
      }
      return s;
    };
    return rename(dom, "domain") + rename(ran, "range");
  }

  json read_json_file(std::string const& path) {
    json j;
    try {
      if (path == "-") {
        std::cin >> j;
      } else {
        std::ifstream in(path);
        if (!in) {
          throw InputError("cannot open " + path);
        }
        in >> j;
      }
    } catch (json::exception const& e) {
      throw InputError("cannot parse " + path + ": " + e.what());
    }
    return j;
  }

  ComponentId component_arg(ReplacementSystem const& sys, std::string const& text) {
    return path_to_component(sys, parse_path(text));
  }

  void print_report_lines(std::vector<std::string> const& lines, std::size_t limit = 20) {
    for (std::size_t i = 0; i < lines.size() && i < limit; ++i) {
      std::cout << "  " << lines[i] << "\n";
    }
    if (lines.size() > limit) {
      std::cout << "  ... " << (lines.size() - limit) << " more\n";
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"airframe: rearrangement groups of edge-replacement systems"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.as_json, "Machine-readable output");
  app.add_option("--seed", opt.seed, "Seed for randomized checks")->capture_default_str();

  int rc = exit_ok;

  // eval
  std::vector<std::string> eval_word;
  std::string              eval_system = "airplane";
  std::string              eval_format = "json";
  auto* eval = app.add_subcommand("eval", "Evaluate a word to its reduced diagram");
  eval->add_option("word", eval_word, "Word, e.g. \"d b d b d b\"")->required();
  eval->add_option("--system", eval_system, "Built-in system")->capture_default_str();
  eval->add_option("--format", eval_format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();
  eval->callback([&] {
    auto const& b = builtin(eval_system);
    auto        d = evaluate_word(b.table, word_arg(eval_word, b.table));
    if (eval_format == "dot") {
      std::cout << dot_pair(d);
    } else {
      json j = diagram_to_json(d);
      j["identity"] = is_identity(d);
      std::cout << j.dump(opt.as_json ? -1 : 2) << "\n";
    }
  });

  // reduce
  std::string reduce_file;
  auto* red = app.add_subcommand("reduce", "Read a diagram JSON file ('-' for stdin) and print it reduced");
  red->add_option("file", reduce_file)->required();
  red->callback([&] {
    auto d = reduce(diagram_from_json(read_json_file(reduce_file)));
    std::cout << diagram_to_json(d).dump(opt.as_json ? -1 : 2) << "\n";
  });

  // d
  std::vector<std::string> d_word;
  auto* deriv = app.add_subcommand("d", "Global derivative and per-extreme derivatives");
  deriv->add_option("word", d_word)->required();
  deriv->callback([&] {
    auto const& a   = airplane();
    auto        f   = reduce(evaluate_word(a.table, word_arg(d_word, a.table)));
    auto        tab = derivative_table(f);
    auto        tot = global_derivative(f);
    if (opt.as_json) {
      json rows = json::array();
      for (auto const& [p, v] : tab) {
        rows.push_back({{"extreme", format_address(*a.system, p.ray)}, {"log2", v.exponent}});
      }
      std::cout << json{{"log2", tot.exponent}, {"extremes", rows}}.dump() << "\n";
      return;
    }
    std::cout << "log2 D = " << tot.exponent << "\n";
    for (auto const& [p, v] : tab) {
      std::cout << "  extreme " << format_address(*a.system, p.ray) << ": " << v.exponent << "\n";
    }
  });

  // commutator
  std::vector<std::string> c_word;
  auto* comm = app.add_subcommand("commutator", "Commutator-subgroup membership and the split f = c e^k");
  comm->add_option("word", c_word)->required();
  comm->callback([&] {
    auto const& a     = airplane();
    auto        f     = evaluate_word(a.table, word_arg(c_word, a.table));
    auto        split = semidirect_split(f);
    if (!equals(f, compose(split.c, power(a.table.get("epsilon"), split.k)))) {
      throw InvariantError("split does not recompose");
    }
    json j{{"member", is_in_commutator(f)}, {"k", split.k}, {"c", diagram_to_json(split.c)}};
    if (opt.as_json) {
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "member: " << (is_in_commutator(f) ? "yes" : "no") << "\n"
                << "k: " << split.k << "\n"
                << "c: " << j["c"].dump() << "\n";
    }
  });

  // orbit
  std::string orbit_src;
  std::string orbit_tgt;
  std::size_t orbit_len    = 8;
  std::size_t orbit_cap    = 2000000;
  std::string orbit_system = "airplane";
  auto* orbit = app.add_subcommand("orbit", "Shortlex-least word moving one component to another");
  orbit->add_option("src", orbit_src, "Component path, e.g. \"(1/2,1/2);(3/4,1/2)\" or \"()\"")->required();
  orbit->add_option("tgt", orbit_tgt)->required();
  orbit->add_option("--max-len", orbit_len)->capture_default_str();
  orbit->add_option("--state-cap", orbit_cap)->capture_default_str();
  orbit->add_option("--system", orbit_system, "airplane or airplane_commutator")
      ->check(CLI::IsMember({"airplane", "airplane_commutator"}))
      ->capture_default_str();
  orbit->callback([&] {
    auto const& b = builtin(orbit_system);
    auto        w = orbit_search(b.table,
                          component_arg(*b.system, orbit_src),
                          component_arg(*b.system, orbit_tgt),
                          orbit_len,
                          orbit_cap);
    if (opt.as_json) {
      json j{{"found", w.has_value()}};
      if (w) {
        j["word"]   = format_word(*w);
        j["length"] = w->size();
      }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << (w ? (w->empty() ? std::string("(empty word)") : format_word(*w)) : "not found") << "\n";
    }
  });

  // transitivity
  std::size_t trans_k       = 1;
  std::size_t trans_depth   = 2;
  int         trans_den     = 8;
  std::size_t trans_bound   = 30;
  std::size_t trans_samples = 20;
  std::string trans_system  = "airplane";
  auto* trans = app.add_subcommand("transitivity", "Check that components (k=1) or pairs (k=2) reach a reference");
  trans->add_option("--k", trans_k)->check(CLI::IsMember({1, 2}))->capture_default_str();
  trans->add_option("--depth", trans_depth)->capture_default_str();
  trans->add_option("--denominator", trans_den, "Power of 2")->capture_default_str();
  trans->add_option("--word-bound", trans_bound)->capture_default_str();
  trans->add_option("--samples", trans_samples, "Pairs sampled when k=2")->capture_default_str();
  trans->add_option("--system", trans_system)
      ->check(CLI::IsMember({"airplane", "airplane_commutator"}))
      ->capture_default_str();
  trans->callback([&] {
    if (trans_den < 2 || (trans_den & (trans_den - 1)) != 0) {
      throw InputError("--denominator must be a power of 2");
    }
    int e = 0;
    while ((1 << e) < trans_den) {
      ++e;
    }
    auto r = check_k_transitivity(builtin(trans_system).table, trans_k, trans_depth, e, trans_bound,
                                  trans_samples, opt.seed);
    if (opt.as_json) {
      std::cout << json{{"k", r.k},
                        {"checked", r.checked},
                        {"longest", r.longest},
                        {"failures", r.failures},
                        {"ok", r.ok()}}
                       .dump()
                << "\n";
    } else {
      std::cout << "k=" << r.k << " checked=" << r.checked << " longest=" << r.longest
                << " failures=" << r.failures.size() << "\n";
      print_report_lines(r.failures);
    }
    rc = r.ok() ? exit_ok : exit_invariant;
  });

  // circularize
  std::vector<std::string> circ_word;
  auto* circ = app.add_subcommand("circularize", "Image of an Airplane word in the circular system");
  circ->add_option("word", circ_word)->required();
  circ->callback([&] {
    auto const& a = airplane();
    auto        d = circularize(evaluate_word(a.table, word_arg(circ_word, a.table)));
    std::cout << diagram_to_json(d).dump(opt.as_json ? -1 : 2) << "\n";
  });

  // intertwine
  std::size_t tw_depth    = 2;
  int         tw_bound    = 8;
  bool        tw_shuffled = false;
  auto* tw = app.add_subcommand("intertwine", "Compare the two tree actions on a truncated tree");
  tw->add_option("--depth", tw_depth)->capture_default_str();
  tw->add_option("--bound", tw_bound, "Power of 2")->capture_default_str();
  tw->add_flag("--shuffled", tw_shuffled, "Use a deliberately wrong generator pairing");
  tw->callback([&] {
    auto r = intertwine_check(tw_depth, tw_bound, tw_shuffled ? shuffled_pairing() : canonical_pairing());
    json j{{"vertices", r.vertices}, {"checks", r.checks}, {"mismatches", r.mismatches}, {"ok", r.ok()}};
    if (opt.as_json) {
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "vertices=" << r.vertices << " checks=" << r.checks
                << " mismatches=" << r.mismatches.size() << "\n";
      print_report_lines(r.mismatches);
    }
    rc = r.ok() ? exit_ok : exit_invariant;
  });

  // systems
  auto* systems = app.add_subcommand("systems", "Built-in replacement systems");
  systems->require_subcommand(1);
  systems->add_subcommand("list", "List built-in systems")->callback([&] {
    for (auto const& n : builtin_names()) {
      auto const& b = builtin(n);
      if (opt.as_json) {
        continue;
      }
      std::cout << n << " (" << b.system->base.edges.size() << " base edges, "
                << b.table.names().size() << " generators)\n";
    }
    if (opt.as_json) {
      std::cout << json(builtin_names()).dump() << "\n";
    }
  });
  std::string show_name;
  auto* show = systems->add_subcommand("show", "Print a system as JSON");
  show->add_option("name", show_name)->required();
  show->callback([&] {
    auto sys = resolve_system(show_name);
    std::cout << system_to_json(*sys).dump(opt.as_json ? -1 : 2) << "\n";
  });
  std::string export_dir;
  auto* exp = systems->add_subcommand("export", "Write every built-in system to DIR/<name>.json");
  exp->add_option("dir", export_dir)->required();
  exp->callback([&] {
    std::filesystem::create_directories(export_dir);
    for (auto const& n : builtin_names()) {
      std::ofstream out(std::filesystem::path(export_dir) / (n + ".json"));
      out << system_to_json(*builtin(n).system).dump(2) << "\n";
      if (!out) {
        throw InputError("cannot write to " + export_dir);
      }
    }
  });

  // check
  std::string suite = "core";
  int         only  = 0;
  auto* check = app.add_subcommand("check", "Run the acceptance suite");
  check->add_option("--suite", suite)->check(CLI::IsMember({"core"}))->capture_default_str();
  check->add_option("--criterion", only, "Run a single criterion (1-12)")->check(CLI::Range(1, criteria_count));
  check->callback([&] {
    std::vector<CriterionResult> results;
    auto print = [&](CriterionResult const& r) {
      if (!opt.as_json) {
        std::cout << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": " << r.detail
                  << std::endl;
      }
    };
    if (only != 0) {
      results.push_back(run_criterion(only, opt.seed));
      print(results.back());
    } else {
      results = run_acceptance(opt.seed, print);
    }
    bool all = std::all_of(results.begin(), results.end(), [](auto const& r) { return r.passed; });
    if (opt.as_json) {
      json rows = json::array();
      for (auto const& r : results) {
        rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
      }
      std::cout << json{{"seed", opt.seed}, {"passed", all}, {"criteria", rows}}.dump() << "\n";
    } else {
      std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
    }
    rc = all ? exit_ok : exit_invariant;
  });

  // CLI11 reads an argument of the form "[x,y]" as a list of values, which
  // would split a commutator word. A trailing space keeps it whole.
  std::vector<std::string> args(argv, argv + argc);
  for (auto& a : args) {
    if (a.size() >= 2 && a.front() == '[' && a.back() == ']') {
      a += ' ';
    }
  }
  std::vector<char*> arg_ptrs;
  for (auto& a : args) {
    arg_ptrs.push_back(a.data());
  }

  try {
    app.parse(argc, arg_ptrs.data());
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  } catch (InvariantError const& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return exit_invariant;
  } catch (InputError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (PreconditionError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invariant;
  }
  return rc;
}
