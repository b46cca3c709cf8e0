// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems

#include "airframe/components.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace airframe {

  namespace {
    DyadicRational const zero{0};
    DyadicRational const half{1, 1};
    DyadicRational const one{1};
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Component paths
  ////////////////////////////////////////////////////////////////////////

  ComponentPath component_path(ReplacementSystem const& sys, ComponentId const& c) {
    require_airplane(sys);
    ComponentPath out;
    ComponentId   cur = c;
    while (!cur.is_central()) {
      EdgeAddress const& a    = *cur.creator;
      EdgeAddress        root = ray_root(sys, a);
      auto [lo, hi]           = ray_interval(sys, a);
      out.push_back(PathStep{ray_angle(sys, root), midpoint(lo, hi)});
      cur = ray_component(sys, root);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::size_t depth(ReplacementSystem const& sys, ComponentId const& c) {
    return component_path(sys, c).size();
  }

  ComponentId path_to_component(ReplacementSystem const& sys, ComponentPath const& p) {
    require_airplane(sys);
    ComponentId cur = ComponentId::central();
    for (std::size_t i = 0; i < p.size(); ++i) {
      auto const& [theta, l] = p[i];
      if (theta < zero || theta >= one) {
        throw InputError("angle " + theta.str() + " is outside [0,1)");
      }
      if (l <= zero || l >= one) {
        throw InputError("position " + l.str() + " is outside (0,1)");
      }
      EdgeAddress root;
      if (cur.is_central() && (theta == zero || theta == half)) {
        root = EdgeAddress{theta == zero ? base_right : base_left, {}};
      } else {
        if (!cur.is_central() && (theta == zero || theta == half)) {
          throw InputError("angle " + theta.str() + " does not start a ray at depth "
                           + std::to_string(i + 1));
        }
        auto [first, second] = boundary_reds(sys, cur);
        Arc  arc             = red_arc(sys, first);
        EdgeAddress red      = theta < arc.hi ? first : second;
        arc                  = red_arc(sys, red);
        while (true) {
          auto mid = midpoint(arc.lo, arc.hi);
          if (theta == mid) {
            break;
          }
          if (theta < mid) {
            red    = red.child(red_first_half);
            arc.hi = mid;
          } else {
            red    = red.child(red_second_half);
            arc.lo = mid;
          }
        }
        root = red.child(red_new_ray);
      }
      EdgeAddress    a = root;
      bool           f = true;
      DyadicRational lo{0};
      DyadicRational hi{1};
      while (true) {
        auto mid = midpoint(lo, hi);
        if (l == mid) {
          break;
        }
        std::size_t k = l < mid ? inner_child(f) : outer_child(f);
        (l < mid ? hi : lo) = mid;
        f = (k == blue_near_initial) ? !f : f;
        a = a.child(k);
      }
      cur = ComponentId::created_by(std::move(a));
    }
    return cur;
  }

  std::string format_path(ComponentPath const& p) {
    if (p.empty()) {
      return "()";
    }
    std::string out;
    for (auto const& [theta, l] : p) {
      if (!out.empty()) {
        out += ';';
      }
      out += "(" + theta.str() + "," + l.str() + ")";
    }
    return out;
  }

  ComponentPath parse_path(std::string const& text) {
    ComponentPath out;
    std::string   s;
    for (char ch : text) {
      if (ch != ' ' && ch != '\t') {
        s += ch;
      }
    }
    if (s.empty() || s == "()") {
      return out;
    }
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] != '(') {
        throw InputError("expected '(' at offset " + std::to_string(pos) + " in path");
      }
      auto comma = s.find(',', pos);
      auto close = s.find(')', pos);
      if (comma == std::string::npos || close == std::string::npos || comma > close) {
        throw InputError("malformed step at offset " + std::to_string(pos) + " in path");
      }
      try {
        out.push_back(PathStep{DyadicRational::parse(s.substr(pos + 1, comma - pos - 1)),
                               DyadicRational::parse(s.substr(comma + 1, close - comma - 1))});
      } catch (std::exception const& e) {
        throw InputError("malformed coordinate at offset " + std::to_string(pos) + ": " + e.what());
      }
      pos = close + 1;
      if (pos < s.size()) {
        if (s[pos] != ';') {
          throw InputError("expected ';' at offset " + std::to_string(pos) + " in path");
        }
        ++pos;
        if (pos == s.size()) {
          throw InputError("trailing ';' in path");
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Action on components
  ////////////////////////////////////////////////////////////////////////

  ComponentId map_component(GraphPairDiagram const& f, ComponentId const& c) {
    auto const& sys = *f.system;
    EdgeAddress a   = boundary_reds(sys, c).first;
    while (true) {
      if (auto img = image_of(f, a)) {
        return component_of_red(sys, img->target);
      }
      a = a.child(red_first_half);
    }
  }

  namespace {
    // Smallest expansion in which `a` is a leaf.
    Expansion expansion_with_leaf(SystemRef const& sys, EdgeAddress const& a) {
      Expansion   e = base_expansion(sys);
      EdgeAddress p{a.base, {}};
      for (auto i : a.path) {
        e = expand_edge(e, p);
        p = p.child(i);
      }
      return e;
    }
  }  // namespace

  ComponentId map_component_by_expansion(GraphPairDiagram const& f, ComponentId const& c) {
    auto const& sys            = *f.system;
    auto [first, second]       = boundary_reds(sys, c);
    Expansion        need      = expansion_with_leaf(f.system, first);
    Expansion        target    = common_refinement(f.domain(), need);
    GraphPairDiagram expanded  = refine_domain(f, target);
    std::set<ComponentId> images;
    for (auto const& red : {first, second}) {
      for (auto const& leaf : leaves_under(target.leaves, red)) {
        auto const& img = expanded.cells.at(leaf);
        if (color_of(sys, leaf) == red_color
            && component_of_red(sys, leaf) == c) {
          images.insert(component_of_red(sys, img.target));
        }
      }
    }
    if (images.size() != 1) {
      throw InvariantError("boundary of a component does not map into a single component");
    }
    return *images.begin();
  }

  ////////////////////////////////////////////////////////////////////////
  // Alignment
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Whether d lies on the connecting path from the central component to c.
    bool on_central_path(ComponentPath const& d, ComponentPath const& c) {
      if (d.size() > c.size()) {
        return false;
      }
      if (d.empty()) {
        return true;
      }
      std::size_t n = d.size();
      if (!std::equal(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(n - 1), c.begin())) {
        return false;
      }
      return d[n - 1].angle == c[n - 1].angle && d[n - 1].position <= c[n - 1].position;
    }

    ComponentPath meet(ComponentPath const& a, ComponentPath const& b) {
      ComponentPath out;
      std::size_t   n = std::min(a.size(), b.size());
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == b[i]) {
          out.push_back(a[i]);
          continue;
        }
        if (a[i].angle == b[i].angle) {
          out.push_back(PathStep{a[i].angle, std::min(a[i].position, b[i].position)});
        }
        break;
      }
      return out;
    }

    // Order along a path from the central component.
    bool height_less(ComponentPath const& x, ComponentPath const& y) {
      if (x.size() != y.size()) {
        return x.size() < y.size();
      }
      return x.empty() ? false : x.back().position < y.back().position;
    }
  }  // namespace

  bool on_connecting_path(ComponentPath const& a,
                          ComponentPath const& b,
                          ComponentPath const& k) {
    return on_central_path(k, a) != on_central_path(k, b) || k == meet(a, b);
  }

  AlignmentResult aligned(std::vector<ComponentPath> const& cs) {
    if (cs.size() < 2) {
      throw PreconditionError("alignment needs at least two components");
    }
    std::set<ComponentPath> distinct(cs.begin(), cs.end());
    if (distinct.size() != cs.size()) {
      throw PreconditionError("alignment needs distinct components");
    }
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        auto const& a = cs[i];
        auto const& b = cs[j];
        bool all = std::all_of(cs.begin(), cs.end(), [&](ComponentPath const& k) {
          return on_connecting_path(a, b, k);
        });
        if (!all) {
          continue;
        }
        ComponentPath              m = meet(a, b);
        std::vector<ComponentPath> near_a, near_b, at_meet;
        for (auto const& k : cs) {
          bool in_a = on_central_path(k, a);
          bool in_b = on_central_path(k, b);
          if (in_a && !in_b) {
            near_a.push_back(k);
          } else if (in_b && !in_a) {
            near_b.push_back(k);
          } else {
            at_meet.push_back(k);
          }
        }
        std::sort(near_a.begin(), near_a.end(), [](auto const& x, auto const& y) {
          return height_less(y, x);
        });
        std::sort(near_b.begin(), near_b.end(), height_less);
        AlignmentResult out{true, near_a};
        out.ordered.insert(out.ordered.end(), at_meet.begin(), at_meet.end());
        out.ordered.insert(out.ordered.end(), near_b.begin(), near_b.end());
        return out;
      }
    }
    return AlignmentResult{false, {}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Letters and memoized actions
  ////////////////////////////////////////////////////////////////////////

  std::size_t ComponentHash::operator()(ComponentId const& c) const noexcept {
    if (c.is_central()) {
      return 0x9e3779b97f4a7c15ULL;
    }
    std::size_t h = std::hash<std::size_t>{}(c.creator->base) + 1;
    for (auto i : c.creator->path) {
      h = h * 1000003ULL ^ (i + 0x51ULL);
    }
    return h;
  }

  ActionCache::ActionCache(std::vector<Letter> letters)
      : _letters(std::move(letters)), _memo(_letters.size()) {}

  ComponentId ActionCache::apply(std::size_t letter, ComponentId const& c) {
    auto& memo = _memo.at(letter);
    auto  it   = memo.find(c);
    if (it != memo.end()) {
      return it->second;
    }
    ComponentId out = map_component(_letters[letter].diagram, c);
    memo.emplace(c, out);
    return out;
  }

  std::vector<Letter> generator_letters(GeneratorTable const& table) {
    std::vector<Letter> out;
    for (auto const& name : table.names()) {
      out.push_back(Letter{name, {{name, 1}}, table.get(name)});
    }
    for (auto const& name : table.names()) {
      out.push_back(Letter{name + "^-1", {{name, -1}}, table.get_inverse(name)});
    }
    return out;
  }

  Letter composite_letter(GeneratorTable const& table, std::string label, GroupWord const& word) {
    return Letter{std::move(label), word, evaluate_word(table, word)};
  }

  namespace {
    std::size_t word_length(GroupWord const& w) {
      std::size_t n = 0;
      for (auto const& [name, e] : w) {
        n += static_cast<std::size_t>(e < 0 ? -e : e);
      }
      return n;
    }

    // Cancels adjacent inverse pairs and merges equal neighbours.
    GroupWord free_reduce(GroupWord const& w) {
      GroupWord out;
      for (auto const& [name, e] : w) {
        if (e == 0) {
          continue;
        }
        if (!out.empty() && out.back().first == name) {
          out.back().second += e;
          if (out.back().second == 0) {
            out.pop_back();
          }
        } else {
          out.emplace_back(name, e);
        }
      }
      return out;
    }

    // Letters in the order they are applied; the word lists them last first.
    GroupWord word_of(std::vector<Letter> const& letters, std::vector<std::size_t> const& applied) {
      GroupWord w;
      for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
        auto const& part = letters[*it].word;
        w.insert(w.end(), part.begin(), part.end());
      }
      return free_reduce(w);
    }

    struct Tracked {
      std::vector<ComponentId> items;
      bool operator==(Tracked const&) const = default;
    };

    // Breadth-first search on the first tracked component; returns the
    // letters applied, in order.
    std::optional<std::vector<std::size_t>>
    bfs_stage(ActionCache&                                  cache,
              ComponentId const&                            start,
              std::vector<std::size_t> const&               letters,
              std::function<bool(ComponentId const&)> const& goal,
              std::size_t                                   cap) {
      if (goal(start)) {
        return std::vector<std::size_t>{};
      }
      struct Node {
        std::size_t parent;
        std::size_t letter;
        ComponentId state;
      };
      std::vector<Node>                                        nodes{{0, 0, start}};
      std::unordered_map<ComponentId, std::size_t, ComponentHash> seen{{start, 0}};
      for (std::size_t head = 0; head < nodes.size(); ++head) {
        for (auto l : letters) {
          ComponentId next = cache.apply(l, nodes[head].state);
          if (seen.count(next) != 0) {
            continue;
          }
          seen.emplace(next, nodes.size());
          nodes.push_back(Node{head, l, next});
          if (goal(next)) {
            std::vector<std::size_t> path;
            for (std::size_t k = nodes.size() - 1; k != 0; k = nodes[k].parent) {
              path.push_back(nodes[k].letter);
            }
            std::reverse(path.begin(), path.end());
            return path;
          }
          if (nodes.size() > cap) {
            return std::nullopt;
          }
        }
      }
      return std::nullopt;
    }

    void apply_all(ActionCache& cache, std::vector<std::size_t> const& applied, std::vector<ComponentId>& cs) {
      for (auto l : applied) {
        for (auto& c : cs) {
          c = cache.apply(l, c);
        }
      }
    }

    std::vector<std::size_t> letters_where(std::vector<Letter> const&                        letters,
                                           std::function<bool(GraphPairDiagram const&)> const& pred) {
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < letters.size(); ++i) {
        if (pred(letters[i].diagram)) {
          out.push_back(i);
        }
      }
      return out;
    }

    ComponentId act_by_word(GeneratorTable const& table, GroupWord const& w, ComponentId c) {
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        auto const& g = it->second > 0 ? table.get(it->first) : table.get_inverse(it->first);
        for (std::int64_t k = 0; k < std::abs(it->second); ++k) {
          c = map_component(g, c);
        }
      }
      return c;
    }
  }  // namespace

  std::optional<GroupWord> orbit_search(GeneratorTable const& table,
                                        ComponentId const&    src,
                                        ComponentId const&    tgt,
                                        std::size_t           max_len,
                                        std::size_t           state_cap) {
    if (src == tgt) {
      return GroupWord{};
    }
    ActionCache cache(generator_letters(table));
    std::size_t n = table.names().size();
    auto        inverse_of = [n](std::size_t i) { return i < n ? i + n : i - n; };
    std::unordered_map<ComponentId, std::size_t, ComponentHash> dist{{src, 0}};
    std::vector<ComponentId>                                    frontier{src};
    for (std::size_t level = 1; level <= max_len && dist.count(tgt) == 0 && !frontier.empty(); ++level) {
      std::vector<ComponentId> next;
      for (auto const& c : frontier) {
        for (std::size_t l = 0; l < 2 * n; ++l) {
          ComponentId d = cache.apply(l, c);
          if (dist.emplace(d, level).second) {
            next.push_back(d);
          }
        }
        if (dist.size() > state_cap) {
          return std::nullopt;
        }
      }
      frontier = std::move(next);
    }
    auto found = dist.find(tgt);
    if (found == dist.end()) {
      return std::nullopt;
    }
    std::size_t len = found->second;
    ComponentId cur = tgt;
    GroupWord   word;
    for (std::size_t pos = 0; pos < len; ++pos) {
      bool stepped = false;
      for (std::size_t l = 0; l < 2 * n && !stepped; ++l) {
        ComponentId prev = cache.apply(inverse_of(l), cur);
        auto        it   = dist.find(prev);
        if (it != dist.end() && it->second == len - pos - 1) {
          word.insert(word.end(), cache.letters()[l].word.begin(), cache.letters()[l].word.end());
          cur     = prev;
          stepped = true;
        }
      }
      if (!stepped) {
        throw InvariantError("orbit search could not reconstruct a word");
      }
    }
    if (map_component(evaluate_word(table, word), src) != tgt) {
      throw InvariantError("orbit search word fails re-evaluation");
    }
    return word;
  }

  std::optional<GroupWord> reduce_to_central(GeneratorTable const& table,
                                             ComponentId const&    c,
                                             std::size_t           state_cap) {
    auto const&  sys = *table.system();
    ActionCache  cache(generator_letters(table));
    auto         rotations = letters_where(cache.letters(), is_in_rist_C0);
    auto         slides    = letters_where(cache.letters(), is_in_rist_Hor);
    std::vector<std::size_t> applied;
    ComponentId              cur = c;
    auto on_horizon = [&sys](ComponentId const& x) {
      if (x.is_central()) {
        return true;
      }
      auto p = component_path(sys, x);
      return p.front().angle == zero || p.front().angle == half;
    };
    for (std::size_t round = 0; !cur.is_central(); ++round) {
      if (round > 64) {
        return std::nullopt;
      }
      auto rot = bfs_stage(cache, cur, rotations, on_horizon, state_cap);
      if (!rot) {
        return std::nullopt;
      }
      std::vector<ComponentId> tmp{cur};
      apply_all(cache, *rot, tmp);
      applied.insert(applied.end(), rot->begin(), rot->end());
      cur               = tmp[0];
      std::size_t start = depth(sys, cur);
      auto        slide = bfs_stage(
          cache, cur, slides, [&sys, start](ComponentId const& x) { return depth(sys, x) < start; }, state_cap);
      if (!slide) {
        return std::nullopt;
      }
      tmp = {cur};
      apply_all(cache, *slide, tmp);
      applied.insert(applied.end(), slide->begin(), slide->end());
      cur = tmp[0];
    }
    GroupWord w = word_of(cache.letters(), applied);
    if (!act_by_word(table, w, c).is_central()) {
      throw InvariantError("reduction word fails re-evaluation");
    }
    return w;
  }

  std::optional<GroupWord> reduce_pair(GeneratorTable const& table,
                                       ComponentId const&    c1,
                                       ComponentId const&    c2,
                                       std::size_t           state_cap) {
    auto const& sys = *table.system();
    if (c1 == c2) {
      throw PreconditionError("pair components must be distinct");
    }
    auto first = reduce_to_central(table, c1, state_cap);
    if (!first) {
      return std::nullopt;
    }
    ComponentId cur = act_by_word(table, *first, c2);

    std::vector<Letter> letters;
    auto add = [&](std::string const& label, GroupWord const& w) {
      letters.push_back(composite_letter(table, label, w));
      letters.push_back(composite_letter(table, label + "^-1", inverse_word(w)));
    };
    for (auto const& name : {"beta", "gamma", "delta"}) {
      add(name, {{name, 1}});
    }
    add("e", {{"epsilon", 1}});
    add("a e a^-1", {{"alpha", 1}, {"epsilon", 1}, {"alpha", -1}});
    add("a g a^-1", {{"alpha", 1}, {"gamma", 1}, {"alpha", -1}});
    add("a d g d a^-1", {{"alpha", 1}, {"delta", 1}, {"gamma", 1}, {"delta", -1}, {"alpha", -1}});
    add("a d b d a^-1", {{"alpha", 1}, {"delta", 1}, {"beta", 1}, {"delta", -1}, {"alpha", -1}});
    std::vector<std::size_t> rot0{0, 1, 2, 3, 4, 5};
    std::vector<std::size_t> slide0{6, 7, 8, 9};
    std::vector<std::size_t> rot_k{10, 11, 12, 13, 14, 15};
    ActionCache              cache(std::move(letters));

    ComponentPath const key_path{PathStep{zero, half}};
    ComponentId const   key = path_to_component(sys, key_path);
    std::vector<std::size_t> applied;
    auto run = [&](std::vector<std::size_t> const& ls, std::function<bool(ComponentId const&)> const& goal) {
      auto steps = bfs_stage(cache, cur, ls, goal, state_cap);
      if (!steps) {
        return false;
      }
      std::vector<ComponentId> tmp{cur};
      apply_all(cache, *steps, tmp);
      cur = tmp[0];
      applied.insert(applied.end(), steps->begin(), steps->end());
      return true;
    };
    bool ok = run(rot0, [&sys](ComponentId const& x) {
      return !x.is_central() && component_path(sys, x).front().angle == zero;
    });
    for (std::size_t round = 0; ok && cur != key; ++round) {
      if (round > 64) {
        return std::nullopt;
      }
      ok = run(slide0, [&sys, &key_path](ComponentId const& x) {
        return !x.is_central() && component_path(sys, x).front() == key_path.front();
      });
      if (!ok || cur == key) {
        break;
      }
      std::size_t start = depth(sys, cur);
      ok = run(rot_k, [&sys, start](ComponentId const& x) { return depth(sys, x) < start; });
    }
    if (!ok) {
      return std::nullopt;
    }
    GroupWord w = word_of(cache.letters(), applied);
    w.insert(w.end(), first->begin(), first->end());
    w = free_reduce(w);
    if (!act_by_word(table, w, c1).is_central() || act_by_word(table, w, c2) != key) {
      throw InvariantError("pair reduction word fails re-evaluation");
    }
    return w;
  }

  std::vector<ComponentPath> enumerate_components(std::size_t max_depth, int denominator_exponent) {
    std::int64_t const         den = std::int64_t(1) << denominator_exponent;
    std::vector<ComponentPath> out{ComponentPath{}};
    std::vector<ComponentPath> layer{ComponentPath{}};
    for (std::size_t d = 1; d <= max_depth; ++d) {
      std::vector<ComponentPath> next;
      for (auto const& p : layer) {
        for (std::int64_t j = 0; j < den; ++j) {
          DyadicRational theta(j, denominator_exponent);
          if (d > 1 && (theta == zero || theta == half)) {
            continue;
          }
          for (std::int64_t m = 1; m < den; ++m) {
            ComponentPath q = p;
            q.push_back(PathStep{theta, DyadicRational(m, denominator_exponent)});
            next.push_back(std::move(q));
          }
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  }

  TransitivityReport check_k_transitivity(GeneratorTable const& table,
                                          std::size_t           k,
                                          std::size_t           max_depth,
                                          int                   denominator_exponent,
                                          std::size_t           word_bound,
                                          std::size_t           samples,
                                          std::uint64_t         seed) {
    if (k != 1 && k != 2) {
      throw PreconditionError("transitivity check supports k = 1 or 2");
    }
    auto const&        sys   = *table.system();
    auto               paths = enumerate_components(max_depth, denominator_exponent);
    TransitivityReport report;
    report.k = k;
    if (k == 1) {
      for (auto const& p : paths) {
        auto w = reduce_to_central(table, path_to_component(sys, p));
        ++report.checked;
        if (!w) {
          report.failures.push_back(format_path(p) + ": no word found");
          continue;
        }
        std::size_t len = word_length(*w);
        report.longest  = std::max(report.longest, len);
        if (len > word_bound) {
          report.failures.push_back(format_path(p) + ": word of length " + std::to_string(len));
        }
      }
      return report;
    }
    std::mt19937_64                            rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, paths.size() - 1);
    while (report.checked < samples) {
      auto i = pick(rng);
      auto j = pick(rng);
      if (i == j) {
        continue;
      }
      auto w = reduce_pair(table, path_to_component(sys, paths[i]), path_to_component(sys, paths[j]));
      ++report.checked;
      if (!w) {
        report.failures.push_back(format_path(paths[i]) + " | " + format_path(paths[j]) + ": no word found");
        continue;
      }
      report.longest = std::max(report.longest, word_length(*w));
    }
    return report;
  }

}  // namespace airframe
