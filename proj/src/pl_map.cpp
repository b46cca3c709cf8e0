// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems

#include "airframe/pl_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace airframe {

  namespace {
    using Point = PLMap::Point;

    bool collinear(Point const& a, Point const& b, Point const& c) {
      return (b.second - a.second) * (c.first - b.first)
             == (c.second - b.second) * (b.first - a.first);
    }

    DyadicRational interpolate(Point const& a, Point const& b, DyadicRational const& x) {
      return a.second + exact_div((x - a.first) * (b.second - a.second), b.first - a.first);
    }

    DyadicRational const zero{0};
    DyadicRational const one{1};
  }  // namespace

  PLMap::PLMap(PLDomain domain, std::vector<Point> points) : _domain(domain) {
    canonicalize(std::move(points));
  }

  PLMap PLMap::identity(PLDomain domain) {
    if (domain == PLDomain::interval) {
      return PLMap(domain, {{zero, zero}, {one, one}});
    }
    return PLMap(domain, {{zero, zero}});
  }

  void PLMap::canonicalize(std::vector<Point> pts) {
    if (_domain == PLDomain::interval) {
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      if (pts.size() < 2 || pts.front() != Point{zero, zero} || pts.back() != Point{one, one}) {
        throw std::invalid_argument("interval map must fix 0 and 1");
      }
      for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].first == pts[i - 1].first || pts[i].second <= pts[i - 1].second) {
          throw std::invalid_argument("interval map is not an increasing bijection");
        }
      }
      std::vector<Point> kept{pts.front()};
      for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        if (!collinear(kept.back(), pts[i], pts[i + 1])) {
          kept.push_back(pts[i]);
        }
      }
      kept.push_back(pts.back());
      _points = std::move(kept);
      return;
    }
    for (auto& p : pts) {
      p = {p.first.mod1(), p.second.mod1()};
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) {
      throw std::invalid_argument("circle map needs at least one point");
    }
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i].first == pts[i - 1].first) {
        throw std::invalid_argument("circle map is not single-valued");
      }
    }
    // Unwrap outputs so that they increase.
    for (std::size_t i = 1; i < pts.size(); ++i) {
      while (pts[i].second <= pts[i - 1].second) {
        pts[i].second = pts[i].second + one;
      }
    }
    if (!(pts.back().second < pts.front().second + one)) {
      throw std::invalid_argument("circle map does not have degree one");
    }
    if (pts.front().first != zero) {
      Point last  = pts.back();
      Point first = {pts.front().first + one, pts.front().second + one};
      pts.insert(pts.begin(), Point{zero, interpolate(last, first, one) - one});
    }
    std::size_t        n = pts.size();
    std::vector<Point> kept{pts.front()};
    for (std::size_t i = 1; i < n; ++i) {
      Point next = i + 1 < n ? pts[i + 1]
                             : Point{pts[0].first + one, pts[0].second + one};
      if (!collinear(pts[i - 1], pts[i], next)) {
        kept.push_back(pts[i]);
      }
    }
    for (auto& p : kept) {
      p.second = p.second.mod1();
    }
    _points = std::move(kept);
  }

  std::vector<Point> PLMap::segments() const {
    std::vector<Point> seg = _points;
    if (_domain == PLDomain::circle) {
      for (std::size_t i = 1; i < seg.size(); ++i) {
        while (seg[i].second <= seg[i - 1].second) {
          seg[i].second = seg[i].second + one;
        }
      }
      seg.push_back({one, seg.front().second + one});
    }
    return seg;
  }

  DyadicRational PLMap::apply(DyadicRational const& x0) const {
    DyadicRational x = _domain == PLDomain::circle ? x0.mod1() : x0;
    if (_domain == PLDomain::interval && (x < zero || x > one)) {
      throw std::invalid_argument("point outside the unit interval");
    }
    auto seg = segments();
    for (std::size_t i = 0; i + 1 < seg.size(); ++i) {
      if (x >= seg[i].first && x <= seg[i + 1].first) {
        auto y = interpolate(seg[i], seg[i + 1], x);
        return _domain == PLDomain::circle ? y.mod1() : y;
      }
    }
    throw std::logic_error("PL map segments do not cover the domain");
  }

  PLMap PLMap::inverse() const {
    std::vector<Point> pts;
    for (auto const& [x, y] : _points) {
      pts.emplace_back(y, x);
    }
    return PLMap(_domain, std::move(pts));
  }

  std::string PLMap::str() const {
    std::string out;
    for (auto const& [x, y] : _points) {
      if (!out.empty()) {
        out += ' ';
      }
      out += "(" + x.str() + "," + y.str() + ")";
    }
    return out;
  }

  PLMap compose(PLMap const& f, PLMap const& g) {
    if (f.domain() != g.domain()) {
      throw std::invalid_argument("cannot compose interval and circle maps");
    }
    PLMap              ginv = g.inverse();
    std::vector<Point> pts;
    auto add = [&](DyadicRational const& x) { pts.emplace_back(x, f.apply(g.apply(x))); };
    for (auto const& [x, y] : g.breakpoints()) {
      add(x);
    }
    for (auto const& [x, y] : f.breakpoints()) {
      add(ginv.apply(x));
    }
    return PLMap(f.domain(), std::move(pts));
  }

}  // namespace airframe
