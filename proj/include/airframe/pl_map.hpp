// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems
//
// Piecewise-linear dyadic homeomorphisms of the unit interval and circle.

#ifndef AIRFRAME_PL_MAP_HPP_
#define AIRFRAME_PL_MAP_HPP_

#include <string>
#include <utility>
#include <vector>

#include "airframe/dyadic.hpp"

namespace airframe {

  enum class PLDomain { interval, circle };

  // Interval maps list (0,0), the slope changes, then (1,1). Circle maps list
  // the pair for input 0 followed by the slope changes in (0,1); outputs are
  // taken modulo 1.
  class PLMap {
   public:
    using Point = std::pair<DyadicRational, DyadicRational>;

    PLMap() = default;
    // Builds a map from any set of sample points containing all breakpoints,
    // then canonicalizes. Throws InputError-like std::invalid_argument when
    // the points do not describe an increasing homeomorphism.
    PLMap(PLDomain domain, std::vector<Point> points);

    static PLMap identity(PLDomain domain);

    PLDomain                  domain() const noexcept { return _domain; }
    std::vector<Point> const& breakpoints() const noexcept { return _points; }

    DyadicRational apply(DyadicRational const& x) const;
    PLMap          inverse() const;
    bool           operator==(PLMap const& that) const = default;

    std::string str() const;

   private:
    // Segments with unwrapped outputs: x_0 = 0 < ... < x_n = 1.
    std::vector<Point> segments() const;
    void               canonicalize(std::vector<Point> pts);

    PLDomain           _domain = PLDomain::interval;
    std::vector<Point> _points;
  };

  // f∘g.
  PLMap compose(PLMap const& f, PLMap const& g);

}  // namespace airframe

#endif  // AIRFRAME_PL_MAP_HPP_
