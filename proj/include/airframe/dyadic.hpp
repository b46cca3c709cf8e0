// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems
//
// Exact arithmetic on dyadic rationals a/2^b.

#ifndef AIRFRAME_DYADIC_HPP_
#define AIRFRAME_DYADIC_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace airframe {

  // A rational number whose denominator is a power of two. Stored normalized:
  // either the numerator is odd or the value is zero with exponent 0.
  class DyadicRational {
   public:
    DyadicRational() = default;
    DyadicRational(std::int64_t numerator, int exponent = 0);  // NOLINT

    // Accepts "a", "a/b" with b a power of two, and "a/2^b".
    static DyadicRational parse(std::string_view text);

    std::int64_t numerator() const noexcept { return _num; }
    int exponent() const noexcept { return _exp; }

    DyadicRational operator+(DyadicRational const& that) const;
    DyadicRational operator-(DyadicRational const& that) const;
    DyadicRational operator*(DyadicRational const& that) const;
    DyadicRational operator-() const;
    DyadicRational half() const;

    // Representative in [0, 1) of the class modulo 1.
    DyadicRational mod1() const;

    bool is_zero() const noexcept { return _num == 0; }
    bool is_integer() const noexcept { return _exp == 0; }

    std::strong_ordering operator<=>(DyadicRational const& that) const;
    bool operator==(DyadicRational const& that) const = default;

    // Reduced fraction form: "0", "1", "-3", "3/4".
    std::string str() const;
    // Explicit power form: "3/2^2"; integers print as "a/2^0".
    std::string power_str() const;
    double to_double() const noexcept;

   private:
    void normalize();

    std::int64_t _num = 0;
    int          _exp = 0;
  };

  // Exact quotient; throws std::domain_error when the result is not dyadic
  // or the divisor is zero.
  DyadicRational exact_div(DyadicRational const& a, DyadicRational const& b);

  // Midpoint of [a, b].
  DyadicRational midpoint(DyadicRational const& a, DyadicRational const& b);

}  // namespace airframe

#endif  // AIRFRAME_DYADIC_HPP_
