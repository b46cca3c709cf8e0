// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems

#include "airframe/dyadic.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace airframe {

  namespace {
    constexpr int max_exponent = 60;

    std::int64_t parse_int(std::string_view text) {
      std::int64_t value = 0;
      auto const*  first = text.data();
      auto const*  last  = text.data() + text.size();
      if (first != last && *first == '+') {
        ++first;
      }
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last || first == last) {
        throw std::invalid_argument("malformed integer \"" + std::string(text)
                                    + "\"");
      }
      return value;
    }

    std::int64_t shift_left(std::int64_t value, int bits) {
      if (bits < 0 || bits > max_exponent) {
        throw std::overflow_error("dyadic exponent out of range");
      }
      __int128 wide = static_cast<__int128>(value) << bits;
      if (wide > std::numeric_limits<std::int64_t>::max()
          || wide < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("dyadic numerator overflow");
      }
      return static_cast<std::int64_t>(wide);
    }

    std::int64_t checked(__int128 wide) {
      if (wide > std::numeric_limits<std::int64_t>::max()
          || wide < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("dyadic numerator overflow");
      }
      return static_cast<std::int64_t>(wide);
    }
  }  // namespace

  DyadicRational::DyadicRational(std::int64_t numerator, int exponent)
      : _num(numerator), _exp(exponent) {
    if (exponent < 0) {
      _num = shift_left(numerator, -exponent);
      _exp = 0;
    }
    normalize();
  }

  void DyadicRational::normalize() {
    if (_num == 0) {
      _exp = 0;
      return;
    }
    while (_exp > 0 && (_num % 2) == 0) {
      _num /= 2;
      --_exp;
    }
    if (_exp > max_exponent) {
      throw std::overflow_error("dyadic exponent out of range");
    }
  }

  DyadicRational DyadicRational::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') {
      text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
      text.remove_suffix(1);
    }
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return DyadicRational(parse_int(text));
    }
    std::int64_t num  = parse_int(text.substr(0, slash));
    auto         den  = text.substr(slash + 1);
    auto         caret = den.find('^');
    if (caret != std::string_view::npos) {
      if (den.substr(0, caret) != "2") {
        throw std::invalid_argument("denominator must be a power of two");
      }
      std::int64_t e = parse_int(den.substr(caret + 1));
      if (e < 0 || e > max_exponent) {
        throw std::invalid_argument("exponent out of range");
      }
      return DyadicRational(num, static_cast<int>(e));
    }
    std::int64_t d = parse_int(den);
    if (d <= 0 || (d & (d - 1)) != 0) {
      throw std::invalid_argument("denominator must be a power of two");
    }
    int e = 0;
    while ((std::int64_t(1) << e) != d) {
      ++e;
    }
    return DyadicRational(num, e);
  }

  DyadicRational DyadicRational::operator+(DyadicRational const& that) const {
    int  e = std::max(_exp, that._exp);
    auto a = static_cast<__int128>(shift_left(_num, e - _exp));
    auto b = static_cast<__int128>(shift_left(that._num, e - that._exp));
    return DyadicRational(checked(a + b), e);
  }

  DyadicRational DyadicRational::operator-(DyadicRational const& that) const {
    return *this + (-that);
  }

  DyadicRational DyadicRational::operator-() const {
    DyadicRational out;
    out._num = -_num;
    out._exp = _exp;
    return out;
  }

  DyadicRational DyadicRational::operator*(DyadicRational const& that) const {
    auto wide = static_cast<__int128>(_num) * that._num;
    return DyadicRational(checked(wide), _exp + that._exp);
  }

  DyadicRational DyadicRational::half() const {
    return DyadicRational(_num, _exp + 1);
  }

  DyadicRational DyadicRational::mod1() const {
    std::int64_t den = std::int64_t(1) << _exp;
    std::int64_t r   = _num % den;
    if (r < 0) {
      r += den;
    }
    return DyadicRational(r, _exp);
  }

  std::strong_ordering
  DyadicRational::operator<=>(DyadicRational const& that) const {
    int  e = std::max(_exp, that._exp);
    auto a = shift_left(_num, e - _exp);
    auto b = shift_left(that._num, e - that._exp);
    return a <=> b;
  }

  std::string DyadicRational::str() const {
    if (_exp == 0) {
      return std::to_string(_num);
    }
    return std::to_string(_num) + "/" + std::to_string(std::int64_t(1) << _exp);
  }

  std::string DyadicRational::power_str() const {
    return std::to_string(_num) + "/2^" + std::to_string(_exp);
  }

  double DyadicRational::to_double() const noexcept {
    return static_cast<double>(_num) / static_cast<double>(std::int64_t(1) << _exp);
  }

  DyadicRational exact_div(DyadicRational const& a, DyadicRational const& b) {
    if (b.is_zero()) {
      throw std::domain_error("division by zero");
    }
    std::int64_t q = b.numerator();
    int          u = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++u;
    }
    if (a.numerator() % q != 0) {
      throw std::domain_error("quotient " + a.str() + " / " + b.str()
                              + " is not dyadic");
    }
    // a/b = (p / q) * 2^(t - s - u) where a = p/2^s and b = q*2^u/2^t.
    std::int64_t p     = a.numerator() / q;
    int          shift = b.exponent() - a.exponent() - u;
    return DyadicRational(p, -shift);
  }

  DyadicRational midpoint(DyadicRational const& a, DyadicRational const& b) {
    return (a + b).half();
  }

}  // namespace airframe
