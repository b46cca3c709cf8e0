// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems

#include "airframe/word.hpp"

#include <cctype>
#include <limits>

namespace airframe {

  namespace {
    using Kind = WordExpression::Kind;

    class Parser {
     public:
      explicit Parser(std::string_view src) : _src(src) {}

      WordExpression parse_all() {
        WordExpression w = word();
        skip_space();
        if (_pos < _src.size()) {
          throw WordSyntaxError(_pos, std::string("unexpected '") + _src[_pos] + "'");
        }
        return w;
      }

     private:
      void skip_space() {
        while (_pos < _src.size() && std::isspace(static_cast<unsigned char>(_src[_pos]))) {
          ++_pos;
        }
      }

      char peek() {
        skip_space();
        return _pos < _src.size() ? _src[_pos] : '\0';
      }

      static bool starts_primary(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '[';
      }

      void expect(char c) {
        if (peek() != c) {
          throw WordSyntaxError(_pos, std::string("expected '") + c + "'");
        }
        ++_pos;
      }

      WordExpression word() {
        WordExpression w{Kind::product, {}, 0, {}, (skip_space(), _pos)};
        while (starts_primary(peek())) {
          w.children.push_back(term());
        }
        return w;
      }

      WordExpression term() {
        WordExpression t = primary();
        while (true) {
          char c = peek();
          std::size_t at = _pos;
          if (c == '\'') {
            ++_pos;
            t = WordExpression{Kind::inverse, {}, 0, {std::move(t)}, at};
          } else if (c == '^') {
            ++_pos;
            char n = peek();
            if (n == '-' || std::isdigit(static_cast<unsigned char>(n))) {
              t = WordExpression{Kind::power, {}, integer(), {std::move(t)}, at};
            } else if (starts_primary(n)) {
              WordExpression by = primary();
              t = WordExpression{Kind::conjugate, {}, 0, {std::move(t), std::move(by)}, at};
            } else {
              throw WordSyntaxError(_pos, "expected an exponent or a conjugator after '^'");
            }
          } else {
            return t;
          }
        }
      }

      std::int64_t integer() {
        std::size_t start = _pos;
        bool        neg   = false;
        if (_src[_pos] == '-') {
          neg = true;
          ++_pos;
        }
        if (_pos >= _src.size() || !std::isdigit(static_cast<unsigned char>(_src[_pos]))) {
          throw WordSyntaxError(_pos, "expected digits");
        }
        std::int64_t v = 0;
        while (_pos < _src.size() && std::isdigit(static_cast<unsigned char>(_src[_pos]))) {
          if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
            throw WordSyntaxError(start, "exponent too large");
          }
          v = v * 10 + (_src[_pos] - '0');
          ++_pos;
        }
        return neg ? -v : v;
      }

      WordExpression primary() {
        char        c  = peek();
        std::size_t at = _pos;
        if (c == '(') {
          ++_pos;
          WordExpression w = word();
          expect(')');
          if (w.children.size() == 1) {
            return std::move(w.children.front());
          }
          w.offset = at;
          return w;
        }
        if (c == '[') {
          ++_pos;
          WordExpression x = collapse(word());
          expect(',');
          WordExpression y = collapse(word());
          expect(']');
          return WordExpression{Kind::commutator, {}, 0, {std::move(x), std::move(y)}, at};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
          std::size_t start = _pos;
          while (_pos < _src.size()
                 && (std::isalnum(static_cast<unsigned char>(_src[_pos])) || _src[_pos] == '_')) {
            ++_pos;
          }
          return WordExpression{Kind::atom, std::string(_src.substr(start, _pos - start)), 0, {}, at};
        }
        if (c == '\0') {
          throw WordSyntaxError(_pos, "unexpected end of input");
        }
        throw WordSyntaxError(_pos, std::string("unexpected '") + c + "'");
      }

      static WordExpression collapse(WordExpression w) {
        if (w.children.size() == 1) {
          return std::move(w.children.front());
        }
        return w;
      }

      std::string_view _src;
      std::size_t      _pos = 0;
    };

    // Operands of postfix operators need parentheses unless they are
    // single primaries or postfix terms themselves.
    std::string operand(WordExpression const& e) {
      std::string s = to_string(e);
      return e.kind == Kind::product ? "(" + s + ")" : s;
    }

    // A conjugator is read as a single primary.
    std::string primary(WordExpression const& e) {
      std::string s = to_string(e);
      return e.kind == Kind::atom || e.kind == Kind::commutator ? s : "(" + s + ")";
    }

    void emit(WordExpression const& e, bool invert, GroupWord& out, std::size_t max_letters) {
      auto guard = [&] {
        if (out.size() > max_letters) {
          throw InputError("word expands to more than " + std::to_string(max_letters) + " letters");
        }
      };
      switch (e.kind) {
        case Kind::atom:
          out.emplace_back(e.name, invert ? -1 : 1);
          guard();
          return;
        case Kind::inverse:
          emit(e.children[0], !invert, out, max_letters);
          return;
        case Kind::power: {
          std::int64_t k = e.exponent < 0 ? -e.exponent : e.exponent;
          bool         inv = invert != (e.exponent < 0);
          if (k > static_cast<std::int64_t>(max_letters)) {
            throw InputError("word expands to more than " + std::to_string(max_letters) + " letters");
          }
          for (std::int64_t i = 0; i < k; ++i) {
            emit(e.children[0], inv, out, max_letters);
          }
          return;
        }
        case Kind::product:
          if (invert) {
            for (auto it = e.children.rbegin(); it != e.children.rend(); ++it) {
              emit(*it, true, out, max_letters);
            }
          } else {
            for (auto const& c : e.children) {
              emit(c, false, out, max_letters);
            }
          }
          return;
        case Kind::commutator: {
          // x y x^-1 y^-1, inverted: y x y^-1 x^-1.
          auto const& x = e.children[0];
          auto const& y = e.children[1];
          auto const& p = invert ? y : x;
          auto const& q = invert ? x : y;
          emit(p, false, out, max_letters);
          emit(q, false, out, max_letters);
          emit(p, true, out, max_letters);
          emit(q, true, out, max_letters);
          return;
        }
        case Kind::conjugate: {
          // y^-1 x y, inverted: y^-1 x^-1 y.
          emit(e.children[1], true, out, max_letters);
          emit(e.children[0], invert, out, max_letters);
          emit(e.children[1], false, out, max_letters);
          return;
        }
      }
    }
  }  // namespace

  bool WordExpression::operator==(WordExpression const& that) const {
    return kind == that.kind && name == that.name && exponent == that.exponent
           && children == that.children;
  }

  WordExpression parse_word(std::string_view src) {
    return Parser(src).parse_all();
  }

  std::string to_string(WordExpression const& e) {
    switch (e.kind) {
      case Kind::atom: return e.name;
      case Kind::inverse: return operand(e.children[0]) + "'";
      case Kind::power: return operand(e.children[0]) + "^" + std::to_string(e.exponent);
      case Kind::conjugate: return operand(e.children[0]) + "^" + primary(e.children[1]);
      case Kind::commutator:
        return "[" + to_string(e.children[0]) + "," + to_string(e.children[1]) + "]";
      case Kind::product: {
        std::string out;
        for (auto const& c : e.children) {
          if (!out.empty()) {
            out += ' ';
          }
          out += operand(c);
        }
        return out;
      }
    }
    return {};
  }

  GroupWord flatten(WordExpression const& e, std::size_t max_letters) {
    GroupWord out;
    emit(e, false, out, max_letters);
    return out;
  }

  GroupWord parse_group_word(std::string_view src, GeneratorTable const& table) {
    WordExpression e = parse_word(src);
    GroupWord      w = flatten(e);
    for (auto& [name, exp] : w) {
      if (!table.contains(name)) {
        throw InputError("unknown generator \"" + name + "\"");
      }
      name = table.canonical(name);
    }
    return w;
  }

}  // namespace airframe
