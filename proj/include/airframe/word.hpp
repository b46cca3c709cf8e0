// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems
//
// Word expressions over generator names.
//
//   word    := term*
//   term    := primary postfix*
//   postfix := "'" | "^" INT | "^-" INT | "^" primary
//   primary := NAME | "(" word ")" | "[" word "," word "]"
//
// Juxtaposition composes right to left, so "a b" applies b first.
// "x^y" is y^-1 x y and "[x,y]" is x y x^-1 y^-1.

#ifndef AIRFRAME_WORD_HPP_
#define AIRFRAME_WORD_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "airframe/diagram.hpp"

namespace airframe {

  class WordSyntaxError : public InputError {
   public:
    WordSyntaxError(std::size_t offset, std::string const& message)
        : InputError("offset " + std::to_string(offset) + ": " + message), _offset(offset) {}
    std::size_t offset() const noexcept { return _offset; }

   private:
    std::size_t _offset;
  };

  struct WordExpression {
    enum class Kind { atom, inverse, power, product, commutator, conjugate };

    Kind                        kind = Kind::product;
    std::string                 name;          // atom
    std::int64_t                exponent = 0;  // power
    std::vector<WordExpression> children;
    std::size_t                 offset = 0;    // byte offset in the source

    // Structural equality; offsets are ignored.
    bool operator==(WordExpression const& that) const;
  };

  WordExpression parse_word(std::string_view src);
  std::string    to_string(WordExpression const& e);
  // Throws InputError if the expanded word would exceed `max_letters`.
  GroupWord      flatten(WordExpression const& e, std::size_t max_letters = 1000000);

  // Parses, flattens and maps every name to its canonical table name.
  GroupWord parse_group_word(std::string_view src, GeneratorTable const& table);

}  // namespace airframe

#endif  // AIRFRAME_WORD_HPP_
