#ifndef FAREYPRIM_WORD_FORMAT_HPP_
#define FAREYPRIM_WORD_FORMAT_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "fareyprim/word.hpp"

namespace fareyprim {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Textual words.
//
//   a A b B      letters; uppercase is the inverse (A = a^-1)
//   x^n          run of n copies; lowercase takes a signed exponent (a^-2 = AA),
//                uppercase is always inverse and the sign of n is redundant
//                (A^-2 = A^2 = a^-2), matching the emitted form "A^-2"
//   ( ... )^n    group power, signed
//   1            identity
//
// Whitespace, '*', '.' and the UTF-8 middle dot separate factors and are
// otherwise ignored. Input is freely reduced after parsing.
Word parse_word(std::string_view text);

/// Run-length caret form, e.g. "A^-2 b A^-3 b A^-2". The identity prints as "1".
std::string format_caret(const Word& w);

/// One character per letter, e.g. "AAbAAAbAA". The identity prints as "1".
std::string format_compact(const Word& w);

}  // namespace fareyprim

#endif  // FAREYPRIM_WORD_FORMAT_HPP_
