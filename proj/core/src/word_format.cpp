#include "fareyprim/word_format.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <vector>

namespace fareyprim {

namespace {

constexpr std::size_t kMaxExpandedLetters = std::size_t{1} << 26;

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    std::vector<Letter> out = parse_sequence();
    skip_separators();
    if (pos_ != text_.size()) fail("unexpected character");
    return Word::normalize(out);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("word parse error at offset " + std::to_string(pos_) + ": " + what +
                     " in \"" + std::string(text_) + "\"");
  }

  void skip_separators() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
        ++pos_;
      } else if (text_.substr(pos_, 2) == "\xC2\xB7") {
        pos_ += 2;
      } else {
        break;
      }
    }
  }

  std::vector<Letter> parse_sequence() {
    std::vector<Letter> out;
    for (;;) {
      skip_separators();
      if (pos_ == text_.size() || text_[pos_] == ')') break;
      append_item(out);
    }
    return out;
  }

  void append_item(std::vector<Letter>& out) {
    const char c = text_[pos_];
    std::vector<Letter> atom;
    bool uppercase = false;
    switch (c) {
      case 'a': atom = {Letter::a}; break;
      case 'A': atom = {Letter::A}; uppercase = true; break;
      case 'b': atom = {Letter::b}; break;
      case 'B': atom = {Letter::B}; uppercase = true; break;
      case '1': break;
      case '(': {
        ++pos_;
        atom = parse_sequence();
        if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
        break;
      }
      default: fail(std::string("unexpected character '") + c + "'");
    }
    ++pos_;

    std::int64_t exponent = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      exponent = parse_exponent();
    }
    if (uppercase && exponent < 0) exponent = -exponent;

    if (exponent < 0) {
      const Word inv = invert(Word::normalize(atom));
      atom.assign(inv.begin(), inv.end());
      exponent = -exponent;
    }
    if (static_cast<std::size_t>(exponent) > kMaxExpandedLetters ||
        atom.size() * static_cast<std::size_t>(exponent) + out.size() > kMaxExpandedLetters) {
      fail("expanded word too long");
    }
    for (std::int64_t i = 0; i < exponent; ++i) {
      out.insert(out.end(), atom.begin(), atom.end());
    }
  }

  std::int64_t parse_exponent() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) fail("expected integer exponent");
    if (value > static_cast<std::int64_t>(kMaxExpandedLetters) ||
        value < -static_cast<std::int64_t>(kMaxExpandedLetters)) {
      fail("exponent out of range");
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

std::string format_caret(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    const Letter l = w[i];
    std::size_t run = 1;
    while (i + run < w.size() && w[i + run] == l) ++run;
    if (!out.empty()) out += ' ';
    const bool a = generator(l) == Generator::a;
    if (sign(l) > 0) {
      out += a ? 'a' : 'b';
      if (run > 1) out += "^" + std::to_string(run);
    } else {
      out += a ? 'A' : 'B';
      out += "^-" + std::to_string(run);
    }
    i += run;
  }
  return out;
}

std::string format_compact(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  out.reserve(w.size());
  for (Letter l : w) {
    switch (l) {
      case Letter::a: out += 'a'; break;
      case Letter::A: out += 'A'; break;
      case Letter::b: out += 'b'; break;
      case Letter::B: out += 'B'; break;
    }
  }
  return out;
}

}  // namespace fareyprim
