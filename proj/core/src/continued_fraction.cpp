#include "fareyprim/continued_fraction.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "fareyprim/word_format.hpp"

namespace fareyprim {

int CFSeq::sign() const noexcept {
  for (auto e : entries) {
    if (e != 0) return e > 0 ? 1 : -1;
  }
  return 0;
}

void validate_cf(const CFSeq& c) {
  bool pos = false;
  bool neg = false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    pos |= c[i] > 0;
    neg |= c[i] < 0;
    if (i > 0 && c[i] == 0) {
      throw InvalidSequence("zero entry at position " + std::to_string(i) + " in " + to_string(c));
    }
  }
  if (pos && neg) throw InvalidSequence("mixed signs in " + to_string(c));
}

CFSeq canonicalize(CFSeq c) {
  auto& e = c.entries;
  while (e.size() >= 2 && (e.back() == 1 || e.back() == -1)) {
    const auto last = e.back();
    e.pop_back();
    e.back() = checked::add(e.back(), last);
  }
  return c;
}

CFSeq to_cf(Rational x) {
  if (x.is_infinite()) throw InvalidRational("1/0 has no finite continued fraction");
  const int s = x.num() < 0 ? -1 : 1;
  std::int64_t p = x.num() < 0 ? -x.num() : x.num();
  std::int64_t q = x.den();
  CFSeq c;
  do {
    c.entries.push_back(s * (p / q));
    const std::int64_t r = p % q;
    p = q;
    q = r;
  } while (q != 0);
  return c;
}

std::vector<Rational> approximants(const CFSeq& c) {
  validate_cf(c);
  std::vector<Rational> out;
  out.reserve(c.size());
  // (p_{-1}, q_{-1}) = (1, 0), (p_{-2}, q_{-2}) = (0, 1)
  std::int64_t p1 = 1, q1 = 0, p2 = 0, q2 = 1;
  for (auto a : c.entries) {
    const std::int64_t p = checked::add(checked::mul(a, p1), p2);
    const std::int64_t q = checked::add(checked::mul(a, q1), q2);
    out.push_back(make_rational(p, q));
    p2 = p1;
    q2 = q1;
    p1 = p;
    q1 = q;
  }
  return out;
}

Rational from_cf(const CFSeq& c) {
  if (c.empty()) return Rational::infinity();
  return approximants(c).back();
}

std::string to_string(const CFSeq& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i == 1) out += ';';
    if (i > 1) out += ',';
    out += std::to_string(c[i]);
  }
  out += ']';
  return out;
}

CFSeq parse_cf(std::string_view text) {
  std::string_view body = text;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  body = trim(body);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("unbalanced '[' in \"" + std::string(text) + "\"");
    body = body.substr(1, body.size() - 2);
  }
  CFSeq c;
  std::size_t pos = 0;
  while (true) {
    while (pos < body.size() &&
           (std::isspace(static_cast<unsigned char>(body[pos])) || body[pos] == ',' ||
            body[pos] == ';')) {
      ++pos;
    }
    if (pos >= body.size()) break;
    std::size_t start = pos;
    if (body[pos] == '+' || body[pos] == '-') ++pos;
    while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
    std::string_view token = body.substr(start, pos - start);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    std::int64_t value = 0;
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), last, value);
    if (ec != std::errc{} || ptr != last || token.empty()) {
      throw ParseError("malformed sequence \"" + std::string(text) + "\"");
    }
    c.entries.push_back(value);
  }
  validate_cf(c);
  return c;
}

}  // namespace fareyprim
