#include "fareyprim/enumeration.hpp"

namespace fareyprim {

Scheme scheme_for(Rational x, Scheme roots) {
  if (x.is_infinite() || x.is_zero()) return roots;
  return x.num() > 0 ? Scheme::Positive : Scheme::Negative;
}

bool is_base(Rational x, Scheme scheme) {
  if (x.is_infinite() || x.is_zero()) return true;
  const auto unit = scheme == Scheme::Positive ? Rational::integer(1) : Rational::integer(-1);
  return x == unit;
}

ParentProduct parent_product(Rational x) {
  const Parents ps = parents(x);
  // m is the parent on the side of 0 in the scheme's ordering; r the other.
  const bool positive = x.num() > 0;
  const Rational m = positive ? ps.smaller : ps.larger;
  const Rational r = positive ? ps.larger : ps.smaller;
  return parity(x) == Parity::Odd ? ParentProduct{r, m} : ParentProduct{m, r};
}

const Word& Enumerator::word(Rational x, Scheme roots) {
  const Scheme scheme = scheme_for(x, roots);
  auto& memo = cache(scheme);
  if (auto it = memo.find(x); it != memo.end()) return it->second;

  Word w;
  if (x.is_infinite()) {
    w = Word::letter(Letter::b);
  } else if (x.is_zero()) {
    w = Word::letter(scheme == Scheme::Positive ? Letter::A : Letter::a);
  } else if (is_base(x, scheme)) {
    w = Word{Letter::b, scheme == Scheme::Positive ? Letter::A : Letter::a};
  } else {
    const ParentProduct pp = parent_product(x);
    // References into an unordered_map survive rehashing.
    const Word& left = word(pp.left, scheme);
    const Word& right = word(pp.right, scheme);
    w = concat(left, right);
  }
  return memo.emplace(x, std::move(w)).first->second;
}

Factorization Enumerator::factorization(Rational x, Scheme roots) {
  Factorization f;
  f.target = x;
  f.scheme = scheme_for(x, roots);
  if (is_base(x, f.scheme)) return f;
  const ParentProduct pp = parent_product(x);
  f.kind = parity(x) == Parity::Odd ? FactorCase::OddProduct : FactorCase::EvenProduct;
  f.left = pp.left;
  f.right = pp.right;
  return f;
}

PalindromeCertificate Enumerator::certificate(Rational x, Scheme roots) {
  PalindromeCertificate cert;
  cert.target = x;
  cert.scheme = scheme_for(x, roots);
  cert.parity = parity(x);
  const Word w = word(x, cert.scheme);
  cert.palindrome = is_palindrome(w);
  cert.palindromic_rotations = count_palindromic_rotations(w);

  const std::string who = "E(" + to_string(x) + ")";
  if (cert.parity == Parity::Even) {
    if (!cert.palindrome) throw CertificateFailure(who + " has even parity but is not a palindrome");
    if (cert.palindromic_rotations != 1) {
      throw CertificateFailure(who + " has " + std::to_string(cert.palindromic_rotations) +
                               " palindromic rotations, expected exactly 1");
    }
    return cert;
  }

  const ParentProduct pp = parent_product(x);
  cert.factors = pp;
  const Word& left = word(pp.left, cert.scheme);
  const Word& right = word(pp.right, cert.scheme);
  if (!is_palindrome(left) || !is_palindrome(right)) {
    throw CertificateFailure(who + " has odd parity but a factor is not a palindrome");
  }
  if (concat(left, right) != w) {
    throw CertificateFailure(who + " differs from the product of its factors");
  }
  if (cert.palindromic_rotations != 0) {
    throw CertificateFailure(who + " has odd parity but a palindromic rotation");
  }
  return cert;
}

Word enumerate_word(Rational x, Scheme roots) { return Enumerator{}.word(x, roots); }

Factorization factorization(Rational x, Scheme roots) {
  return Enumerator{}.factorization(x, roots);
}

PalindromeCertificate palindrome_certificate(Rational x, Scheme roots) {
  return Enumerator{}.certificate(x, roots);
}

std::string to_string(FactorCase c) {
  switch (c) {
    case FactorCase::Base: return "base";
    case FactorCase::EvenProduct: return "even";
    case FactorCase::OddProduct: return "odd";
  }
  return "?";
}

std::string to_string(Scheme s) { return s == Scheme::Positive ? "positive" : "negative"; }

}  // namespace fareyprim
