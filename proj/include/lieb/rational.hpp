#ifndef LIEB_RATIONAL_HPP
#define LIEB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "lieb/error.hpp"

namespace lieb {

// Exact rational coefficients.  GMP keeps values canonical (reduced, positive
// denominator) as long as arithmetic goes through mpq_class operators; raw
// constructions below canonicalize explicitly.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q".  Anything else is rejected.
inline Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw domain_error("empty rational literal");
  std::size_t slash = text.find('/');
  auto digits = [](const std::string& s, bool sign_ok) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (sign_ok && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits(text, true)) throw domain_error("bad rational literal: " + text);
    return Rational(text);
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false))
    throw domain_error("bad rational literal: " + text);
  Rational d(den);
  if (d == 0) throw domain_error("zero denominator in: " + text);
  Rational r(Rational(num) / d);
  r.canonicalize();
  return r;
}

// "p" when integral, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
  return r.get_str();
}

}  // namespace lieb

#endif  // LIEB_RATIONAL_HPP
